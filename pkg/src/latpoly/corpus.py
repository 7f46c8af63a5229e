"""The shipped reference corpus: curated pairwise-inequivalent polytopes.

The corpus spans dimensions 1 through 4 and degrees 0 through 2, with
known h*-data recorded in expected.json next to the vertex files. Every
invariant suite runs against it.
"""

import json
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .polyio import parse_polytope_file


def shipped_corpus_dir():
    """Directory with the corpus files installed alongside the package."""
    return Path(str(resources.files("latpoly") / "data" / "corpus"))


def load_corpus(directory=None):
    """Sorted (name, polytope) pairs from all .poly files in the directory."""
    directory = Path(directory) if directory is not None else shipped_corpus_dir()
    if not directory.is_dir():
        raise ParseError(f"corpus directory {directory} does not exist")
    out = []
    for path in sorted(directory.glob("*.poly")):
        out.append((path.stem, parse_polytope_file(path)))
    if not out:
        raise ParseError(f"no .poly files in {directory}")
    return out


def load_expected(directory=None):
    """Golden h*-data for the corpus: name -> {hstar, nv, degree, codegree}."""
    directory = Path(directory) if directory is not None else shipped_corpus_dir()
    path = directory / "expected.json"
    if not path.is_file():
        raise ParseError(f"golden file {path} does not exist")
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)
