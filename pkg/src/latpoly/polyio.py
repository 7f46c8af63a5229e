"""Reading and writing polytopes, and canonical JSON output.

Text format: a `dim n` header line, then one vertex per line as n
space-separated integers; `#` starts a comment and blank lines are
skipped. A file whose first non-space character is `{` is instead read
as JSON of the form {"dim": n, "vertices": [[...], ...]}. Both formats
produce identical polytopes.
"""

import json

from .errors import ParseError
from .polytope import LatticePolytope


def parse_polytope_text(text, source="<input>"):
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text, source)
    dim = None
    vertices = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if dim is None:
            if tokens[0] != "dim" or len(tokens) != 2:
                raise ParseError(f"{source}: expected a 'dim n' header", line=lineno)
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(f"{source}: bad dimension {tokens[1]!r}", line=lineno)
            continue
        if len(tokens) != dim:
            raise ParseError(
                f"{source}: expected {dim} coordinates, got {len(tokens)}", line=lineno
            )
        coords = []
        for pos, tok in enumerate(tokens):
            try:
                coords.append(int(tok))
            except ValueError:
                column = raw.index(tok) + 1
                raise ParseError(
                    f"{source}: {tok!r} is not an integer", line=lineno, column=column
                )
        vertices.append(tuple(coords))
    if dim is None:
        raise ParseError(f"{source}: empty input")
    if not vertices:
        raise ParseError(f"{source}: no vertices given")
    return LatticePolytope(dim, tuple(vertices))


def _parse_json(text, source):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno)
    if not isinstance(obj, dict) or "dim" not in obj or "vertices" not in obj:
        raise ParseError(f"{source}: JSON polytope needs 'dim' and 'vertices' keys")
    try:
        dim = int(obj["dim"])
        vertices = tuple(tuple(int(x) for x in v) for v in obj["vertices"])
    except (TypeError, ValueError):
        raise ParseError(f"{source}: malformed JSON vertex data")
    return LatticePolytope(dim, vertices)


def parse_polytope_file(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")
    return parse_polytope_text(text, source=str(path))


def polytope_to_json_obj(P):
    return {"dim": P.dim, "vertices": [list(v) for v in P.vertices]}


def polytope_to_text(P):
    lines = [f"dim {P.dim}"]
    lines += [" ".join(str(x) for x in v) for v in P.vertices]
    return "\n".join(lines) + "\n"


def canonical_json(obj):
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
