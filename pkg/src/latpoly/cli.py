"""Command-line interface.

One subcommand per pipeline: h*-data, point counts, volume, normal
forms and equivalence, pyramid construction/detection/peeling, monoid
generators, the toric ideal, the dimension bounds, classification
tables, the two conjecture scanners, the h*-census and the full
invariant runner. All JSON output is canonically ordered so repeated
runs are byte-identical; seeds are explicit flags with documented
defaults.

Exit codes: 0 success, 1 violated invariant (including verify-all
failures), 2 usage or parse errors.
"""

import argparse
import sys

from . import __version__
from .classify import (
    census_by_hstar,
    enumerate_2d,
    enumerate_simplices,
    scan_leading_coefficient,
    scan_scott,
)
from .corpus import shipped_corpus_dir
from .ehrhart import codegree, degree, hstar
from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    LatPolyError,
    ParseError,
    RegularSequenceNotFound,
    ValidationError,
)
from .monoid import (
    algebraic_pyramid_apexes,
    binomial_count_bound,
    minimal_monoid_generators,
    pyramid_detectors_agree,
    stabilization_index,
    theorem_bound,
    toric_ideal_minimal_generators,
)
from .polyio import canonical_json, parse_polytope_file, polytope_to_json_obj
from .polytope import (
    are_equivalent,
    interior_points_in_dilate,
    lattice_points_in_dilate,
    normal_form,
    normalized_volume,
)
from .pyramids import geometric_pyramid_apexes, k_fold_pyramid, peel
from .verify import run_verify_all


def _load(path):
    if path == "-":
        from .polyio import parse_polytope_text

        return parse_polytope_text(sys.stdin.read(), source="<stdin>")
    return parse_polytope_file(path)


def _emit(obj, fmt):
    if fmt == "json":
        sys.stdout.write(canonical_json(obj))
    else:
        _emit_table(obj)


def _emit_table(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, (dict, list)):
                sys.stdout.write(f"{pad}{key}:\n")
                _emit_table(value, indent + 1)
            else:
                sys.stdout.write(f"{pad}{key}: {value}\n")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)):
                _emit_table(value, indent)
                sys.stdout.write("\n" if indent == 0 else "")
            else:
                sys.stdout.write(f"{pad}{value}\n")
    else:
        sys.stdout.write(f"{pad}{obj}\n")


def _add_format(parser):
    parser.add_argument(
        "--format", choices=("json", "table"), default="json", help="output format"
    )


def _nf_obj(nf):
    return {"dim": nf.dim, "matrix": [list(r) for r in nf.matrix], "vertexCount": nf.vertex_count}


def _binomial_obj(b, variables):
    names = [name for name, _ in variables]
    return {
        "degree": b.degree,
        "minus": {names[i]: e for i, e in enumerate(b.minus) if e},
        "plus": {names[i]: e for i, e in enumerate(b.plus) if e},
    }


def cmd_hstar(args):
    P = _load(args.polytope)
    h = hstar(P)
    _emit(
        {
            "codegree": codegree(P),
            "degree": degree(P),
            "hstar": list(h.coefficients),
            "nv": h.normalized_volume,
        },
        args.format,
    )
    return 0


def cmd_points(args):
    P = _load(args.polytope)
    count, pts = (
        interior_points_in_dilate(P, args.dilation)
        if args.interior
        else lattice_points_in_dilate(P, args.dilation)
    )
    obj = {"count": count, "dilation": args.dilation, "interior": bool(args.interior)}
    if not args.count_only:
        obj["points"] = [list(p) for p in pts]
    _emit(obj, args.format)
    return 0


def cmd_volume(args):
    P = _load(args.polytope)
    _emit({"nv": normalized_volume(P)}, args.format)
    return 0


def cmd_normal_form(args):
    P = _load(args.polytope)
    _emit(_nf_obj(normal_form(P)), args.format)
    return 0


def cmd_equiv(args):
    P, Q = _load(args.first), _load(args.second)
    _emit({"equivalent": are_equivalent(P, Q)}, args.format)
    return 0


def cmd_pyramid(args):
    P = _load(args.polytope)
    if args.action == "build":
        _emit(polytope_to_json_obj(k_fold_pyramid(P, args.multiplicity)), args.format)
    elif args.action == "detect":
        apexes = geometric_pyramid_apexes(P)
        _emit(
            {
                "apexes": apexes,
                "apexVertices": [list(P.vertices[i]) for i in apexes],
                "isPyramid": bool(apexes),
            },
            args.format,
        )
    else:
        dec = peel(P)
        _emit(
            {
                "apexes": [list(v) for v in dec.apex_chain],
                "core": polytope_to_json_obj(dec.core),
                "multiplicity": dec.multiplicity,
            },
            args.format,
        )
    return 0


def cmd_monoid_gens(args):
    P = _load(args.polytope)
    gens = minimal_monoid_generators(P)
    _emit(
        {
            "count": gens.count,
            "degrees": list(gens.degrees),
            "generators": [list(g) for g in gens.generators],
            "maxDegree": max(gens.degrees),
        },
        args.format,
    )
    return 0


def cmd_toric_ideal(args):
    P = _load(args.polytope)
    pres = toric_ideal_minimal_generators(minimal_monoid_generators(P))
    _emit(
        {
            "binomials": [_binomial_obj(b, pres.variables) for b in pres.minimal_generators],
            "count": pres.count,
            "perDegreeCounts": {str(d): c for d, c in pres.per_degree_counts},
            "variables": [{"degree": d, "name": n} for n, d in pres.variables],
        },
        args.format,
    )
    return 0


def cmd_pyramid_algebraic(args):
    P = _load(args.polytope)
    gens = minimal_monoid_generators(P)
    pres = toric_ideal_minimal_generators(gens)
    apexes = algebraic_pyramid_apexes(pres)
    _emit(
        {
            "apexPoints": [list(gens.generators[i]) for i in apexes],
            "apexes": apexes,
            "detectorsAgree": pyramid_detectors_agree(P),
            "isPyramid": bool(apexes),
        },
        args.format,
    )
    return 0


def cmd_bound(args):
    _emit(
        {
            "binomialCountBound": binomial_count_bound(args.d, args.V),
            "stabilizationIndex": stabilization_index(args.d, args.V),
            "theoremBound": theorem_bound(args.d, args.V),
        },
        args.format,
    )
    return 0


def _table_rows(tables):
    rows = []
    for table in tables:
        for nf, P in table.classes:
            h = hstar(P)
            rows.append(
                {
                    "degree": h.degree,
                    "hstar": list(h.coefficients),
                    "normalForm": [list(r) for r in nf.matrix],
                    "nv": h.normalized_volume,
                }
            )
    return rows


def cmd_classify(args):
    if args.simplices_only or args.dim >= 3:
        tables = [enumerate_simplices(args.dim, args.volume)]
    elif args.dim == 2:
        buckets = enumerate_2d(args.volume, box_size=args.box_size)
        tables = [t for (V, _), t in sorted(buckets.items()) if V == args.volume]
    else:
        tables = [enumerate_simplices(1, args.volume)]
    _emit(_table_rows(tables), args.format)
    return 0


def cmd_scan_scott(args):
    tables = enumerate_2d(args.vmax, box_size=args.box_size)
    report = scan_scott(tables.values())
    _emit(
        {
            "entries": [
                {"h1": h1, "h2": h2, "normalForm": [list(r) for r in nf.matrix], "slack": slack}
                for nf, h1, h2, slack in report.entries
            ],
            "maxSlack": report.max_slack,
            "minSlack": report.min_slack,
            "violations": len(report.violations),
            "vmax": args.vmax,
        },
        args.format,
    )
    return 0 if not report.violations else 1


def cmd_census(args):
    tables = enumerate_2d(args.vmax, box_size=args.box_size)
    rows = census_by_hstar(tables.values())
    leading = scan_leading_coefficient(tables.values())
    _emit(
        {
            "census": [
                {"count": r.count, "dim": r.dim, "hstar": list(r.hstar.coefficients)}
                for r in rows
            ],
            "leadingCoefficientEvidence": [
                {"degree": d, "leading": hd, "maxNv": v} for (d, hd), v in leading
            ],
            "vmax": args.vmax,
        },
        args.format,
    )
    return 0


def cmd_verify_all(args):
    code, report = run_verify_all(corpus_dir=args.corpus, seed=args.seed)
    _emit(report, args.format)
    return code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latpoly",
        description="Exact lattice-polytope computations: h*-data, pyramids, "
        "toric ideals and small classification tables.",
    )
    parser.add_argument("--version", action="version", version=f"latpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hstar", help="h*-polynomial, degree, codegree and volume")
    p.add_argument("polytope", help="polytope file, or - for stdin")
    _add_format(p)
    p.set_defaults(fn=cmd_hstar)

    p = sub.add_parser("points", help="lattice points of a dilate")
    p.add_argument("polytope")
    p.add_argument("-k", "--dilation", type=int, default=1)
    p.add_argument("--interior", action="store_true", help="count interior points only")
    p.add_argument("--count-only", action="store_true", help="omit the point list")
    _add_format(p)
    p.set_defaults(fn=cmd_points)

    p = sub.add_parser("volume", help="normalized volume")
    p.add_argument("polytope")
    _add_format(p)
    p.set_defaults(fn=cmd_volume)

    p = sub.add_parser("normal-form", help="canonical vertex matrix")
    p.add_argument("polytope")
    _add_format(p)
    p.set_defaults(fn=cmd_normal_form)

    p = sub.add_parser("equiv", help="affine unimodular equivalence of two polytopes")
    p.add_argument("first")
    p.add_argument("second")
    _add_format(p)
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("pyramid", help="build, detect or peel pyramids")
    p.add_argument("action", choices=("build", "detect", "peel"))
    p.add_argument("polytope")
    p.add_argument("-k", "--multiplicity", type=int, default=1, help="for build")
    _add_format(p)
    p.set_defaults(fn=cmd_pyramid)

    p = sub.add_parser("monoid-gens", help="minimal generators of the graded monoid")
    p.add_argument("polytope")
    _add_format(p)
    p.set_defaults(fn=cmd_monoid_gens)

    p = sub.add_parser("toric-ideal", help="minimal binomial generators of the toric ideal")
    p.add_argument("polytope")
    _add_format(p)
    p.set_defaults(fn=cmd_toric_ideal)

    p = sub.add_parser(
        "pyramid-algebraic", help="pyramid detection through the toric ideal"
    )
    p.add_argument("polytope")
    _add_format(p)
    p.set_defaults(fn=cmd_pyramid_algebraic)

    p = sub.add_parser("bound", help="dimension and binomial-count bounds for (d, V)")
    p.add_argument("d", type=int)
    p.add_argument("V", type=int)
    _add_format(p)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("classify", help="equivalence classes at fixed dimension and volume")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--volume", type=int, required=True)
    p.add_argument(
        "--simplices-only", action="store_true", help="restrict to simplices at any dimension"
    )
    p.add_argument("--box-size", type=int, default=None, help="2d search box (default: volume)")
    _add_format(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("scan-scott", help="check h1 <= 3 h2 + 4 over quadratic polygons")
    p.add_argument("--vmax", type=int, default=8)
    p.add_argument("--box-size", type=int, default=None)
    _add_format(p)
    p.set_defaults(fn=cmd_scan_scott)

    p = sub.add_parser("census", help="group polygon classes by h*-polynomial")
    p.add_argument("--vmax", type=int, default=6)
    p.add_argument("--box-size", type=int, default=None)
    _add_format(p)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("verify-all", help="run every invariant suite over a corpus")
    p.add_argument(
        "--corpus",
        default=None,
        help=f"corpus directory (default: shipped corpus at {shipped_corpus_dir()})",
    )
    p.add_argument("--seed", type=int, default=42, help="seed for all randomized checks")
    _add_format(p)
    p.set_defaults(fn=cmd_verify_all)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValidationError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalInconsistency, RegularSequenceNotFound) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    except LatPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
