"""Cross-module invariant suites over the shipped corpus.

Every numbered check here is an executable property: counting identities
between independent code paths, invariance under random unimodular maps,
pyramid and reciprocity identities, generator and binomial bounds with
defensive overshoot, agreement of the two pyramid detectors, the
artinian quotient cross-check and the classification counts against the
closed formula. The runner is deterministic for a fixed seed and its
report is byte-stable.
"""

from fractions import Fraction
from itertools import combinations

from .classify import (
    c_linear,
    census_by_hstar,
    enumerate_2d,
    enumerate_simplices,
    lawrence_prism,
    partition_count,
    scan_scott,
)
from .corpus import load_corpus, load_expected
from .ehrhart import codegree, degree, ehrhart_data, hstar, hstar_from_series
from .errors import LatPolyError
from .intlinalg import dot
from .monoid import (
    artinian_hilbert_function,
    binomial_count_bound,
    graded_cone,
    minimal_monoid_generators,
    pyramid_detectors_agree,
    stabilization_index,
    theorem_bound,
    toric_ideal_minimal_generators,
    verify_generation,
)
from .polytope import (
    LatticePolytope,
    apply_map,
    are_equivalent,
    interior_points_in_dilate,
    lattice_points_in_dilate,
    normal_form,
    normalized_volume,
    random_unimodular_map,
)
from .pyramids import geometric_pyramid_apexes, k_fold_pyramid, peel, pyramid


class CheckFailure(AssertionError):
    pass


def _require(condition, message):
    if not condition:
        raise CheckFailure(message)


def _map_complexity(dim):
    # keeps skewed coordinates small enough for bounding-box scans
    return 3 if dim <= 3 else 2


def _member_by_caratheodory(P, x):
    """Membership test independent of the facet path.

    x lies in conv(vertices) iff it lies in some simplex spanned by an
    affinely independent (n+1)-subset of the vertices, decided by exact
    barycentric coordinates.
    """
    n = P.dim
    verts = P.vertices
    for subset in combinations(range(len(verts)), n + 1):
        pts = [verts[i] for i in subset]
        M = [[Fraction(pts[j][i]) for j in range(n + 1)] + [Fraction(x[i])] for i in range(n)]
        M.append([Fraction(1)] * (n + 1) + [Fraction(1)])
        rank = 0
        cols = []
        for col in range(n + 1):
            piv = next((r for r in range(rank, n + 1) if M[r][col] != 0), None)
            if piv is None:
                continue
            M[rank], M[piv] = M[piv], M[rank]
            inv = 1 / M[rank][col]
            M[rank] = [v * inv for v in M[rank]]
            for r in range(n + 1):
                if r != rank and M[r][col] != 0:
                    f = M[r][col]
                    M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
            cols.append(col)
            rank += 1
        if rank != n + 1:
            continue
        lam = [M[r][n + 1] for r in range(n + 1)]
        if all(v >= 0 for v in lam):
            return True
    return False


def _check_corpus_distinct(corpus, seed):
    _require(len(corpus) >= 10, f"corpus has only {len(corpus)} members")
    forms = {}
    for name, P in corpus:
        key = (P.dim, normal_form(P).matrix)
        _require(key not in forms, f"{name} and {forms.get(key)} share a normal form")
        forms[key] = name


def _check_golden_data(corpus, seed, corpus_dir):
    expected = load_expected(corpus_dir)
    for name, P in corpus:
        _require(name in expected, f"{name} missing from expected.json")
        want = expected[name]
        h = hstar(P)
        _require(
            list(h.coefficients) == want["hstar"],
            f"{name}: h* {list(h.coefficients)} != golden {want['hstar']}",
        )
        _require(normalized_volume(P) == want["nv"], f"{name}: nv mismatch")
        _require(degree(P) == want["degree"], f"{name}: degree mismatch")
        _require(codegree(P) == want["codegree"], f"{name}: codegree mismatch")


def _check_agl_invariance(corpus, seed):
    for name, P in corpus:
        nf = normal_form(P)
        nv = normalized_volume(P)
        counts = [lattice_points_in_dilate(P, k)[0] for k in range(1, P.dim + 1)]
        for i in range(20):
            g = random_unimodular_map(P.dim, seed * 1000 + i, _map_complexity(P.dim))
            Q = apply_map(P, g)
            _require(normal_form(Q) == nf, f"{name}: normal form moved under map {i}")
            _require(normalized_volume(Q) == nv, f"{name}: volume moved under map {i}")
            got = [lattice_points_in_dilate(Q, k)[0] for k in range(1, P.dim + 1)]
            _require(got == counts, f"{name}: dilate counts moved under map {i}")


def _check_facet_roundtrip(corpus, seed):
    for name, P in corpus:
        if P.dim == 0:
            continue
        box = [
            range(min(v[i] for v in P.vertices), max(v[i] for v in P.vertices) + 1)
            for i in range(P.dim)
        ]
        from itertools import product as iproduct

        brute = sorted(x for x in iproduct(*box) if _member_by_caratheodory(P, x))
        fast = sorted(lattice_points_in_dilate(P, 1)[1])
        _require(brute == fast, f"{name}: facet and barycentric point sets differ")


def _check_volume_is_hstar_sum(corpus, seed):
    for name, P in corpus:
        _require(
            normalized_volume(P) == sum(hstar(P).coefficients),
            f"{name}: nv != sum of h* coefficients",
        )


def _check_series_roundtrip(corpus, seed):
    for name, P in corpus:
        K = P.dim + 2
        data = ehrhart_data(P, K)
        h = hstar_from_series(data.counts[: P.dim + 1], P.dim)
        for k in range(K + 1):
            _require(
                h.count_at(k) == data.counts[k],
                f"{name}: series re-expansion fails at k={k}",
            )
        _require(h == hstar(P), f"{name}: two h* paths disagree")


def _check_hstar_agl_invariant(corpus, seed):
    for name, P in corpus:
        h = hstar(P)
        for i in range(5):
            g = random_unimodular_map(P.dim, seed * 77 + i, _map_complexity(P.dim))
            _require(hstar(apply_map(P, g)) == h, f"{name}: h* moved under map {i}")


def _check_reciprocity(corpus, seed):
    for name, P in corpus:
        h = hstar(P)
        for k in range(1, P.dim + 3):
            got = interior_points_in_dilate(P, k)[0]
            _require(
                got == h.interior_count_at(k),
                f"{name}: reciprocity fails at k={k}: {got} != {h.interior_count_at(k)}",
            )


def _check_pyramid_identities(corpus, seed):
    for name, P in corpus:
        Q = pyramid(P)
        _require(hstar(Q).coefficients == hstar(P).coefficients, f"{name}: h* moved under pyramid")
        _require(normalized_volume(Q) == normalized_volume(P), f"{name}: nv moved under pyramid")
        _require(codegree(Q) == codegree(P) + 1, f"{name}: codegree did not increment")
        _require(degree(Q) == degree(P), f"{name}: degree moved under pyramid")
        LQ = [lattice_points_in_dilate(Q, k)[0] for k in range(P.dim + 2)]
        LP = [lattice_points_in_dilate(P, k)[0] for k in range(P.dim + 2)]
        for k in range(1, P.dim + 2):
            _require(
                LQ[k] - LQ[k - 1] == LP[k],
                f"{name}: pyramid series identity fails at k={k}",
            )
        _require(geometric_pyramid_apexes(Q), f"{name}: pyramid lost its apex")


def _check_peel(corpus, seed):
    for name, P in corpus:
        dec = peel(P)
        rebuilt = k_fold_pyramid(dec.core, dec.multiplicity)
        _require(rebuilt.dim == P.dim, f"{name}: peel/rebuild dimension mismatch")
        _require(are_equivalent(rebuilt, P), f"{name}: peel/rebuild not equivalent")
        other = peel(P, apex_rule="lexmax")
        _require(other.multiplicity == dec.multiplicity, f"{name}: peel depth depends on order")
        _require(
            other.core.dim == dec.core.dim and are_equivalent(other.core, dec.core),
            f"{name}: peel core class depends on order",
        )


def _check_monoid_bounds(corpus, seed):
    for name, P in corpus:
        n, d = P.dim, degree(P)
        V = normalized_volume(P)
        m1 = lattice_points_in_dilate(P, 1)[0]
        _require(m1 >= n + 1, f"{name}: fewer than n+1 height-1 points")
        gens = minimal_monoid_generators(P)
        _require(gens.count <= V + n, f"{name}: generator count over the bound")
        _require(
            max(gens.degrees) <= max(1, d),
            f"{name}: generator degree over the bound",
        )
        _require(
            sum(1 for g in gens.generators if g[-1] == 1) == m1,
            f"{name}: height-1 points missing from the generators",
        )
        _require(verify_generation(gens, max(1, d) + 2), f"{name}: generators do not generate")
        pres = toric_ideal_minimal_generators(gens)
        _require(
            all(b.degree <= 2 * d for b in pres.minimal_generators) if d >= 1
            else pres.count == 0,
            f"{name}: binomial degree over the bound",
        )
        if d >= 1:
            _require(
                pres.count <= binomial_count_bound(d, V),
                f"{name}: binomial count over the bound",
            )
        other = toric_ideal_minimal_generators(gens, tie_break="lexmax")
        _require(
            other.per_degree_counts == pres.per_degree_counts,
            f"{name}: per-degree counts depend on tie breaking",
        )


def _check_detectors(corpus, seed):
    jobs = []
    for name, P in corpus:
        jobs.append((name, P))
        jobs.append((name + "+pyramid", pyramid(P)))
    for i in range(20):
        name, P = corpus[i % len(corpus)]
        g = random_unimodular_map(P.dim, seed * 31 + i, _map_complexity(P.dim))
        jobs.append((f"{name}+map{i}", apply_map(P, g)))
    for label, P in jobs:
        _require(pyramid_detectors_agree(P), f"{label}: pyramid detectors disagree")


def _check_artinian(corpus, seed):
    for name, P in corpus:
        d = degree(P)
        h = hstar(P).coefficients
        expected = tuple(h[k] if k < len(h) else 0 for k in range(d + 3))
        got = artinian_hilbert_function(P, seed)
        _require(got == expected, f"{name}: artinian dimensions {got} != {expected}")


def _check_prism_identity(corpus, seed):
    for n in range(1, 6):
        for total in range(1, 11):
            for heights in _ascending_height_vectors(n, total):
                lawrence_prism(heights)  # self-validating construction


def _ascending_height_vectors(n, total):
    def rec(prefix, remaining, minimum):
        if len(prefix) == n:
            if remaining == 0:
                yield tuple(prefix)
            return
        slots = n - len(prefix)
        for k in range(minimum, remaining + 1):
            if k * slots > remaining:
                break
            yield from rec(prefix + [k], remaining - k, k)

    yield from rec([], total, 0)


def _check_classification_2d(corpus, seed):
    tables = enumerate_2d(8)
    for V in range(2, 9):
        got = tables[(V, 1)].count if (V, 1) in tables else 0
        _require(got == c_linear(V, 2), f"C({V},1,2) = {got} != {c_linear(V, 2)}")
    for (V, d), table in tables.items():
        if d == 0:
            _require(V == 1, f"degree-0 class with volume {V}")
            for _, P in table.classes:
                _require(peel(P).core.dim == 0, "degree-0 class does not peel to a point")
    census_by_hstar(tables.values())  # raises on a broken sum identity


def _check_scott(corpus, seed):
    tables = enumerate_2d(9)
    report = scan_scott(tables.values())
    _require(not report.violations, f"{len(report.violations)} violations of the planar bound")
    witness = normal_form(LatticePolytope(2, ((0, 0), (3, 0), (0, 3))))
    _require(
        any(nf == witness and slack == 0 for nf, _, _, slack in report.entries),
        "tight witness triangle not found",
    )


def _check_simplices(corpus, seed):
    for V in range(1, 5):
        low = enumerate_simplices(2, V)
        high = enumerate_simplices(3, V)
        for _, P in low.classes:
            _require(normalized_volume(P) == V, "simplex with wrong volume")
        lifted = [normal_form(pyramid(P)) for _, P in low.classes]
        _require(len(set(lifted)) == len(lifted), f"pyramids of (2,{V}) classes collide")
        high_forms = {nf for nf, _ in high.classes}
        _require(
            all(nf in high_forms for nf in lifted),
            f"pyramid of a (2,{V}) class missing from (3,{V})",
        )
        _require(low.count <= high.count, "class count dropped with dimension")


def _check_segments(corpus, seed):
    for V in range(2, 9):
        seg = LatticePolytope(1, ((0,), (V,)))
        _require(hstar(seg).coefficients == (1, V - 1), f"segment nv={V} h* wrong")
        shifted = LatticePolytope(1, ((3,), (3 + V,)))
        _require(are_equivalent(seg, shifted), "translated segment not equivalent")
        _require(c_linear(V, 1) == 1, f"c_linear({V},1) != 1")
    for V in range(2, 9):
        for n in range(V, V + 3):
            _require(
                c_linear(V, n) == c_linear(V, V),
                f"c_linear({V},{n}) not stable for n >= V",
            )
            _require(partition_count(n, V) == partition_count(V, V), "p(n,V) not stable")


def _check_bound_values(corpus, seed):
    _require(theorem_bound(1, 2) == 12, "theorem_bound(1,2) != 12")
    _require(theorem_bound(1, 4) == 40, "theorem_bound(1,4) != 40")
    _require(theorem_bound(2, 3) == 120, "theorem_bound(2,3) != 120")
    for d, V in ((1, 2), (1, 4), (2, 3), (2, 5)):
        _require(
            stabilization_index(d, V) == theorem_bound(d, V) - 1,
            "stabilization index is not bound - 1",
        )
    _require(binomial_count_bound(1, 2) == 3, "binomial_count_bound(1,2) != 3")
    _require(binomial_count_bound(1, 4) == 10, "binomial_count_bound(1,4) != 10")


def _check_cone_membership(corpus, seed):
    for name, P in corpus:
        cone = graded_cone(P)
        for k in range(0, P.dim + 2):
            for x in lattice_points_in_dilate(P, k)[1]:
                _require(cone.contains(x + (k,)), f"{name}: dilate point outside the cone")
        for a, b in P.facets:
            # pushing a vertex outward along a facet normal leaves the cone
            pushed = tuple(v + ai for v, ai in zip(P.vertices[0], a))
            if dot(a, pushed) > b:
                _require(not cone.contains(pushed + (1,)), f"{name}: cone membership too lax")


def run_verify_all(corpus_dir=None, seed=42):
    """Run every invariant suite; returns (exit_code, report dict).

    Exit code 0 means every check passed; 1 reports the failures in the
    machine-readable report. Deterministic for a fixed seed.
    """
    checks = (
        ("corpus-distinct-normal-forms", _check_corpus_distinct),
        ("golden-hstar-data", lambda c, s: _check_golden_data(c, s, corpus_dir)),
        ("agl-invariance", _check_agl_invariance),
        ("facet-roundtrip-oracle", _check_facet_roundtrip),
        ("volume-equals-hstar-sum", _check_volume_is_hstar_sum),
        ("series-roundtrip", _check_series_roundtrip),
        ("hstar-agl-invariant", _check_hstar_agl_invariant),
        ("reciprocity", _check_reciprocity),
        ("pyramid-identities", _check_pyramid_identities),
        ("peel-rebuild", _check_peel),
        ("cone-membership", _check_cone_membership),
        ("monoid-and-binomial-bounds", _check_monoid_bounds),
        ("pyramid-detector-agreement", _check_detectors),
        ("artinian-quotient", _check_artinian),
        ("lawrence-prism-identity", _check_prism_identity),
        ("classification-2d", _check_classification_2d),
        ("scott-scan", _check_scott),
        ("simplex-pyramid-injectivity", _check_simplices),
        ("segments-dimension-1", _check_segments),
        ("bound-values", _check_bound_values),
    )
    report = {"seed": seed, "checks": [], "failures": 0}
    try:
        corpus = load_corpus(corpus_dir)
    except LatPolyError as exc:
        report["checks"].append(
            {"name": "corpus-loads", "status": "fail", "detail": str(exc)}
        )
        report["failures"] = 1
        return 1, report
    report["corpusSize"] = len(corpus)
    for name, fn in checks:
        try:
            fn(corpus, seed)
            report["checks"].append({"name": name, "status": "pass", "detail": ""})
        except (CheckFailure, LatPolyError) as exc:
            report["checks"].append({"name": name, "status": "fail", "detail": str(exc)})
            report["failures"] += 1
    return (0 if report["failures"] == 0 else 1), report
