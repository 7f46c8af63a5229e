"""Constructors and counters for small classification tables.

Polytopes with linear h*-polynomial come in two families: Lawrence
prisms (vertical segments of prescribed heights over a unimodular
simplex) and, in volume 4 only, an exceptional class built from the
triangle with vertices (0,0), (2,0), (0,2) by iterated pyramids. The
number of classes with volume V and degree 1 in dimension n is
p(n, V) plus one in the exceptional case, where p counts partitions of
V into at most n parts; the count stabilizes for n >= V.

This module also enumerates, at desk scale, all lattice polygons of
bounded volume (by walking convex edge chains) and all lattice
simplices of a given volume (one Hermite-form matrix per left orbit of
edge matrices), deduplicating with the canonical normal form. On top of
the tables sit an h*-census and evidence scanners for two open
questions: the bound h*_1 <= 3 h*_2 + 4 for quadratic h* (a theorem in
the plane) and the growth of volume against the leading coefficient.
"""

from dataclasses import dataclass
from functools import cache

from .errors import AllHeightsZero, InternalInconsistency, ValidationError
from .ehrhart import HStarPolynomial, hstar
from .polytope import LatticePolytope, normal_form, normalized_volume
from .pyramids import k_fold_pyramid


@dataclass(frozen=True)
class ClassificationTable:
    """Equivalence classes with fixed dimension and volume (and degree if set).

    classes holds (normal_form, representative) pairs, sorted by normal
    form; representatives are pairwise inequivalent by construction.
    """

    volume: int
    degree: object
    dim: int
    classes: tuple

    @property
    def count(self):
        return len(self.classes)


@dataclass(frozen=True)
class HStarCensusRow:
    hstar: object
    dim: int
    count: int


def lawrence_prism(heights):
    """Lawrence prism with the given heights, in dimension len(heights).

    Vertices are the unimodular base simplex 0, e_1, ..., e_(n-1) in the
    hyperplane x_n = 0 together with each base vertex raised by its
    height. The construction is validated behaviorally: the result must
    have h* = 1 + (sum(heights) - 1) t and normalized volume
    sum(heights), else InternalInconsistency.
    """
    ks = tuple(sorted(int(k) for k in heights))
    n = len(ks)
    if n < 1:
        raise ValidationError("need at least one height")
    if any(k < 0 for k in ks):
        raise ValidationError("heights must be nonnegative")
    if ks[-1] == 0:
        raise AllHeightsZero("at least one height must be positive")
    base = [(0,) * n]
    base += [tuple(1 if j == i - 2 else 0 for j in range(n)) for i in range(2, n + 1)]
    verts = []
    for u, k in zip(base, ks):
        verts.append(u)
        if k > 0:
            verts.append(u[:-1] + (u[-1] + k,))
    P = LatticePolytope(n, tuple(dict.fromkeys(verts)))
    total = sum(ks)
    expected = (1,) if total == 1 else (1, total - 1)
    if hstar(P).coefficients != expected or normalized_volume(P) != total:
        raise InternalInconsistency(
            f"prism with heights {ks} fails its h* validation"
        )
    return P


# the planar triangle conv{(0,0), (2,0), (0,2)}; the only degree-1 class
# that is not a Lawrence prism, in every dimension, via iterated pyramids
_EXCEPTIONAL_BASE = ((0, 0), (2, 0), (0, 2))


def exceptional_triangle(n):
    """The (n-2)-fold pyramid over conv{(0,0), (2,0), (0,2)}; needs n >= 2."""
    if n < 2:
        raise ValidationError("the exceptional class needs dimension >= 2")
    return k_fold_pyramid(LatticePolytope(2, _EXCEPTIONAL_BASE), n - 2)


@cache
def partition_count(n, V):
    """p(n, V): partitions of V into at most n nonnegative parts."""
    if V < 0:
        return 0
    if V == 0:
        return 1
    if n == 0:
        return 0
    return partition_count(n - 1, V) + partition_count(n, V - n)


def c_linear(V, n):
    """Number of classes with normalized volume V and degree 1 in dim n."""
    if V < 2 or n < 1:
        raise ValidationError("need V >= 2 and n >= 1")
    return partition_count(n, V) + (1 if V == 4 and n >= 2 else 0)


def _direction_cmp(a, b):
    """Exact counterclockwise comparison of directions, starting at (1, 0).

    Negative when a points at a strictly smaller angle than b; directions
    in the same half plane are ordered by the sign of their cross
    product, which is exact.
    """
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return 0 if cross == 0 else (-1 if cross > 0 else 1)


def _direction_ranks(B):
    """Map each primitive direction with coordinates in [-B, B] to its rank."""
    from functools import cmp_to_key
    from math import gcd

    dirs = set()
    for x in range(-B, B + 1):
        for y in range(-B, B + 1):
            if (x, y) == (0, 0):
                continue
            g = gcd(abs(x), abs(y))
            dirs.add((x // g, y // g))
    ordered = sorted(dirs, key=cmp_to_key(_direction_cmp))
    return {d: i for i, d in enumerate(ordered)}


def _convex_chains(vmax, B):
    """All strictly convex lattice polygons with 2*area <= vmax, up to
    translation, whose bounding box fits in a B x B square.

    The walk starts at the bottom-most (then left-most) vertex, placed at
    the origin, and adds boundary edges in strictly increasing direction
    order; each polygon is generated exactly once. Partial fan areas from
    the start vertex only grow, which gives the pruning.
    """
    from math import gcd

    rank = _direction_ranks(B)
    edges = []
    for dx in range(-B, B + 1):
        for dy in range(-B, B + 1):
            if (dx, dy) == (0, 0):
                continue
            g = gcd(abs(dx), abs(dy))
            edges.append((rank[(dx // g, dy // g)], dx, dy))
    edges.sort()
    results = []

    def walk(chain, last_rank, acc, min_x, max_x):
        px, py = chain[-1]
        if len(chain) >= 3:
            g = gcd(abs(px), abs(py))
            if rank[(-px // g, -py // g)] > last_rank:
                results.append((tuple(chain), acc))
        for r, dx, dy in edges:
            if r <= last_rank:
                continue
            nx, ny = px + dx, py + dy
            if ny < 0 or ny > B or (ny == 0 and nx <= 0):
                continue
            lo, hi = min(min_x, nx), max(max_x, nx)
            if hi - lo > B:
                continue
            if len(chain) >= 2:
                d = px * ny - py * nx
                if d < 1 or acc + d > vmax:
                    continue
                new_acc = acc + d
            else:
                new_acc = 0
            chain.append((nx, ny))
            walk(chain, r, new_acc, lo, hi)
            chain.pop()

    walk([(0, 0)], -1, 0, 0, 0)
    return results


def enumerate_2d(vmax, box_size=None):
    """Classification tables of all polygons with normalized volume <= vmax.

    Enumerates convex vertex chains inside a box of side box_size
    (default vmax), deduplicates by normal form and buckets the classes
    by (volume, degree). An undersized box cannot go unnoticed as long as
    the degree-1 counts are compared against c_linear, which the test
    suites do.
    """
    if vmax < 1:
        raise ValidationError("vmax must be positive")
    B = box_size if box_size is not None else vmax
    seen = {}
    for chain, double_area in _convex_chains(vmax, B):
        if double_area < 1 or double_area > vmax:
            continue
        P = LatticePolytope(2, chain)
        nf = normal_form(P)
        if nf not in seen:
            seen[nf] = P
    buckets = {}
    for nf, P in seen.items():
        V = normalized_volume(P)
        d = hstar(P).degree
        buckets.setdefault((V, d), []).append((nf, P))
    return {
        (V, d): ClassificationTable(
            volume=V, degree=d, dim=2, classes=tuple(sorted(pairs, key=lambda p: p[0].matrix))
        )
        for (V, d), pairs in sorted(buckets.items())
    }


def _ordered_factorizations(V, n):
    if n == 1:
        yield (V,)
        return
    for d in range(1, V + 1):
        if V % d == 0:
            for rest in _ordered_factorizations(V // d, n - 1):
                yield (d,) + rest


def _hermite_matrices(n, V):
    """All upper-triangular Hermite matrices with determinant V.

    One matrix per left GL(n, Z)-orbit of integer matrices of determinant
    +-V: positive diagonal, column entries above the diagonal reduced
    modulo the diagonal entry.
    """
    from itertools import product as iproduct

    for diag in _ordered_factorizations(V, n):
        ranges = []
        for j in range(n):
            for i in range(j):
                ranges.append(range(diag[j]))
        for combo in iproduct(*ranges):
            H = [[0] * n for _ in range(n)]
            pos = 0
            for j in range(n):
                for i in range(j):
                    H[i][j] = combo[pos]
                    pos += 1
                H[j][j] = diag[j]
            yield H


def enumerate_simplices(n, V):
    """All n-dimensional lattice simplices of normalized volume V, up to
    equivalence.

    Every simplex with a vertex moved to the origin has an edge matrix
    with a unique Hermite representative, so running over all Hermite
    matrices of determinant V and deduplicating by normal form covers
    every class (the normal form also kills the remaining freedom of
    vertex order and base point, which the Hermite form alone does not).
    """
    if n < 1 or V < 1:
        raise ValidationError("need n >= 1 and V >= 1")
    seen = {}
    origin = (0,) * n
    for H in _hermite_matrices(n, V):
        cols = tuple(tuple(H[i][j] for i in range(n)) for j in range(n))
        P = LatticePolytope(n, (origin,) + cols)
        nf = normal_form(P)
        if nf not in seen:
            seen[nf] = P
    classes = tuple(sorted(seen.items(), key=lambda p: p[0].matrix))
    return ClassificationTable(volume=V, degree=None, dim=n, classes=classes)


def census_by_hstar(tables):
    """Group classes of the given tables by exact h*-polynomial.

    For every table with a fixed degree the per-h* counts must add up to
    the table count; a mismatch raises InternalInconsistency.
    """
    rows = {}
    for table in tables:
        for _, P in table.classes:
            key = (hstar(P).coefficients, table.dim)
            rows[key] = rows.get(key, 0) + 1
        if table.degree is not None:
            matching = sum(
                1
                for _, P in table.classes
                if hstar(P).normalized_volume == table.volume
                and hstar(P).degree == table.degree
            )
            if matching != table.count:
                raise InternalInconsistency(
                    f"census of table (V={table.volume}, d={table.degree}) does not add up"
                )
    out = []
    for (coeffs, dim), count in sorted(rows.items()):
        out.append(HStarCensusRow(hstar=HStarPolynomial(coeffs, dim), dim=dim, count=count))
    return out


@dataclass(frozen=True)
class ScottScanReport:
    """Per-class slack of h*_1 <= 3 h*_2 + 4 over the quadratic classes."""

    entries: tuple
    violations: tuple

    @property
    def max_slack(self):
        return max((e[-1] for e in self.entries), default=None)

    @property
    def min_slack(self):
        return min((e[-1] for e in self.entries), default=None)


def scan_scott(tables):
    """Check h*_1 <= 3 h*_2 + 4 on every degree-2 class of the tables.

    Entries are (normal_form, h1, h2, slack) with slack = 3 h2 + 4 - h1;
    violations collects the entries with negative slack. In the plane a
    violation is impossible, so one there means an enumeration bug.
    """
    entries = []
    violations = []
    for table in tables:
        for nf, P in table.classes:
            h = hstar(P)
            if h.degree != 2:
                continue
            h1, h2 = h.coefficients[1], h.coefficients[2]
            slack = 3 * h2 + 4 - h1
            entry = (nf, h1, h2, slack)
            entries.append(entry)
            if slack < 0:
                violations.append(entry)
    return ScottScanReport(entries=tuple(entries), violations=tuple(violations))


def scan_leading_coefficient(tables):
    """Evidence table: (degree, leading h* coefficient) -> largest volume seen.

    No assertion is made; whether the volume is bounded in terms of the
    leading coefficient alone is open.
    """
    rows = {}
    for table in tables:
        for _, P in table.classes:
            h = hstar(P)
            key = (h.degree, h.coefficients[-1])
            V = h.normalized_volume
            rows[key] = max(rows.get(key, 0), V)
    return tuple(sorted(rows.items()))
