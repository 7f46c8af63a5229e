"""Full-dimensional lattice polytopes with exact integer arithmetic.

A polytope lives in Z^n and is given by its vertex list (V-representation).
Facets, lattice point enumeration, normalized volume, affine unimodular
equivalence and a canonical normal form are all computed exactly; there is
no floating point on any path.

The zero-dimensional polytope (a single point, represented with one empty
vertex vector) is accepted everywhere as a base case so that pyramid
peeling can bottom out on it.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
import random

from .errors import DimensionMismatch, NotFullDimensional, ValidationError
from .intlinalg import (
    column_hnf,
    det,
    dot,
    kernel_primitive_vector,
    rational_rank,
    saturated_span_basis,
    solve_integer_combination,
    vec_sub,
)


@dataclass(frozen=True)
class FacetDescription:
    """H-representation: pairs (normal, offset) with <normal, x> <= offset.

    Normals are primitive integer vectors; together the inequalities cut
    out exactly the convex hull of the defining vertices, with no
    redundant inequality.
    """

    facets: tuple


@dataclass(frozen=True)
class LatticePolytope:
    """An n-dimensional lattice polytope given by its vertices.

    Invariants enforced at construction: the vertex list is nonempty and
    duplicate-free, every listed point is an extreme point of the hull,
    and the affine span of the vertices is all of R^n.
    """

    dim: int
    vertices: tuple
    _facets: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ValidationError("dimension must be nonnegative")
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValidationError("vertex list is empty")
        for v in verts:
            if len(v) != n:
                raise ValidationError(f"vertex {v} does not have length {n}")
        if len(set(verts)) != len(verts):
            raise ValidationError("vertex list contains duplicates")
        if n == 0:
            object.__setattr__(self, "_facets", ())
            return
        diffs = [vec_sub(v, verts[0]) for v in verts[1:]]
        if rational_rank(diffs) != n:
            raise NotFullDimensional(
                f"affine span of the vertices has dimension {rational_rank(diffs)} < {n}"
            )
        facets = _hull_facets(verts, n)
        object.__setattr__(self, "_facets", facets)
        for v in verts:
            tight = [a for a, b in facets if dot(a, v) == b]
            if rational_rank(tight) != n:
                raise ValidationError(f"listed point {v} is not an extreme point of the hull")

    @property
    def facets(self):
        return self._facets

    @property
    def vertex_count(self):
        return len(self.vertices)


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> linear @ x + shift with an integer matrix of determinant +-1."""

    linear: tuple
    shift: tuple

    def __post_init__(self):
        linear = tuple(tuple(int(x) for x in row) for row in self.linear)
        shift = tuple(int(x) for x in self.shift)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "shift", shift)
        n = len(shift)
        if len(linear) != n or any(len(row) != n for row in linear):
            raise ValidationError("linear part must be square and match the shift length")
        if abs(det(linear)) != 1:
            raise ValidationError("linear part must have determinant +-1")

    @property
    def dim(self):
        return len(self.shift)

    def __call__(self, point):
        return tuple(dot(row, point) + s for row, s in zip(self.linear, self.shift))


@dataclass(frozen=True)
class NormalForm:
    """Canonical vertex matrix of an affine unimodular equivalence class.

    The matrix rows are the vertices of a distinguished representative
    polytope (first vertex at the origin), so two polytopes are equivalent
    exactly when their normal forms are equal.
    """

    matrix: tuple
    dim: int
    vertex_count: int


def _hull_facets(verts, n):
    """Irredundant facet inequalities of conv(verts), by n-subset search.

    Every facet hyperplane passes through n affinely independent points of
    the list, so scanning all n-subsets finds each facet at least once.
    Cost is O(C(V, n)) exact kernel solves, fine at the intended scale.
    """
    found = {}
    for subset in combinations(range(len(verts)), n):
        base = verts[subset[0]]
        rows = [vec_sub(verts[j], base) for j in subset[1:]]
        a = kernel_primitive_vector(rows, n)
        if a is None:
            continue
        b = dot(a, base)
        values = [dot(a, v) for v in verts]
        hi, lo = max(values), min(values)
        if hi == b and lo < b:
            found[(a, b)] = True
        elif lo == b and hi > b:
            found[(tuple(-x for x in a), -b)] = True
    return tuple(sorted(found))


def facet_description(P):
    """Facet inequalities of P; raises NotFullDimensional on bad input."""
    if not isinstance(P, LatticePolytope):
        raise ValidationError("expected a LatticePolytope")
    return FacetDescription(P.facets)


def _points_satisfying(constraints, box):
    """All integer points of a box satisfying <a, x> <= c constraints.

    The last coordinate is resolved per prefix by interval intersection
    instead of per-point tests, which is what keeps dilation scans cheap.
    Output is in lexicographic order.
    """
    n = len(box)
    if n == 0:
        return [()]
    lo_last, hi_last = box[-1]
    prefix_ranges = [range(lo, hi + 1) for lo, hi in box[:-1]]
    split = [(a[:-1], a[-1], c) for a, c in constraints]
    out = []
    for prefix in product(*prefix_ranges):
        lo, hi = lo_last, hi_last
        feasible = True
        for a_pre, a_last, c in split:
            s = c - dot(a_pre, prefix)
            if a_last > 0:
                hi = min(hi, s // a_last)
            elif a_last < 0:
                # a_last * x <= s  <=>  x >= ceil(s / a_last) = -(s // -a_last)
                lo = max(lo, -(s // -a_last))
            elif s < 0:
                feasible = False
                break
            if lo > hi:
                feasible = False
                break
        if feasible:
            out.extend(prefix + (x,) for x in range(lo, hi + 1))
    return out


@lru_cache(maxsize=4096)
def lattice_points_in_dilate(P, k):
    """(count, points) for the lattice points of the k-th dilate of P.

    k = 0 gives the single origin point. Points come back sorted
    lexicographically.
    """
    if k < 0:
        raise ValidationError("dilation factor must be nonnegative")
    if P.dim == 0:
        return 1, ((),)
    box = [
        (k * min(v[i] for v in P.vertices), k * max(v[i] for v in P.vertices))
        for i in range(P.dim)
    ]
    constraints = [(a, k * b) for a, b in P.facets]
    pts = _points_satisfying(constraints, box)
    return len(pts), tuple(pts)


@lru_cache(maxsize=4096)
def interior_points_in_dilate(P, k):
    """(count, points) for the interior lattice points of the k-th dilate."""
    if k < 1:
        raise ValidationError("dilation factor must be positive")
    if P.dim == 0:
        # the interior of a point in R^0 is the point itself
        return 1, ((),)
    box = [
        (k * min(v[i] for v in P.vertices), k * max(v[i] for v in P.vertices))
        for i in range(P.dim)
    ]
    constraints = [(a, k * b - 1) for a, b in P.facets]
    pts = _points_satisfying(constraints, box)
    return len(pts), tuple(pts)


def triangulation(P):
    """Decompose P into lattice simplices, returned as vertex index tuples.

    Fan construction: cone from the lexicographically smallest vertex over
    a recursive triangulation of each facet that avoids it. Facets are
    re-embedded full-dimensionally for the recursion; the re-embedding is
    an affine lattice isomorphism, so index tuples lift back unchanged.
    """
    n = P.dim
    verts = P.vertices
    if len(verts) == n + 1:
        return (tuple(range(n + 1)),)
    v0 = min(range(len(verts)), key=lambda i: verts[i])
    simplices = []
    for a, b in P.facets:
        if dot(a, verts[v0]) == b:
            continue
        face_idx = [i for i in range(len(verts)) if dot(a, verts[i]) == b]
        face_poly = project_to_full_dim([verts[i] for i in face_idx])
        for sub in triangulation(face_poly):
            simplices.append((v0,) + tuple(face_idx[j] for j in sub))
    return tuple(simplices)


@lru_cache(maxsize=8192)
def normalized_volume(P):
    """n! times the euclidean volume of P, as an exact positive integer.

    Computed by summing |det| of the edge matrices of a simplicial
    decomposition; the value does not depend on the triangulation chosen.
    """
    total = 0
    for simplex in triangulation(P):
        base = P.vertices[simplex[0]]
        edges = [vec_sub(P.vertices[i], base) for i in simplex[1:]]
        total += abs(det(edges))
    return total


def apply_map(P, g):
    """Image polytope g(P), vertex by vertex."""
    if g.dim != P.dim:
        raise DimensionMismatch(f"map dimension {g.dim} != polytope dimension {P.dim}")
    return LatticePolytope(P.dim, tuple(g(v) for v in P.vertices))


def random_unimodular_map(dim, seed, complexity):
    """Seeded random affine unimodular map.

    The linear part is a product of `complexity` elementary integer row
    operations, so its determinant is +-1 by construction; the shift has
    small random entries (zero when complexity is 0). Deterministic for a
    fixed seed.
    """
    if complexity < 0:
        raise ValidationError("complexity must be nonnegative")
    rng = random.Random(seed)
    M = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(complexity):
        if dim == 0:
            break
        if dim == 1:
            M[0][0] = -M[0][0]
            continue
        op = rng.randrange(3)
        i, j = rng.sample(range(dim), 2)
        if op == 0:
            M[i], M[j] = M[j], M[i]
        elif op == 1:
            M[i] = [-x for x in M[i]]
        else:
            q = rng.choice([-2, -1, 1, 2])
            M[i] = [a + q * b for a, b in zip(M[i], M[j])]
    if complexity == 0:
        shift = (0,) * dim
    else:
        shift = tuple(rng.randint(-2, 2) for _ in range(dim))
    return AffineUnimodularMap(tuple(tuple(row) for row in M), shift)


def project_to_full_dim(vertices):
    """Re-embed points spanning an m-dimensional affine sublattice into Z^m.

    The output polytope is lattice-isomorphic to the input inside the
    affine lattice spanned by it (coordinates are taken with respect to a
    basis of the saturated difference lattice, so heights and volumes are
    preserved). Full-dimensional input is returned unchanged.
    """
    verts = [tuple(int(x) for x in v) for v in vertices]
    ambient = len(verts[0])
    v0 = verts[0]
    diffs = [vec_sub(v, v0) for v in verts[1:]]
    m = rational_rank(diffs) if diffs else 0
    if m == ambient:
        return LatticePolytope(ambient, tuple(verts))
    if m == 0:
        return LatticePolytope(0, ((),))
    basis = saturated_span_basis(diffs, ambient)
    coords = [solve_integer_combination(basis, vec_sub(v, v0)) for v in verts]
    return LatticePolytope(m, tuple(coords))


@lru_cache(maxsize=65536)
def normal_form(P):
    """Canonical vertex matrix of the AGL(n, Z)-class of P.

    Algorithm: (1) build the vertex-facet pairing matrix of slacks, which
    is an equivalence invariant up to independent row and column
    permutations; (2) search for the vertex orderings that realize the
    lexicographically minimal row-major arrangement of that matrix
    (branch and bound over rows, with columns kept as ordered blocks of
    still-indistinguishable vertices); (3) for each surviving ordering,
    translate the first vertex to the origin and reduce the matrix of
    vertex differences to column-style Hermite normal form, which cancels
    the remaining GL(n, Z) freedom; (4) return the lexicographically
    smallest result, with the origin row prepended.

    The returned matrix is itself the vertex list of a distinguished
    representative, so equal normal forms mean equivalent polytopes and
    conversely.
    """
    n = P.dim
    verts = P.vertices
    if n == 0:
        return NormalForm(matrix=((),), dim=0, vertex_count=1)
    nv_count = len(verts)
    facets = P.facets
    PM = [[b - dot(a, v) for v in verts] for a, b in facets]
    states = {(frozenset(), (tuple(range(nv_count)),))}
    for _ in range(len(facets)):
        best_row = None
        chosen = []
        for used, blocks in states:
            for f in range(len(facets)):
                if f in used:
                    continue
                row = tuple(
                    x for block in blocks for x in sorted(PM[f][c] for c in block)
                )
                if best_row is None or row < best_row:
                    best_row = row
                    chosen = [(used, blocks, f)]
                elif row == best_row:
                    chosen.append((used, blocks, f))
        next_states = set()
        for used, blocks, f in chosen:
            refined = []
            for block in blocks:
                groups = {}
                for c in block:
                    groups.setdefault(PM[f][c], []).append(c)
                for val in sorted(groups):
                    refined.append(tuple(groups[val]))
            next_states.add((used | {f}, tuple(refined)))
        states = next_states
    orderings = set()
    for _, blocks in states:
        # distinct vertices always have distinct pairing columns (a vertex
        # is determined by its tight facet set), so blocks are singletons
        for combo in product(*[_perms(block) for block in blocks]):
            orderings.add(tuple(i for part in combo for i in part))
    best_matrix = None
    for order in sorted(orderings):
        w = verts[order[0]]
        diffs = [vec_sub(verts[i], w) for i in order[1:]]
        H = column_hnf(diffs)
        if best_matrix is None or H < best_matrix:
            best_matrix = H
    matrix = ((0,) * n,) + best_matrix
    return NormalForm(matrix=matrix, dim=n, vertex_count=nv_count)


def _perms(block):
    if len(block) == 1:
        return (block,)
    return tuple(permutations(block))


def are_equivalent(P, Q):
    """True iff P and Q are related by an affine unimodular transformation."""
    if P.dim != Q.dim:
        raise DimensionMismatch(f"cannot compare dimensions {P.dim} and {Q.dim}")
    return normal_form(P) == normal_form(Q)
