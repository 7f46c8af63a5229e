"""The graded monoid over a polytope, its toric ideal and quantitative bounds.

The cone over P x {1} in R^(n+1) carries the graded monoid of its
lattice points; degree k points are exactly the lattice points of the
k-th dilate placed at height k. This module computes the unique minimal
generating set of that monoid, a minimal binomial generating set of the
toric ideal presented on those generators, the algebraic pyramid
criterion (a degree-1 generator whose variable occurs in no minimal
binomial is a pyramid apex), and the dimension counts of the artinian
quotient by a random degree-1 system, which must reproduce the
h*-coefficients.

Minimal binomial generators are found degree by degree through fiber
graphs: all monomials of a given graded degree that map to the same
lattice point form a fiber, fibers are connected along moves by already
chosen binomials, and one new binomial is added per missing connection.
The number of new binomials per degree does not depend on the chosen
representatives, and sieving two degrees past the proven cutoffs must
find nothing; a hit raises InternalInconsistency.
"""

from dataclasses import dataclass
from math import comb
import random

from .errors import InternalInconsistency, RegularSequenceNotFound, ValidationError
from .ehrhart import degree as polytope_degree
from .ehrhart import hstar
from .intlinalg import dot, integer_rank, vec_add, vec_sub
from .polytope import LatticePolytope, lattice_points_in_dilate


@dataclass(frozen=True)
class GradedCone:
    """The cone over P x {1}, cut out by <normal, y> >= 0 inequalities.

    The last coordinate is the grading; (x, k) lies in the cone exactly
    when x lies in the k-th dilate of P (k > 0). A facet normal for the
    grading coordinate itself is only needed in dimension 0, where the
    polytope has no facets of its own.
    """

    facet_normals: tuple
    dim: int

    def contains(self, point):
        if len(point) != self.dim + 1:
            raise ValidationError(f"point {point} does not live in R^{self.dim + 1}")
        return all(dot(a, point) >= 0 for a in self.facet_normals)


def graded_cone(P):
    """Homogenized facet inequalities of P: the cone of all (x, k), x in kP."""
    normals = [tuple(-x for x in a) + (b,) for a, b in P.facets]
    if P.dim == 0:
        normals.append((1,))
    return GradedCone(tuple(normals), P.dim)


@dataclass(frozen=True)
class MonoidGenerators:
    """Minimal generating set of the graded monoid over P.

    Generators are (x, k) lattice points, sorted by degree then
    lexicographically; every height-1 point of the polytope appears.
    """

    generators: tuple
    polytope: LatticePolytope

    @property
    def degrees(self):
        return tuple(g[-1] for g in self.generators)

    @property
    def count(self):
        return len(self.generators)


def _graded_points(P, k):
    return [x + (k,) for x in lattice_points_in_dilate(P, k)[1]]


def minimal_monoid_generators(P):
    """Degree-by-degree sieve for the irreducible monoid elements.

    The monoid is saturated (it consists of all cone lattice points), so
    a degree-k point is reducible exactly when subtracting some already
    found generator of smaller degree lands back in the cone. All
    height-1 points are generators. The sieve runs up to max(1, deg P);
    by the generator degree bound nothing new can appear later, and two
    extra degrees are sieved to enforce that.
    """
    d = polytope_degree(P)
    dmax = max(1, d)
    cone = graded_cone(P)
    gens = []
    for k in range(1, dmax + 3):
        new = []
        for m in _graded_points(P, k):
            if any(cone.contains(vec_sub(m, g)) for g in gens if g[-1] < k):
                continue
            new.append(m)
        if k <= dmax:
            gens.extend(sorted(new))
        elif new:
            raise InternalInconsistency(
                f"irreducible monoid element {sorted(new)[0]} at degree {k} > {dmax}"
            )
    V = sum(hstar(P).coefficients)
    if len(gens) > V + P.dim:
        raise InternalInconsistency(
            f"{len(gens)} generators exceed the bound V + n = {V + P.dim}"
        )
    return MonoidGenerators(tuple(gens), P)


def verify_generation(gens, up_to_degree):
    """Every monoid element of degree <= up_to_degree is a sum of generators."""
    cone = graded_cone(gens.polytope)
    glist = gens.generators
    memo = {}
    zero = (0,) * (gens.polytope.dim + 1)

    def reachable(m):
        if m == zero:
            return True
        if m in memo:
            return memo[m]
        memo[m] = False
        for g in glist:
            if g[-1] <= m[-1]:
                rest = vec_sub(m, g)
                if cone.contains(rest) and reachable(rest):
                    memo[m] = True
                    break
        return memo[m]

    for k in range(1, up_to_degree + 1):
        for m in _graded_points(gens.polytope, k):
            if not reachable(m):
                return False
    return True


@dataclass(frozen=True)
class Binomial:
    """X^plus - X^minus with disjoint supports mapping to one lattice point."""

    plus: tuple
    minus: tuple
    degree: int

    def __post_init__(self):
        for p, q in zip(self.plus, self.minus):
            if p and q:
                raise InternalInconsistency("binomial supports overlap")

    def uses(self, index):
        return self.plus[index] != 0 or self.minus[index] != 0


@dataclass(frozen=True)
class BinomialIdealPresentation:
    """Variables (one per monoid generator) and minimal binomial generators."""

    variables: tuple
    minimal_generators: tuple
    per_degree_counts: tuple
    gens: MonoidGenerators

    @property
    def count(self):
        return len(self.minimal_generators)

    def per_degree(self):
        return dict(self.per_degree_counts)


def _monomials_of_degree(gen_degrees, s):
    """All exponent tuples with graded degree exactly s."""
    l = len(gen_degrees)
    out = []
    expo = [0] * l

    def rec(i, remaining):
        if i == l:
            if remaining == 0:
                out.append(tuple(expo))
            return
        step = gen_degrees[i]
        for e in range(remaining // step + 1):
            expo[i] = e
            rec(i + 1, remaining - e * step)
        expo[i] = 0

    rec(0, s)
    return out


def _monomial_image(expo, glist, width):
    point = [0] * width
    for e, g in zip(expo, glist):
        if e:
            for i in range(width):
                point[i] += e * g[i]
    return tuple(point)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def toric_ideal_minimal_generators(gens, tie_break="lexmin"):
    """Minimal binomial generating set of the toric ideal on gens.

    For each graded degree s = 2..2d the monomials of degree s are
    grouped into fibers over their common image point; the fiber graph
    connects monomials differing by an earlier binomial times a monomial,
    and each fiber contributes one new binomial per missing connection,
    between per-component representatives (lexicographically smallest by
    default; tie_break="lexmax" picks largest, for checking that the
    per-degree counts do not depend on the choice). Degrees 2d+1 and
    2d+2 are sieved defensively and must contribute nothing.
    """
    if tie_break not in ("lexmin", "lexmax"):
        raise ValidationError(f"unknown tie break {tie_break!r}")
    P = gens.polytope
    glist = gens.generators
    width = P.dim + 1
    gen_degrees = gens.degrees
    d = polytope_degree(P)
    smax = 2 * d
    chosen = []
    per_degree = {}
    for s in range(2, smax + 3):
        defensive = s > smax
        fibers = {}
        for expo in _monomials_of_degree(gen_degrees, s):
            fibers.setdefault(_monomial_image(expo, glist, width), []).append(expo)
        expected = lattice_points_in_dilate(P, s)[0]
        if len(fibers) != expected:
            raise InternalInconsistency(
                f"{len(fibers)} fibers at degree {s}, but the dilate has {expected} points"
            )
        movers = [(b.plus, b.minus) for b in chosen]
        new_count = 0
        for image in sorted(fibers):
            members = sorted(fibers[image])
            if len(members) == 1:
                continue
            index = {m: i for i, m in enumerate(members)}
            uf = _UnionFind(len(members))
            for plus, minus in movers:
                for m in members:
                    if all(e >= p for e, p in zip(m, plus)):
                        other = tuple(e - p + q for e, p, q in zip(m, plus, minus))
                        uf.union(index[m], index[other])
            components = {}
            for i, m in enumerate(members):
                components.setdefault(uf.find(i), []).append(m)
            if len(components) == 1:
                continue
            if defensive:
                raise InternalInconsistency(
                    f"disconnected fiber over {image} at degree {s} > {smax}"
                )
            if tie_break == "lexmin":
                reps = sorted(min(ms) for ms in components.values())
            else:
                reps = sorted((max(ms) for ms in components.values()), reverse=True)
            anchor = reps[0]
            for other in reps[1:]:
                plus, minus = max(anchor, other), min(anchor, other)
                bino = Binomial(plus=plus, minus=minus, degree=s)
                chosen.append(bino)
                movers.append((bino.plus, bino.minus))
                new_count += 1
        if not defensive and new_count:
            per_degree[s] = new_count
    V = sum(hstar(P).coefficients)
    bound = binomial_count_bound(d, V) if d >= 1 else 0
    if len(chosen) > bound:
        raise InternalInconsistency(
            f"{len(chosen)} minimal binomials exceed the bound {bound}"
        )
    variables = tuple((f"X{i + 1}", deg) for i, deg in enumerate(gen_degrees))
    ordered = tuple(sorted(chosen, key=lambda b: (b.degree, b.plus, b.minus)))
    return BinomialIdealPresentation(
        variables=variables,
        minimal_generators=ordered,
        per_degree_counts=tuple(sorted(per_degree.items())),
        gens=gens,
    )


def algebraic_pyramid_apexes(pres):
    """Indices of degree-1 generators whose variable occurs in no binomial."""
    out = []
    for i, (_, deg) in enumerate(pres.variables):
        if deg != 1:
            continue
        if all(not b.uses(i) for b in pres.minimal_generators):
            out.append(i)
    return out


def pyramid_detectors_agree(P):
    """Geometric and algebraic pyramid detection give the same verdict.

    Agreement means: both find an apex or neither does, and when both do,
    stripping any geometric apex and stripping any algebraic apex leave
    bases in one common equivalence class. The two index lists need not
    coincide element by element (algebraic candidates range over all
    height-1 lattice points, geometric ones over vertices). Defined for
    positive dimension.
    """
    from .polytope import are_equivalent
    from .pyramids import base_opposite_apex, geometric_pyramid_apexes

    if P.dim == 0:
        raise ValidationError("pyramid detection needs positive dimension")
    geo = geometric_pyramid_apexes(P)
    gens = minimal_monoid_generators(P)
    pres = toric_ideal_minimal_generators(gens)
    alg = algebraic_pyramid_apexes(pres)
    if bool(geo) != bool(alg):
        return False
    if not geo:
        return True
    bases = []
    try:
        for i in geo:
            bases.append(base_opposite_apex(P, i))
        for gi in alg:
            v = gens.generators[gi][:-1]
            if v not in P.vertices:
                return False
            bases.append(base_opposite_apex(P, P.vertices.index(v)))
    except ValidationError:
        return False
    first = bases[0]
    return all(
        b.dim == first.dim and are_equivalent(b, first) for b in bases[1:]
    )


def theorem_bound(d, V):
    """4d * C(2d+V-1, 2d): above this dimension everything is a pyramid."""
    if d < 1 or V < 1:
        raise ValidationError("d and V must be positive")
    return 4 * d * comb(2 * d + V - 1, 2 * d)


def stabilization_index(d, V):
    """The dimension bound minus one: cores never need more dimensions."""
    return theorem_bound(d, V) - 1


def binomial_count_bound(d, V):
    """C(2d+V-1, 2d): cap on the number of minimal binomial generators."""
    if d < 1 or V < 1:
        raise ValidationError("d and V must be positive")
    return comb(2 * d + V - 1, 2 * d)


def artinian_hilbert_function(P, seed):
    """Graded dimensions of the quotient by a random degree-1 system.

    Picks n+1 degree-1 elements with small random integer coefficients
    over the height-1 points (seeded), computes dim of each graded piece
    of the quotient by exact rank computations, and returns the vector
    (dim R^0, ..., dim R^(d+2)). For a regular system this equals the
    h*-coefficients padded with two zeros; coefficients are resampled up
    to 5 times before giving up with RegularSequenceNotFound.
    """
    d = polytope_degree(P)
    n = P.dim
    h = hstar(P).coefficients
    expected = tuple(h[k] if k < len(h) else 0 for k in range(d + 3))
    points = {k: _graded_points(P, k) for k in range(d + 3)}
    m1 = points[1]
    rng = random.Random(seed)
    for _ in range(5):
        coeff = [[rng.randint(1, 100) for _ in m1] for _ in range(n + 1)]
        dims = [1]
        for k in range(1, d + 3):
            index = {pt: r for r, pt in enumerate(points[k])}
            rows = []
            for i in range(n + 1):
                for m in points[k - 1]:
                    col = [0] * len(points[k])
                    for c, x1 in zip(coeff[i], m1):
                        col[index[vec_add(m, x1)]] += c
                    rows.append(col)
            dims.append(len(points[k]) - integer_rank(rows))
        if tuple(dims) == expected:
            return tuple(dims)
    raise RegularSequenceNotFound(
        f"no sampled degree-1 system reproduced {expected} after 5 attempts"
    )
