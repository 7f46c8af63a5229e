"""Ehrhart counting data and the h*-polynomial.

For an n-dimensional lattice polytope P the counting function
L(k) = |kP  cap  Z^n| is a polynomial in k, and the generating series
sum L(k) t^k equals h*(t) / (1-t)^(n+1) for a polynomial h* of degree
d <= n with nonnegative integer coefficients, h*(0) = 1 and
h*(1) = normalized volume. The degree of P is deg h*, the codegree is
n + 1 - deg, and the codegree is also the smallest dilation factor whose
dilate has an interior lattice point; both characterizations are always
computed here and reconciled.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InternalInconsistency, MalformedSeries, ValidationError
from .polytope import interior_points_in_dilate, lattice_points_in_dilate


def _comb0(m, k):
    return comb(m, k) if m >= k >= 0 else 0


@dataclass(frozen=True)
class HStarPolynomial:
    """Coefficient vector (h*_0, ..., h*_d) of the Ehrhart series numerator."""

    coefficients: tuple
    ambient_dim: int

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs or coeffs[0] != 1:
            raise InternalInconsistency(f"h* must have constant term 1, got {coeffs}")
        if any(c < 0 for c in coeffs):
            raise InternalInconsistency(f"h* coefficients must be nonnegative, got {coeffs}")
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise InternalInconsistency("h* carries trailing zero coefficients")
        if self.degree > self.ambient_dim:
            raise InternalInconsistency(
                f"deg h* = {self.degree} exceeds the ambient dimension {self.ambient_dim}"
            )

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def codegree(self):
        return self.ambient_dim + 1 - self.degree

    @property
    def normalized_volume(self):
        return sum(self.coefficients)

    def count_at(self, k):
        """L(k) recovered from the series h*(t) / (1-t)^(n+1)."""
        n = self.ambient_dim
        return sum(h * _comb0(n + k - j, n) for j, h in enumerate(self.coefficients))

    def interior_count_at(self, k):
        """Interior count at dilation k, from reciprocity of the series."""
        n = self.ambient_dim
        return sum(h * _comb0(k + j - 1, n) for j, h in enumerate(self.coefficients))

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                base = "t" if j == 1 else f"t^{j}"
                terms.append(base if c == 1 else f"{c}{base}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class EhrhartData:
    """Counts L(0..K) and interior counts L_int(1..K) of the dilates of P."""

    counts: tuple
    interior_counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        interior = tuple(int(c) for c in self.interior_counts)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "interior_counts", interior)
        if counts[0] != 1:
            raise InternalInconsistency("L(0) must be 1")
        if any(i > c for i, c in zip(interior, counts[1:])):
            raise InternalInconsistency("interior counts exceed total counts")


def ehrhart_data(P, K):
    """Dilation counts of P for k = 0..K; requires K >= dim(P)."""
    if K < P.dim:
        raise ValidationError(f"need at least dim+1 = {P.dim + 1} counts, got K = {K}")
    counts = tuple(lattice_points_in_dilate(P, k)[0] for k in range(K + 1))
    interior = tuple(interior_points_in_dilate(P, k)[0] for k in range(1, K + 1))
    return EhrhartData(counts, interior)


def hstar_from_series(counts, n):
    """h* coefficients from the counts L(0..K), K >= n, by binomial transform.

    h*_j = sum_{i=0..j} (-1)^i C(n+1, i) L(j-i) for j = 0..n, trailing
    zeros stripped. The inverse expansion is re-checked against every
    supplied count, so a sequence that is not the Ehrhart series of any
    h*-vector is rejected.
    """
    counts = tuple(int(c) for c in counts)
    if len(counts) < n + 1:
        raise ValidationError(f"need counts up to index {n}, got {len(counts) - 1}")
    if counts[0] != 1:
        raise MalformedSeries(f"L(0) must be 1, got {counts[0]}")
    raw = [
        sum((-1) ** i * comb(n + 1, i) * counts[j - i] for i in range(j + 1))
        for j in range(n + 1)
    ]
    top = n
    while top > 0 and raw[top] == 0:
        top -= 1
    h = HStarPolynomial(tuple(raw[: top + 1]), n)
    for k, L in enumerate(counts):
        if h.count_at(k) != L:
            raise InternalInconsistency(
                f"series round trip failed at k = {k}: {h.count_at(k)} != {L}"
            )
    return h


@lru_cache(maxsize=4096)
def hstar(P):
    """The h*-polynomial of P.

    Negative coefficients or a constant term other than 1 cannot occur
    for genuine polytope counts; they would signal an enumeration bug and
    raise InternalInconsistency.
    """
    counts = tuple(lattice_points_in_dilate(P, k)[0] for k in range(P.dim + 1))
    return hstar_from_series(counts, P.dim)


def _codegree_by_interior_search(P):
    for k in range(1, P.dim + 2):
        if interior_points_in_dilate(P, k)[0] > 0:
            return k
    raise InternalInconsistency(
        f"no interior point up to dilation {P.dim + 1}, impossible for a polytope"
    )


def _reconciled_degree(P):
    h = hstar(P)
    codeg_direct = _codegree_by_interior_search(P)
    if h.codegree != codeg_direct:
        raise InternalInconsistency(
            f"codegree mismatch: {h.codegree} from h*, {codeg_direct} from interior counts"
        )
    return h.degree


def degree(P):
    """deg h*(P); cross-checked against the interior-point codegree."""
    return _reconciled_degree(P)


def codegree(P):
    """Smallest k with interior lattice points in kP; equals n+1 - degree."""
    return P.dim + 1 - _reconciled_degree(P)


def reciprocity_check(P, K):
    """Directly counted interior points vs. the series reflection, k = 1..K.

    True states that L_int(k) equals the k-th coefficient of
    t^(n+1) h*(1/t) / (1-t)^(n+1) for every checked k; False would mean a
    counting bug, never a property of the input.
    """
    if K < 1:
        raise ValidationError("K must be at least 1")
    h = hstar(P)
    for k in range(1, K + 1):
        if interior_points_in_dilate(P, k)[0] != h.interior_count_at(k):
            return False
    return True
