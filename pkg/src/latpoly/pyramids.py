"""Lattice pyramids: construction, detection and peeling.

The pyramid over P in Z^n is the polytope in Z^(n+1) spanned by P placed
at height 0 and a single apex at height 1. It preserves the normalized
volume and the h*-polynomial and raises the codegree by exactly one.

A vertex v of P witnesses pyramid structure when every other vertex lies
on one common facet F and v sits at lattice height exactly 1 over the
hyperplane of F; then P is the pyramid over F. Peeling strips such
apexes until none remains, which can bottom out at the zero-dimensional
point (simplices do).
"""

from dataclasses import dataclass

from .errors import ValidationError
from .intlinalg import dot
from .polytope import (
    LatticePolytope,
    are_equivalent,
    project_to_full_dim,
)


@dataclass(frozen=True)
class PyramidDecomposition:
    """Result of peeling: P is equivalent to the multiplicity-fold pyramid
    over the core, and the core admits no further apex."""

    core: LatticePolytope
    multiplicity: int
    apex_chain: tuple


def pyramid(P):
    """The height-1 pyramid over P, one dimension up."""
    base = tuple(v + (0,) for v in P.vertices)
    apex = (0,) * P.dim + (1,)
    return LatticePolytope(P.dim + 1, base + (apex,))


def k_fold_pyramid(P, k):
    """Iterated pyramid; k = 0 returns P itself."""
    if k < 0:
        raise ValidationError("pyramid multiplicity must be nonnegative")
    out = P
    for _ in range(k):
        out = pyramid(out)
    return out


def geometric_pyramid_apexes(P):
    """Vertex indices that are pyramid apexes, in increasing index order.

    Index i is listed when some facet F contains every vertex except
    vertex i and the slack of vertex i against F is exactly 1 (height-1
    condition). A zero-dimensional polytope has no facets and therefore
    no apexes.
    """
    verts = P.vertices
    apexes = []
    for a, b in P.facets:
        off = [i for i in range(len(verts)) if dot(a, verts[i]) != b]
        if len(off) == 1 and b - dot(a, verts[off[0]]) == 1:
            apexes.append(off[0])
    return sorted(set(apexes))


def base_opposite_apex(P, apex_index):
    """The base polytope of the pyramid with the given apex vertex.

    Returns the facet containing all other vertices, re-embedded
    full-dimensionally. Raises ValidationError if the vertex is not a
    pyramid apex.
    """
    verts = P.vertices
    for a, b in P.facets:
        off = [i for i in range(len(verts)) if dot(a, verts[i]) != b]
        if off == [apex_index] and b - dot(a, verts[apex_index]) == 1:
            return project_to_full_dim([verts[i] for i in range(len(verts)) if i != apex_index])
    raise ValidationError(f"vertex index {apex_index} is not a pyramid apex")


def peel(P, apex_rule="lexmin"):
    """Strip pyramid apexes until none remains.

    One apex is removed per round: with the default rule the apex whose
    vertex is lexicographically smallest, with "lexmax" the largest (the
    alternative exists so that independence of the core class from the
    stripping order can be tested). The base facet is re-embedded
    full-dimensionally after each strip, so the next round works on a
    genuine lattice polytope one dimension down.
    """
    if apex_rule not in ("lexmin", "lexmax"):
        raise ValidationError(f"unknown apex rule {apex_rule!r}")
    current = P
    chain = []
    while True:
        apexes = geometric_pyramid_apexes(current)
        if not apexes:
            break
        pick = min if apex_rule == "lexmin" else max
        apex = pick(apexes, key=lambda i: current.vertices[i])
        chain.append(current.vertices[apex])
        current = base_opposite_apex(current, apex)
    return PyramidDecomposition(core=current, multiplicity=len(chain), apex_chain=tuple(chain))


def pyramid_injectivity_check(polytopes, k):
    """Pairwise-inequivalent inputs stay pairwise inequivalent after k pyramids.

    The inputs are verified pairwise inequivalent first; a ValidationError
    flags a bad test corpus rather than a property failure.
    """
    polys = list(polytopes)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if polys[i].dim == polys[j].dim and are_equivalent(polys[i], polys[j]):
                raise ValidationError(f"inputs {i} and {j} are equivalent")
    lifted = [k_fold_pyramid(Q, k) for Q in polys]
    for i in range(len(lifted)):
        for j in range(i + 1, len(lifted)):
            if lifted[i].dim == lifted[j].dim and are_equivalent(lifted[i], lifted[j]):
                return False
    return True
