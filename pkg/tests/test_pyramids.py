import pytest

from latpoly import (
    LatticePolytope,
    ValidationError,
    are_equivalent,
    base_opposite_apex,
    codegree,
    degree,
    geometric_pyramid_apexes,
    hstar,
    k_fold_pyramid,
    lattice_points_in_dilate,
    normalized_volume,
    peel,
    pyramid,
    pyramid_injectivity_check,
)


class TestConstruction:
    def test_pyramid_over_unit_segment(self):
        seg = LatticePolytope(1, ((0,), (1,)))
        assert sorted(pyramid(seg).vertices) == [(0, 0), (0, 1), (1, 0)]

    def test_volume_preserved(self, square, triangle_t, reeve):
        for P in (square, triangle_t, reeve):
            assert normalized_volume(pyramid(P)) == normalized_volume(P)

    def test_hstar_preserved(self, triangle_t):
        assert hstar(pyramid(triangle_t)).coefficients == (1, 3)

    def test_k_fold(self, triangle_t):
        assert k_fold_pyramid(triangle_t, 0) == triangle_t
        seg2 = LatticePolytope(1, ((0,), (2,)))
        tri = k_fold_pyramid(seg2, 1)
        assert tri.dim == 2 and normalized_volume(tri) == 2
        five_dim = k_fold_pyramid(triangle_t, 3)
        assert five_dim.dim == 5
        assert hstar(five_dim).coefficients == (1, 3)

    def test_series_identity(self, corpus):
        for _, P in corpus:
            Q = pyramid(P)
            LQ = [lattice_points_in_dilate(Q, k)[0] for k in range(P.dim + 2)]
            LP = [lattice_points_in_dilate(P, k)[0] for k in range(P.dim + 2)]
            assert all(LQ[k] - LQ[k - 1] == LP[k] for k in range(1, P.dim + 2))

    def test_codegree_increments(self, corpus):
        for _, P in corpus:
            Q = pyramid(P)
            assert codegree(Q) == codegree(P) + 1
            assert degree(Q) == degree(P)


class TestApexDetection:
    def test_unit_simplex_all_vertices(self, unit_simplex_3d):
        assert geometric_pyramid_apexes(unit_simplex_3d) == [0, 1, 2, 3]

    def test_square_has_none(self, square):
        assert geometric_pyramid_apexes(square) == []

    def test_pyramid_over_square_exactly_the_apex(self, square):
        Q = pyramid(square)
        assert geometric_pyramid_apexes(Q) == [4]
        assert Q.vertices[4] == (0, 0, 1)

    def test_t_and_reeve_have_none(self, triangle_t, reeve):
        assert geometric_pyramid_apexes(triangle_t) == []
        assert geometric_pyramid_apexes(reeve) == []

    def test_base_opposite_apex(self, square):
        Q = pyramid(square)
        base = base_opposite_apex(Q, 4)
        assert base.dim == 2 and are_equivalent(base, square)
        with pytest.raises(ValidationError):
            base_opposite_apex(Q, 0)


class TestPeel:
    def test_unit_simplex_peels_to_point(self, unit_simplex_2d):
        dec = peel(unit_simplex_2d)
        assert dec.multiplicity == 2
        assert dec.core.dim == 0 and dec.core.vertices == ((),)

    def test_double_pyramids(self, square, triangle_t):
        for P in (square, triangle_t):
            dec = peel(k_fold_pyramid(P, 2))
            assert dec.multiplicity == 2
            assert are_equivalent(dec.core, P)

    def test_rebuild_equivalence(self, corpus):
        for _, P in corpus:
            dec = peel(P)
            rebuilt = k_fold_pyramid(dec.core, dec.multiplicity)
            assert rebuilt.dim == P.dim and are_equivalent(rebuilt, P)

    def test_core_class_order_independent(self, corpus):
        for _, P in corpus:
            a = peel(P)
            b = peel(P, apex_rule="lexmax")
            assert a.multiplicity == b.multiplicity
            assert a.core.dim == b.core.dim and are_equivalent(a.core, b.core)

    def test_apex_chain_length(self, square):
        dec = peel(k_fold_pyramid(square, 3))
        assert len(dec.apex_chain) == dec.multiplicity == 3


class TestInjectivity:
    def test_square_and_t(self, square, triangle_t):
        assert pyramid_injectivity_check([square, triangle_t], 2)

    def test_singleton(self, reeve):
        assert pyramid_injectivity_check([reeve], 3)

    def test_linear_volume_four_classes(self, triangle_t):
        from latpoly import lawrence_prism

        polys = [
            lawrence_prism((0, 4)),
            lawrence_prism((1, 3)),
            lawrence_prism((2, 2)),
            triangle_t,
        ]
        assert pyramid_injectivity_check(polys, 3)

    def test_bad_input_detected(self, square):
        from latpoly import apply_map, random_unimodular_map

        g = random_unimodular_map(2, 5, 3)
        with pytest.raises(ValidationError):
            pyramid_injectivity_check([square, apply_map(square, g)], 1)
