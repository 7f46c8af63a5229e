import pytest

from latpoly import (
    InternalInconsistency,
    LatticePolytope,
    MalformedSeries,
    apply_map,
    codegree,
    degree,
    ehrhart_data,
    hstar,
    hstar_from_series,
    interior_points_in_dilate,
    lattice_points_in_dilate,
    random_unimodular_map,
    reciprocity_check,
)

from oracles import hull_points


class TestEhrhartData:
    @pytest.mark.parametrize(
        "verts, counts",
        [
            (((0, 0), (1, 0), (0, 1)), (1, 3, 6)),
            (((0, 0), (2, 0), (0, 2)), (1, 6, 15)),
            (((0, 0), (1, 0), (0, 1), (1, 1)), (1, 4, 9)),
        ],
    )
    def test_counts(self, verts, counts):
        P = LatticePolytope(2, verts)
        data = ehrhart_data(P, 2)
        assert data.counts == counts
        # the same values from the independent hull oracle
        assert counts == tuple(len(hull_points(list(verts), k)) for k in range(3))

    def test_needs_enough_dilates(self, reeve):
        with pytest.raises(Exception):
            ehrhart_data(reeve, 2)

    def test_strictly_increasing(self, corpus):
        for _, P in corpus:
            data = ehrhart_data(P, P.dim + 1)
            for a, b in zip(data.counts[1:], data.counts[2:]):
                assert b > a


class TestHStar:
    def test_unit_simplices_are_constant(self, unit_simplex_2d, unit_simplex_3d):
        assert hstar(unit_simplex_2d).coefficients == (1,)
        assert hstar(unit_simplex_3d).coefficients == (1,)

    def test_triangle_t(self, triangle_t):
        h = hstar(triangle_t)
        assert h.coefficients == (1, 3)
        assert str(h) == "1 + 3t"

    def test_reeve(self, reeve):
        h = hstar(reeve)
        assert h.coefficients == (1, 0, 1)
        assert str(h) == "1 + t^2"

    def test_sum_is_volume(self, corpus):
        from latpoly import normalized_volume

        for _, P in corpus:
            assert hstar(P).normalized_volume == normalized_volume(P)

    def test_agl_invariant(self, corpus):
        for _, P in corpus:
            h = hstar(P)
            for seed in (11, 12, 13):
                g = random_unimodular_map(P.dim, seed, 3)
                assert hstar(apply_map(P, g)) == h


class TestHStarFromSeries:
    @pytest.mark.parametrize(
        "counts, n, coeffs",
        [
            ((1, 3, 6), 2, (1,)),
            ((1, 6, 15), 2, (1, 3)),
            ((1, 4, 9), 2, (1, 1)),
        ],
    )
    def test_binomial_transform(self, counts, n, coeffs):
        assert hstar_from_series(counts, n).coefficients == coeffs

    def test_malformed_series(self):
        with pytest.raises(MalformedSeries):
            hstar_from_series((2, 3, 6), 2)

    def test_non_ehrhart_series_rejected(self):
        with pytest.raises(InternalInconsistency):
            hstar_from_series((1, 100, 15), 2)

    def test_round_trip_on_corpus(self, corpus):
        for _, P in corpus:
            K = P.dim + 2
            counts = tuple(lattice_points_in_dilate(P, k)[0] for k in range(K + 1))
            h = hstar_from_series(counts[: P.dim + 1], P.dim)
            assert all(h.count_at(k) == counts[k] for k in range(K + 1))


class TestDegreeCodegree:
    def test_unit_simplices(self, unit_simplex_2d, unit_simplex_3d):
        assert (degree(unit_simplex_2d), codegree(unit_simplex_2d)) == (0, 3)
        assert (degree(unit_simplex_3d), codegree(unit_simplex_3d)) == (0, 4)

    def test_t_and_reeve(self, triangle_t, reeve):
        assert (degree(triangle_t), codegree(triangle_t)) == (1, 2)
        assert (degree(reeve), codegree(reeve)) == (2, 2)

    def test_codegree_is_first_interior_dilation(self, corpus):
        for _, P in corpus:
            c = codegree(P)
            assert interior_points_in_dilate(P, c)[0] > 0
            assert all(interior_points_in_dilate(P, k)[0] == 0 for k in range(1, c))

    def test_ranges(self, corpus):
        for _, P in corpus:
            assert 0 <= degree(P) <= P.dim
            assert 1 <= codegree(P) <= P.dim + 1


class TestReciprocity:
    def test_square(self, square):
        assert reciprocity_check(square, 3)
        h = hstar(square)
        assert [h.interior_count_at(k) for k in (1, 2, 3)] == [0, 1, 4]

    def test_unit_simplex(self, unit_simplex_2d):
        assert reciprocity_check(unit_simplex_2d, 4)
        h = hstar(unit_simplex_2d)
        assert h.interior_count_at(3) == 1 and h.interior_count_at(4) == 3

    def test_corpus(self, corpus):
        for _, P in corpus:
            assert reciprocity_check(P, P.dim + 2)
