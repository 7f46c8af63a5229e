import pytest

from latpoly import (
    AllHeightsZero,
    LatticePolytope,
    are_equivalent,
    c_linear,
    census_by_hstar,
    enumerate_2d,
    enumerate_simplices,
    exceptional_triangle,
    hstar,
    lawrence_prism,
    normal_form,
    normalized_volume,
    partition_count,
    pyramid,
    scan_leading_coefficient,
    scan_scott,
)

from oracles import ascending_partitions


class TestLawrencePrism:
    def test_heights_1_1_is_the_unit_square(self, square):
        assert are_equivalent(lawrence_prism((1, 1)), square)

    def test_heights_0_2(self):
        P = lawrence_prism((0, 2))
        assert P.vertices == ((0, 0), (1, 0), (1, 2))
        assert normalized_volume(P) == 2

    def test_degenerate_heights_give_unit_simplex(self, unit_simplex_3d):
        assert are_equivalent(lawrence_prism((0, 0, 1)), unit_simplex_3d)

    def test_hstar_identity_small_sweep(self):
        for n in range(1, 5):
            for total in range(1, 8):
                for heights in ascending_partitions(n, total):
                    P = lawrence_prism(heights)  # construction self-validates
                    expected = (1,) if total == 1 else (1, total - 1)
                    assert hstar(P).coefficients == expected
                    assert normalized_volume(P) == total

    def test_all_zero_heights_rejected(self):
        with pytest.raises(AllHeightsZero):
            lawrence_prism((0, 0, 0))


class TestExceptionalTriangle:
    def test_dimension_two_is_t(self, triangle_t):
        assert exceptional_triangle(2) == triangle_t

    def test_dimension_four(self):
        P = exceptional_triangle(4)
        assert P.dim == 4
        assert normalized_volume(P) == 4
        assert hstar(P).coefficients == (1, 3)

    def test_never_a_prism(self):
        for n in range(2, 5):
            E = exceptional_triangle(n)
            for heights in ascending_partitions(n, 4):
                if max(heights) == 0:
                    continue
                assert not are_equivalent(E, lawrence_prism(heights))


class TestPartitionCounts:
    def test_small_values_against_enumeration(self):
        for n in range(1, 6):
            for V in range(0, 11):
                assert partition_count(n, V) == len(ascending_partitions(n, V))

    def test_p24(self):
        assert partition_count(2, 4) == 3
        assert ascending_partitions(2, 4) == [(0, 4), (1, 3), (2, 2)]

    def test_single_part(self):
        assert all(partition_count(1, V) == 1 for V in range(1, 12))

    def test_stabilization(self):
        for V in range(1, 9):
            for j in range(4):
                assert partition_count(V + j, V) == partition_count(V, V)


class TestCLinear:
    def test_values(self):
        assert c_linear(4, 2) == 4
        assert c_linear(2, 2) == 2
        assert c_linear(3, 2) == 2
        assert c_linear(4, 1) == 1

    def test_stabilizes_for_n_at_least_v(self):
        for V in range(2, 9):
            stable = c_linear(V, V)
            for n in range(V, V + 4):
                assert c_linear(V, n) == stable


class TestEnumerate2D:
    @pytest.fixture(scope="class")
    def tables(self):
        return enumerate_2d(6)

    def test_unimodular_triangle_only_degree_zero(self, tables):
        assert tables[(1, 0)].count == 1
        assert all(d != 0 for (V, d) in tables if V > 1)

    def test_small_linear_counts(self, tables):
        assert tables[(2, 1)].count == 2
        assert tables[(3, 1)].count == 2
        assert tables[(4, 1)].count == 4

    def test_matches_formula_up_to_six(self, tables):
        for V in range(2, 7):
            assert tables[(V, 1)].count == c_linear(V, 2)

    def test_classes_pairwise_inequivalent(self, tables):
        for table in tables.values():
            forms = [nf for nf, _ in table.classes]
            assert len(set(forms)) == len(forms)

    def test_representatives_match_their_bucket(self, tables):
        for (V, d), table in tables.items():
            for _, P in table.classes:
                assert normalized_volume(P) == V
                assert hstar(P).degree == d


class TestEnumerateSimplices:
    def test_unimodular_triangle(self):
        assert enumerate_simplices(2, 1).count == 1

    def test_volume_two_tetrahedra_include_reeve(self, reeve):
        table = enumerate_simplices(3, 2)
        assert table.count == 2
        reeve_nf = normal_form(reeve)
        assert any(nf == reeve_nf for nf, _ in table.classes)

    def test_output_volumes(self):
        for V in range(1, 6):
            table = enumerate_simplices(3, V)
            assert all(normalized_volume(P) == V for _, P in table.classes)

    def test_pyramid_injectivity_into_next_dimension(self):
        for V in range(1, 5):
            low = enumerate_simplices(2, V)
            high = {nf for nf, _ in enumerate_simplices(3, V).classes}
            lifted = [normal_form(pyramid(P)) for _, P in low.classes]
            assert len(set(lifted)) == len(lifted)
            assert all(nf in high for nf in lifted)


class TestCensus:
    def test_v4_d1_row(self):
        tables = enumerate_2d(4)
        rows = census_by_hstar([tables[(4, 1)]])
        assert len(rows) == 1
        assert rows[0].hstar.coefficients == (1, 3)
        assert rows[0].count == 4

    def test_v2_row(self):
        tables = enumerate_2d(2)
        rows = census_by_hstar([tables[(2, 1)]])
        assert rows[0].hstar.coefficients == (1, 1) and rows[0].count == 2

    def test_monotonicity_evidence_in_dimension_three(self, triangle_t):
        # all five classes with h* = 1 + 3t in dimension 3:
        # four prisms with height sum 4 plus the lifted exceptional triangle
        polys = [lawrence_prism(h) for h in ascending_partitions(3, 4) if max(h) > 0]
        polys.append(exceptional_triangle(3))
        forms = {normal_form(P).matrix for P in polys}
        assert len(forms) == len(polys) == c_linear(4, 3)
        assert all(hstar(P).coefficients == (1, 3) for P in polys)
        assert c_linear(4, 2) <= c_linear(4, 3)


class TestScottScan:
    def test_tight_witness(self):
        witness = LatticePolytope(2, ((0, 0), (3, 0), (0, 3)))
        assert hstar(witness).coefficients == (1, 7, 1)
        tables = enumerate_2d(9)
        report = scan_scott(tables.values())
        assert not report.violations
        wnf = normal_form(witness)
        assert any(nf == wnf and slack == 0 for nf, _, _, slack in report.entries)

    def test_degree_one_classes_skipped(self, square):
        table = enumerate_2d(2)[(2, 1)]
        report = scan_scott([table])
        assert report.entries == ()

    def test_all_small_polygons_pass(self):
        report = scan_scott(enumerate_2d(8).values())
        assert not report.violations
        assert report.min_slack >= 0


class TestLeadingCoefficientScan:
    def test_rows(self):
        tables = enumerate_2d(9)
        rows = dict(scan_leading_coefficient(tables.values()))
        assert rows[(0, 1)] == 1
        assert rows[(2, 1)] >= 9  # the 3x3 triangle
        # deterministic across runs
        assert scan_leading_coefficient(tables.values()) == tuple(sorted(rows.items()))
