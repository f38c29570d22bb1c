import random
from fractions import Fraction

import pytest

from weightpoly.builders import (GTSpec, SideData, admissible, dual_side_data,
                                 entry_to_diag_map, fm_polytope, gt_hrep,
                                 gt_slice, polygon_hrep)
from weightpoly.exact import vec
from weightpoly.polytopes import (contains, h_to_v, lattice_points,
                                  polytope_dim, remove_redundant)
from oracles import gt_pattern_count, random_admissible_r


def test_side_data_validation():
    with pytest.raises(ValueError):
        SideData.from_weights(0, (1, 1, 1))
    with pytest.raises(ValueError):
        SideData.from_weights(2, (1, 1, 1))  # need n > m+1
    with pytest.raises(ValueError):
        SideData.from_weights(1, (1, 0, 1, 1))
    s = SideData.from_weights(1, (3, 3, 3, 3, 3))
    assert s.n == 5 and s.P == Fraction(15, 2)


def test_side_data_json_round_trip():
    s = SideData.from_weights(2, (1, 2, 3, 4, 5, 9))
    assert SideData.from_json_dict(s.to_json_dict()) == s


def test_admissible_boundary():
    assert admissible(SideData.from_weights(1, (1, 1, 1, 1)))
    assert admissible(SideData.from_weights(1, (2, 2, 2, 2, 8)))  # r_i = P allowed
    assert not admissible(SideData.from_weights(1, (1, 1, 1, 9)))


def test_dual_side_data_values_and_errors():
    s = SideData.from_weights(1, (3, 3, 3, 3, 4))
    d = dual_side_data(s)
    assert d.m == 2 and d.r == vec([5, 5, 5, 5, 4])
    assert dual_side_data(d).r == s.r and dual_side_data(d).m == 1
    with pytest.raises(ValueError):
        dual_side_data(SideData.from_weights(1, (2, 2, 2, 2, 8)))  # r_i = P
    with pytest.raises(ValueError):
        dual_side_data(SideData.from_weights(2, (1, 1, 1, 1)))  # dual m would be 0


def test_polygon_hrep_requires_m1_and_four_sides():
    with pytest.raises(ValueError):
        polygon_hrep(SideData.from_weights(2, (1, 1, 1, 1)))
    with pytest.raises(ValueError):
        polygon_hrep(SideData.from_weights(1, (1, 1, 1)))


def test_polygon_hrep_triangle_inequality_semantics():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(4, 7)
        r = random_admissible_r(rng, n, hi=6)
        P = polygon_hrep(SideData.from_weights(1, r))
        assert len(P.ineqs) <= 3 * (n - 2)  # coincident rows dedupe
        for _ in range(10):
            x = vec([Fraction(rng.randint(0, 24), 2) for _ in range(n - 3)])
            d = (Fraction(r[0]),) + x + (Fraction(r[n - 1]),)
            sides = []
            ok = True
            for j in range(n - 2):
                a, b, c = d[j], Fraction(r[j + 1]), d[j + 1]
                ok = ok and a + b >= c and b + c >= a and a + c >= b
            assert contains(P, x) == ok


def test_gt_hrep_counts_match_pattern_enumeration():
    for lam in ((2, 0), (3, 1, 0), (2, 2, 0, 0)):
        H = gt_hrep(GTSpec(k=len(lam), lam=vec(lam)))
        assert len(lattice_points(H)) == gt_pattern_count(lam)


def test_gt_hrep_with_row_sums_slices():
    lam = (2, 1, 0)
    H = gt_hrep(GTSpec(k=3, lam=vec(lam), row_sums=vec((1, 2))))
    assert len(lattice_points(H)) == gt_pattern_count(lam, (1, 2, 3))


def test_gt_spec_validation():
    with pytest.raises(ValueError):
        GTSpec(k=2, lam=vec([1, 2]))  # not weakly decreasing
    with pytest.raises(ValueError):
        GTSpec(k=2, lam=vec([1, -1]))


def test_entry_chart_dimension_formula():
    for m, n, r in ((1, 5, (3, 3, 3, 3, 4)), (1, 6, (1, 1, 1, 1, 1, 1)),
                    (2, 6, (2, 2, 2, 2, 2, 2))):
        cs = gt_slice(SideData.from_weights(m, r))
        assert cs.entry_chart.dim == m * n - 2 * m - m * m
        assert len(cs.entry_coords) == cs.entry_chart.dim
        assert polytope_dim(cs.entry_chart) == cs.entry_chart.dim


def test_hexagon_entry_chart_lattice_anchor():
    cs = gt_slice(SideData.from_weights(1, (3, 3, 3, 3, 4)))
    assert len(lattice_points(cs.entry_chart)) == 11


def test_inadmissible_weights_give_empty_charts():
    cs = fm_polytope(SideData.from_weights(1, (1, 1, 1, 9)))
    assert polytope_dim(cs.entry_chart) == -1
    assert polytope_dim(cs.diag_chart) == -1


def test_entry_to_diag_maps_vertices_onto_polygon():
    for r in ((3, 3, 3, 3, 3), (3, 3, 3, 3, 4), (3, 4, 3, 4, 3)):
        s = SideData.from_weights(1, r)
        cs = gt_slice(s)
        f = entry_to_diag_map(s)
        mapped = sorted(f.apply(v) for v in h_to_v(cs.entry_chart).vertices)
        polygon = sorted(h_to_v(polygon_hrep(s)).vertices)
        assert mapped == polygon
        assert sorted(h_to_v(cs.diag_chart).vertices) == polygon


def test_charted_slice_json_shape():
    cs = gt_slice(SideData.from_weights(1, (3, 3, 3, 3, 4)))
    d = cs.to_json_dict()
    assert set(d) >= {"entry_chart", "diag_chart", "entry_to_diag",
                      "entry_coords", "lattice_note"}
    assert cs.lattice_note


def test_degenerate_point_case_consistent_across_charts():
    s = SideData.from_weights(1, (2, 2, 2, 2, 8))
    cs = gt_slice(s)
    assert polytope_dim(cs.entry_chart) == 0
    diag = h_to_v(cs.diag_chart).vertices
    assert diag == h_to_v(remove_redundant(polygon_hrep(s))).vertices
    assert len(diag) == 1
