"""Acceptance gate: ten numbered criteria, each a single test that prints one
pass line and enforces its runtime budget.  All comparisons are exact."""

import random
import time
from fractions import Fraction

from weightpoly.builders import (SideData, dual_side_data, entry_to_diag_map,
                                 gt_slice, polygon_hrep)
from weightpoly.counting import real_fiber_size, verify_duality, verify_ehrhart_identity
from weightpoly.exact import vec
from weightpoly.polytopes import (empty_hrep, h_to_v, lattice_points,
                                  polytope_dim, remove_redundant, v_to_h)
from weightpoly.toric import facet_labels, normal_fan, singularity_report
from oracles import (brute_force_lattice_points, random_admissible_r,
                     random_box_with_cuts)
from weightpoly.polytopes import HPolytope


def fvec(points):
    return tuple(sorted(tuple(Fraction(c) for c in p) for p in points))


def side(m, r):
    return SideData.from_weights(m, vec(r))


def c56_cases():
    """The shared batch of 200 random admissible integral weight vectors."""
    rng = random.Random(97)
    cases = []
    for _ in range(200):
        n = rng.choice((5, 6, 7))
        cases.append(side(1, random_admissible_r(rng, n, hi=9)))
    return cases


def test_c01_pentagon_vertices():
    start = time.monotonic()
    got = h_to_v(polygon_hrep(side(1, (3, 3, 3, 3, 3)))).vertices
    assert got == fvec([(0, 3), (3, 0), (6, 3), (6, 6), (3, 6)])
    elapsed = time.monotonic() - start
    assert elapsed < 1
    print(f"\nC1 PASS: pentagon vertex list exact ({elapsed:.2f}s)")


def test_c02_hexagon_and_heptagon_vertices():
    start = time.monotonic()
    hexagon = h_to_v(polygon_hrep(side(1, (3, 3, 3, 3, 4)))).vertices
    assert hexagon == fvec([(0, 3), (2, 1), (4, 1), (4, 7), (6, 3), (6, 7)])
    t1 = time.monotonic() - start
    assert t1 < 1
    start = time.monotonic()
    heptagon = h_to_v(polygon_hrep(side(1, (3, 4, 3, 4, 3)))).vertices
    assert heptagon == fvec([(1, 2), (1, 4), (2, 1), (4, 1), (4, 7), (7, 4), (7, 7)])
    t2 = time.monotonic() - start
    assert t2 < 1
    print(f"\nC2 PASS: hexagon and heptagon vertex lists exact ({t1:.2f}s, {t2:.2f}s)")


def test_c03_singularity_counts():
    start = time.monotonic()
    expected = {(3, 3, 3, 3, 3): 2, (3, 3, 3, 3, 4): 1, (3, 4, 3, 4, 3): 0}
    for r, want in expected.items():
        rep = singularity_report(normal_fan(remove_redundant(polygon_hrep(side(1, r)))))
        singular = rep.singular
        assert len(singular) == want
        assert all(e.kind == "cyclic_quotient" and e.index == 2 for e in singular)
        if want == 0:
            assert rep.is_smooth
    elapsed = time.monotonic() - start
    assert elapsed < 1
    print(f"\nC3 PASS: singular vertex counts (2, 1, 0), heptagon smooth ({elapsed:.2f}s)")


def test_c04_simplex_example_and_generalization():
    start = time.monotonic()
    P = remove_redundant(polygon_hrep(side(1, (2, 2, 2, 2, 2, 9))))
    assert len(P.ineqs) == 4 and len(h_to_v(P).vertices) == 4
    for n in (5, 6, 7, 8):
        r = (2,) * (n - 1) + (2 * (n - 1) - 1,)
        Q = remove_redundant(polygon_hrep(side(1, r)))
        assert len(Q.ineqs) == n - 2
        assert len(h_to_v(Q).vertices) == n - 2
    elapsed = time.monotonic() - start
    assert elapsed < 5
    print(f"\nC4 PASS: simplex case 4/4 and n-2 pattern for n=5..8 ({elapsed:.2f}s)")


def test_c05_facet_catalogue_property():
    start = time.monotonic()
    for s in c56_cases():
        d = s.n - 3
        allowed = set()
        for sign in (1, -1):
            e = [Fraction(0)] * d
            e[0] = Fraction(sign)
            allowed.add(tuple(e))
            e = [Fraction(0)] * d
            e[d - 1] = Fraction(sign)
            allowed.add(tuple(e))
            for i in range(d - 1):
                for s2 in (1, -1):
                    e = [Fraction(0)] * d
                    e[i] = Fraction(sign)
                    e[i + 1] = Fraction(sign * s2)
                    allowed.add(tuple(e))
        P = remove_redundant(polygon_hrep(s))
        for a, _ in P.ineqs:
            assert tuple(a) in allowed
        labels = facet_labels(s, P)
        assert len(labels) == len(P.ineqs)
        assert all(label.tags for label in labels)
    elapsed = time.monotonic() - start
    assert elapsed < 60
    print(f"\nC5 PASS: 200 random cases, all facet normals in catalogue and labeled ({elapsed:.2f}s)")


def test_c06_chart_equivalence():
    start = time.monotonic()
    for s in c56_cases():
        cs = gt_slice(s)
        f = entry_to_diag_map(s)
        mapped = fvec(f.apply(v) for v in h_to_v(cs.entry_chart).vertices)
        polygon = fvec(h_to_v(polygon_hrep(s)).vertices)
        assert mapped == polygon
    elapsed = time.monotonic() - start
    assert elapsed < 120
    print(f"\nC6 PASS: entry chart maps onto the polygon for all 200 cases ({elapsed:.2f}s)")


def test_c07_ehrhart_equals_multiplicity():
    start = time.monotonic()
    hexagon = verify_ehrhart_identity(side(1, (3, 3, 3, 3, 4)), 3)
    assert hexagon.all_pass
    assert hexagon.checks[0].dilate == 1 and hexagon.checks[0].lattice_count == 11
    rng = random.Random(131)
    for _ in range(50):
        n = rng.choice((4, 5, 6))
        r = random_admissible_r(rng, n, hi=6, integral_P=True)
        rep = verify_ehrhart_identity(side(1, r), 3)
        assert len(rep.checks) == 3 and rep.all_pass
    rep = verify_ehrhart_identity(side(2, (2, 2, 2, 2, 2, 2)), 2)
    assert len(rep.checks) == 2 and rep.all_pass
    elapsed = time.monotonic() - start
    assert elapsed < 600
    print(f"\nC7 PASS: lattice counts equal multiplicities, t=1..3 x50 + m=2 case ({elapsed:.2f}s)")


def test_c08_duality_invariants():
    start = time.monotonic()
    assert verify_duality(side(1, (3, 3, 3, 3, 4)), 3).all_pass
    assert verify_duality(side(1, (1, 1, 1, 1, 1, 1)), 3).all_pass
    rng = random.Random(211)
    plan = [(1, (5, 6, 7), 6)] * 10 + [(2, (5, 6), 4)] * 7 + [(3, (6,), 4)] * 3
    for m, ns, hi in plan:
        n = rng.choice(ns)
        r = random_admissible_r(rng, n, hi=hi, integral_P=True, strict=True, m=m)
        assert verify_duality(side(m, r), 3).all_pass
    elapsed = time.monotonic() - start
    assert elapsed < 300
    print(f"\nC8 PASS: duality invariants for 2 fixed + 20 random cases ({elapsed:.2f}s)")


def test_c09_dimension_and_fiber_formulas():
    start = time.monotonic()
    cases = [(1, 4, (2, 3, 3, 4)), (1, 5, (3, 3, 3, 3, 4)), (1, 6, (1, 1, 1, 1, 1, 1)),
             (2, 4, (3, 3, 3, 3)), (2, 5, (2, 2, 3, 3, 2)), (2, 6, (2, 2, 2, 2, 2, 2))]
    for m, n, r in cases:
        s = side(m, r)
        assert s.n == n
        want = m * n - 2 * m - m * m
        assert polytope_dim(gt_slice(s).entry_chart) == want
        assert real_fiber_size(m, n) == 2 ** want
    elapsed = time.monotonic() - start
    assert elapsed < 10
    print(f"\nC9 PASS: dim = mn-2m-m^2 and fiber = 2^dim for m<=2, n<=6 ({elapsed:.2f}s)")


def test_c10_engine_oracles():
    start = time.monotonic()
    rng = random.Random(499)
    nonempty = 0
    for _ in range(500):
        H = random_box_with_cuts(rng, HPolytope)
        V1 = h_to_v(H)
        if V1.vertices:
            nonempty += 1
            H2 = v_to_h(V1)
            assert h_to_v(H2).vertices == V1.vertices
        else:
            assert remove_redundant(H) == empty_hrep(H.dim)
        assert tuple(lattice_points(H)) == brute_force_lattice_points(H)
    assert nonempty > 100  # the generator must actually exercise the round trip
    elapsed = time.monotonic() - start
    assert elapsed < 300
    print(f"\nC10 PASS: 500 random polytopes, round trips and lattice counts agree ({elapsed:.2f}s)")
