import math

import pytest
from hypothesis import given

from hyptri import (
    Triangle,
    TriangleAngles,
    TriangleSides,
    bisector_foot_from_B,
    bisector_foot_from_C,
    bisector_lengths,
    disk_distance,
    embed_triangle,
    point_toward,
    solve_from_angles,
    solve_from_asa,
    solve_from_sss,
    subtriangle_residuals,
    unconditional_identities,
)

from conftest import ORACLE_TOL, angle_triples, seeded_triangles

EQUILATERAL_UNIT_BISECTOR = 0.8340252289813307  # acosh(cosh 1 / cosh 0.5)


def test_equilateral_foot_is_midpoint():
    t = solve_from_sss(TriangleSides(1.0, 1.0, 1.0))
    u, U = bisector_foot_from_B(t)
    assert u == pytest.approx(0.5, abs=1e-15)
    assert U == pytest.approx(0.5, abs=1e-15)


def test_isosceles_feet_are_midpoints():
    # a = c forces the foot from B onto the midpoint of AC, and a = b the
    # foot from C onto the midpoint of AB
    t = solve_from_angles(TriangleAngles(0.7, 0.5, 0.7))  # A = C so a = c
    u, U = bisector_foot_from_B(t)
    assert u == pytest.approx(t.b / 2, rel=1e-14)
    assert U == pytest.approx(t.b / 2, rel=1e-14)
    t2 = solve_from_angles(TriangleAngles(0.7, 0.7, 0.5))  # A = B so a = b
    v, V = bisector_foot_from_C(t2)
    assert v == pytest.approx(t2.c / 2, rel=1e-14)
    assert V == pytest.approx(t2.c / 2, rel=1e-14)


def test_foot_ratio_matches_sinh_rule():
    for t in seeded_triangles(300, seed=11):
        u, U = bisector_foot_from_B(t)
        assert math.sinh(u) / math.sinh(U) == pytest.approx(
            math.sinh(t.c) / math.sinh(t.a), rel=1e-12
        )


def test_foot_segments_sum_to_side():
    for t in seeded_triangles(300, seed=12):
        u, U = bisector_foot_from_B(t)
        v, V = bisector_foot_from_C(t)
        assert abs(u + U - t.b) <= 1e-12 * t.b
        assert abs(v + V - t.c) <= 1e-12 * t.c


def test_foot_agrees_with_asa_subtriangle_solve():
    # independent oracle: solve triangle ABB' from angles A, B/2 and side c
    for t in seeded_triangles(300, seed=13):
        u, _ = bisector_foot_from_B(t)
        oracle = solve_from_asa(t.A, t.c, 0.5 * t.B, tol=ORACLE_TOL)
        assert u == pytest.approx(oracle.sides.b, rel=1e-10)
        v, _ = bisector_foot_from_C(t)
        oracle2 = solve_from_asa(t.A, t.b, 0.5 * t.C, tol=ORACLE_TOL)
        assert v == pytest.approx(oracle2.sides.b, rel=1e-10)


def test_equilateral_bisector_length():
    t = solve_from_sss(TriangleSides(1.0, 1.0, 1.0))
    d = bisector_lengths(t)
    assert d.tB == pytest.approx(math.acosh(math.cosh(1.0) / math.cosh(0.5)), rel=1e-13)
    assert d.tB == pytest.approx(EQUILATERAL_UNIT_BISECTOR, rel=1e-13)
    # apex bisector is perpendicular to the base, so the right-angle relation
    # cosh tB cosh u = cosh c pins the same value
    assert math.cosh(d.tB) * math.cosh(d.u) == pytest.approx(math.cosh(1.0), rel=1e-13)
    assert d.u == d.U == d.v == d.V == pytest.approx(0.5, abs=1e-15)


def test_isosceles_bisectors_equal():
    t = solve_from_angles(TriangleAngles(0.9, 0.6, 0.6))
    d = bisector_lengths(t)
    assert abs(d.tB - d.tC) <= 1e-12


def test_bisector_length_matches_disk_distance():
    for t in seeded_triangles(100, seed=14):
        d = bisector_lengths(t)
        pA, pB, pC = embed_triangle(t)
        footB = point_toward(pA, pC, d.u)
        assert disk_distance(pB, footB) == pytest.approx(d.tB, abs=1e-9)
        footC = point_toward(pA, pB, d.v)
        assert disk_distance(pC, footC) == pytest.approx(d.tC, abs=1e-9)


def test_subtriangle_residuals_small():
    for t in seeded_triangles(500, seed=15):
        d = bisector_lengths(t)
        assert subtriangle_residuals(t, d).max() < 1e-10


def test_unconditional_identities_small():
    for t in seeded_triangles(500, seed=16):
        d = bisector_lengths(t)
        r = unconditional_identities(d, t)
        assert r.idU < 1e-10
        assert r.idV < 1e-10


def test_equilateral_identity_ratios_are_one():
    t = solve_from_sss(TriangleSides(1.0, 1.0, 1.0))
    d = bisector_lengths(t)
    assert math.sinh(d.U) / math.sinh(d.u) == 1.0
    assert math.sin(t.A) / math.sin(t.C) == 1.0


def test_ratio_product_check():
    # (sinh u / sinh v) (sinh tC / sinh tB) = sin(B/2) / sin(C/2) without
    # assuming the bisectors are equal
    for t in seeded_triangles(300, seed=17):
        d = bisector_lengths(t)
        lhs = (math.sinh(d.u) / math.sinh(d.v)) * (math.sinh(d.tC) / math.sinh(d.tB))
        assert lhs == pytest.approx(math.sin(d.beta) / math.sin(d.gamma), rel=1e-10)


@given(angle_triples())
def test_swap_symmetry_is_exact(triple):
    A, B, C = triple
    t = solve_from_angles(TriangleAngles(A, B, C, tol=ORACLE_TOL), tol=ORACLE_TOL)
    swapped = Triangle(
        TriangleSides(t.a, t.c, t.b, tol=ORACLE_TOL),
        TriangleAngles(t.A, t.C, t.B, tol=ORACLE_TOL),
        tol=ORACLE_TOL,
    )
    d = bisector_lengths(t, tol=ORACLE_TOL)
    ds = bisector_lengths(swapped, tol=ORACLE_TOL)
    assert (ds.v, ds.V, ds.tC) == (d.u, d.U, d.tB)
    assert (ds.u, ds.U, ds.tB) == (d.v, d.V, d.tC)
