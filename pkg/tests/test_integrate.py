"""Integrals of a db - b da along the branches, both routes."""

import math

import pytest

from apolyint.curve import SurgerySpec, TracedPath, fig8_point, solve_surgery, trace
from apolyint.integrate import (IntegrationMethod, _segment_integral, gv_difference,
                                integrate_between_surgeries, integrate_param,
                                integrate_traced)
from apolyint.poly import KnotId, builtin_apoly
from apolyint.quadrature import adaptive_gauss_kronrod

PI2 = math.pi**2


@pytest.fixture(scope="module")
def surgery_params():
    out = {}
    for knot, pq in [(KnotId.FIG8, (0, 1)), (KnotId.FIG8, (-1, 1)), (KnotId.FIG8, (-2, 1)),
                     (KnotId.K52, (1, 1)), (KnotId.K52, (2, 1))]:
        out[(knot, pq)] = solve_surgery(knot, SurgerySpec(*pq))
    return out


# -------------------------------------------------------------- parametrized

def test_param_p0_to_p1(surgery_params):
    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    res = integrate_param(KnotId.FIG8, 0.0, s1)
    assert res.value == pytest.approx(PI2 / 42.0, abs=1e-10)
    assert res.method is IntegrationMethod.PARAMETRIZED


def test_param_empty_interval():
    res = integrate_param(KnotId.FIG8, 0.7, 0.7)
    assert res.value == 0.0
    assert res.error_estimate == 0.0


def test_param_p0_to_p2(surgery_params):
    s2 = surgery_params[(KnotId.FIG8, (-2, 1))].s
    res = integrate_param(KnotId.FIG8, 0.0, s2)
    assert res.value == pytest.approx(PI2 / 20.0, abs=1e-10)


def test_param_q1_to_q2(surgery_params):
    s0 = surgery_params[(KnotId.K52, (1, 1))].s
    s1 = surgery_params[(KnotId.K52, (2, 1))].s
    res = integrate_param(KnotId.K52, s0, s1)
    assert res.value == pytest.approx(-53.0 * PI2 / 924.0, abs=1e-10)


def test_param_orientation_antisymmetry(surgery_params):
    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    fwd = integrate_param(KnotId.FIG8, 0.0, s1)
    rev = integrate_param(KnotId.FIG8, s1, 0.0)
    assert rev.value == -fwd.value


def test_param_extended_precision(surgery_params):
    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    res = integrate_param(KnotId.FIG8, 0.0, s1, extended=True)
    assert res.value == pytest.approx(PI2 / 42.0, abs=1e-12)
    assert res.error_estimate < 1e-12


def test_param_endpoints_are_curve_points(surgery_params):
    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    res = integrate_param(KnotId.FIG8, 0.0, s1)
    assert res.endpoints[0].y == pytest.approx(1.0, abs=1e-14)
    assert res.endpoints[1].x == pytest.approx(1.635573130, abs=5e-9)


# -------------------------------------------------------------------- traced

def test_traced_matches_param_on_all_segments(surgery_params):
    cases = [
        (KnotId.FIG8, (0, 1), (-1, 1), PI2 / 42.0),
        (KnotId.FIG8, (0, 1), (-2, 1), PI2 / 20.0),
        (KnotId.K52, (1, 1), (2, 1), -53.0 * PI2 / 924.0),
    ]
    for knot, frm, to, expected in cases:
        start = surgery_params[(knot, frm)].point
        path = trace(builtin_apoly(knot), start, SurgerySpec(*to), 1e-3)
        traced = integrate_traced(path)
        param = expected
        assert traced.value == pytest.approx(param, abs=1e-7)
        assert traced.method is IntegrationMethod.TRACED


def test_traced_single_point_path():
    poly = builtin_apoly(KnotId.FIG8)
    path = TracedPath.from_points(poly, [fig8_point(0.2).point])
    assert integrate_traced(path).value == 0.0


def test_traced_reversal_negates_exactly(surgery_params):
    start = surgery_params[(KnotId.FIG8, (0, 1))].point
    path = trace(builtin_apoly(KnotId.FIG8), start, SurgerySpec(-1, 1), 1e-3)
    fwd = integrate_traced(path)
    rev = integrate_traced(path.reversed())
    assert rev.value == -fwd.value  # bitwise, via fsum
    assert abs(rev.value + fwd.value) < 1e-12


def test_traced_error_estimate_is_refinement_gap(surgery_params):
    start = surgery_params[(KnotId.FIG8, (0, 1))].point
    path = trace(builtin_apoly(KnotId.FIG8), start, SurgerySpec(-1, 1), 5e-3)
    res = integrate_traced(path)
    assert res.error_estimate < 1e-9
    assert abs(res.value - PI2 / 42.0) < 1e-8


def test_traced_composite_rule_order(surgery_params):
    """Observed convergence order of the per-segment rule is at least 4."""
    knot = KnotId.FIG8
    s_end = surgery_params[(knot, (-2, 1))].s
    poly = builtin_apoly(knot)
    px, py = poly.partials()
    reference = integrate_param(knot, 0.0, s_end).value

    def composite(n_points):
        pts = [fig8_point(s_end * k / (n_points - 1)).point for k in range(n_points)]
        return math.fsum(_segment_integral(poly, px, py, a, b)
                         for a, b in zip(pts, pts[1:]))

    e1 = abs(composite(9) - reference)
    e2 = abs(composite(17) - reference)
    order = math.log2(e1 / e2)
    assert order > 3.5


# -------------------------------------------------------- identities and ties

def test_integration_by_parts_identity(surgery_params):
    """int(a db - b da) = 2 int(a db) - [a b] between the endpoints."""
    from apolyint.curve import branch_derivs

    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    total = integrate_param(KnotId.FIG8, 0.0, s1).value

    def a_db(s):
        a, b, da, db = branch_derivs(KnotId.FIG8, s)
        return a * db

    part = adaptive_gauss_kronrod(a_db, 0.0, s1).value
    p0 = surgery_params[(KnotId.FIG8, (0, 1))].point
    p1 = surgery_params[(KnotId.FIG8, (-1, 1))].point
    boundary = p1.a * p1.b - p0.a * p0.b
    assert total == pytest.approx(2.0 * part - boundary, abs=1e-8)


def test_additivity_of_segments(surgery_params):
    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    s2 = surgery_params[(KnotId.FIG8, (-2, 1))].s
    i_01 = integrate_param(KnotId.FIG8, 0.0, s1).value
    i_12 = integrate_param(KnotId.FIG8, s1, s2).value
    i_02 = integrate_param(KnotId.FIG8, 0.0, s2).value
    assert i_01 + i_12 == pytest.approx(i_02, abs=1e-8)


def test_gv_difference_values(surgery_params):
    s1 = surgery_params[(KnotId.FIG8, (-1, 1))].s
    s2 = surgery_params[(KnotId.FIG8, (-2, 1))].s
    sq1 = surgery_params[(KnotId.K52, (1, 1))].s
    sq2 = surgery_params[(KnotId.K52, (2, 1))].s
    gv1 = gv_difference(integrate_param(KnotId.FIG8, 0.0, s1))
    gv2 = gv_difference(integrate_param(KnotId.FIG8, 0.0, s2))
    gv3 = gv_difference(integrate_param(KnotId.K52, sq1, sq2))
    assert gv1.value == pytest.approx(-2.0 * PI2 / 21.0, abs=1e-9)
    assert gv2.value == pytest.approx(-PI2 / 5.0, abs=1e-9)
    assert gv3.value == pytest.approx(53.0 * PI2 / 231.0, abs=1e-9)
    assert gv1.value == -4.0 * gv1.integral.value


def test_integrate_between_surgeries_both_methods():
    param = integrate_between_surgeries(KnotId.K52, SurgerySpec(1, 1), SurgerySpec(2, 1))
    traced = integrate_between_surgeries(KnotId.K52, SurgerySpec(1, 1), SurgerySpec(2, 1),
                                         method=IntegrationMethod.TRACED)
    assert param.value == pytest.approx(-53.0 * PI2 / 924.0, abs=1e-9)
    assert abs(param.value - traced.value) < 1e-7
