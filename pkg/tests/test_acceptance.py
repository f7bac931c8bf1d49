"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with `pytest -s tests/test_acceptance.py` to see the pass/fail lines.
"""

import math
import time

import numpy as np
import pytest

from apolyint.cli import main
from apolyint.curve import SurgerySpec, branch_logs, fig8_point, k52_point, solve_surgery, trace
from apolyint.integrate import IntegrationMethod, gv_difference, integrate_param, integrate_traced
from apolyint.mahler import mahler_measure
from apolyint.poly import KnotId, builtin_apoly, parse_poly
from apolyint.report import verify_paper
from apolyint.seifert import NAMED_MANIFOLDS, euler_characteristic, euler_number, seifert_volume
from apolyint.sl2tilde import SlTildeElt, compose, cover

from conftest import lobachevsky_volume_oracle, torus_log_mean

PI2 = math.pi**2
GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def report(criterion: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {criterion}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def _both_methods(knot, frm, to):
    t0 = time.perf_counter()
    s0, p_from = solve_surgery(knot, SurgerySpec(*frm))
    s1, _ = solve_surgery(knot, SurgerySpec(*to))
    param = integrate_param(knot, s0, s1).value
    path = trace(builtin_apoly(knot), p_from, SurgerySpec(*to), 1e-3)
    traced = integrate_traced(path).value
    elapsed = time.perf_counter() - t0
    return param, traced, elapsed


def test_criterion_1_fig8_minus1_integral():
    expected = PI2 / 42.0
    param, traced, elapsed = _both_methods(KnotId.FIG8, (0, 1), (-1, 1))
    ok = abs(param - expected) < 1e-6 and abs(traced - expected) < 1e-6 and elapsed < 5.0
    report("criterion 1: integral P0->P1 = pi^2/42 by both methods within 1e-6, < 5 s",
           ok, f"param err {abs(param - expected):.2e}, traced err {abs(traced - expected):.2e}, "
               f"{elapsed:.2f} s")


def test_criterion_2_fig8_minus2_integral():
    expected = PI2 / 20.0
    param, traced, elapsed = _both_methods(KnotId.FIG8, (0, 1), (-2, 1))
    ok = abs(param - expected) < 1e-6 and abs(traced - expected) < 1e-6 and elapsed < 5.0
    report("criterion 2: integral P0->P2 = pi^2/20 by both methods within 1e-6, < 5 s",
           ok, f"param err {abs(param - expected):.2e}, traced err {abs(traced - expected):.2e}, "
               f"{elapsed:.2f} s")


def test_criterion_3_k52_integral():
    expected = -53.0 * PI2 / 924.0
    param, traced, elapsed = _both_methods(KnotId.K52, (1, 1), (2, 1))
    ok = abs(param - expected) < 1e-6 and abs(traced - expected) < 1e-6 and elapsed < 10.0
    report("criterion 3: integral Q1->Q2 = -53 pi^2/924 within 1e-6, < 10 s",
           ok, f"param err {abs(param - expected):.2e}, traced err {abs(traced - expected):.2e}, "
               f"{elapsed:.2f} s")


def test_criterion_4_surgery_points():
    targets = [
        (KnotId.FIG8, (-1, 1), 1.635573130),
        (KnotId.FIG8, (-2, 1), 1.700015776),
        (KnotId.K52, (1, 1), 0.4474073272),
        (KnotId.K52, (2, 1), 0.4845486882),
    ]
    worst = 0.0
    for knot, pq, expected in targets:
        _, point = solve_surgery(knot, SurgerySpec(*pq))
        worst = max(worst, abs(point.x - expected))
    _, p0 = solve_surgery(KnotId.FIG8, SurgerySpec(0, 1))
    p0_err = max(abs(p0.x - GOLDEN), abs(p0.y - 1.0))
    ok = worst < 5e-9 and p0_err < 1e-12
    report("criterion 4: surgery x-coordinates within 5e-9, P0 within 1e-12",
           ok, f"worst decimal err {worst:.2e}, P0 err {p0_err:.2e}")


def test_criterion_5_seifert_volumes_exact():
    from fractions import Fraction

    expected = {
        "sigma(2,3,7)": Fraction(2, 21),
        "sfs(2,4,5)": Fraction(1, 5),
        "sigma(2,3,11)": Fraction(50, 33),
        "sfs(2,4,7)": Fraction(9, 7),
    }
    exact_ok = all(seifert_volume(NAMED_MANIFOLDS[name]).coefficient == coeff
                   for name, coeff in expected.items())
    from apolyint.seifert import SeifertData
    zero_e = seifert_volume(SeifertData(0, ((2, 1), (2, -1)))).coefficient == 0
    zero_chi = seifert_volume(SeifertData(0, ((3, 1),))).coefficient == 0
    ok = exact_ok and zero_e and zero_chi
    report("criterion 5: Seifert volumes exact, zero when e = 0 or chi >= 0", ok)


def test_criterion_6_gv_consistency():
    s0, _ = solve_surgery(KnotId.K52, SurgerySpec(1, 1))
    s1, _ = solve_surgery(KnotId.K52, SurgerySpec(2, 1))
    gv = gv_difference(integrate_param(KnotId.K52, s0, s1)).value
    vol_247 = seifert_volume(NAMED_MANIFOLDS["sfs(2,4,7)"]).coefficient
    vol_2311 = seifert_volume(NAMED_MANIFOLDS["sigma(2,3,11)"]).coefficient
    expected = float(-vol_247 + vol_2311) * PI2  # signed GV values are both negative
    err = abs(gv - expected)
    report("criterion 6: GV difference on Q1->Q2 equals (53/231) pi^2 within 4e-6",
           err < 4e-6, f"err {err:.2e}")


def test_criterion_7_property_suites(rng):
    fig8_res = max(fig8_point(float(s)).point.residual for s in rng.uniform(0, 10, 400))
    k52_res = max(k52_point(float(s)).point.residual for s in rng.uniform(0.05, 20, 400))
    residual_ok = fig8_res < 1e-8 and k52_res < 1e-8

    # Hausdorff distance between tracer output and the parametrized curve
    p0 = fig8_point(0.0).point
    path = trace(builtin_apoly(KnotId.FIG8), p0, SurgerySpec(-2, 1), 2.5e-4)
    traced = np.array([[pt.x, pt.y] for pt in path.points])
    s_end, _ = solve_surgery(KnotId.FIG8, SurgerySpec(-2, 1))
    curve = np.array([[math.exp(a), math.exp(b)] for a, b in
                      (branch_logs(KnotId.FIG8, float(s)) for s in np.linspace(0, s_end, 4000))])

    def directed(points, polyline):
        seg_a = polyline[:-1]
        seg_d = polyline[1:] - seg_a
        lens2 = np.maximum(np.einsum("ij,ij->i", seg_d, seg_d), 1e-300)
        worst = 0.0
        for pt in points:
            t = np.clip(np.einsum("ij,ij->i", pt - seg_a, seg_d) / lens2, 0.0, 1.0)
            foot = seg_a + t[:, None] * seg_d
            worst = max(worst, float(np.min(np.hypot(*(pt - foot).T))))
        return worst

    hausdorff = max(directed(traced, curve), directed(curve, traced))
    hausdorff_ok = hausdorff < 1e-7

    def rand_elt():
        r = rng.uniform(0, 0.95)
        th = rng.uniform(0, 2 * math.pi)
        return SlTildeElt(r * complex(math.cos(th), math.sin(th)), rng.uniform(-8, 8))

    assoc_worst = 0.0
    for _ in range(1000):
        g, h, k = rand_elt(), rand_elt(), rand_elt()
        l = compose(compose(g, h), k)
        r = compose(g, compose(h, k))
        assoc_worst = max(assoc_worst, abs(l.gamma - r.gamma), abs(l.omega - r.omega))
    assoc_ok = assoc_worst < 1e-10

    hom_worst = 0.0
    for _ in range(1000):
        g, h = rand_elt(), rand_elt()
        lhs = cover(compose(g, h))
        rhs = cover(g) @ cover(h)
        hom_worst = max(hom_worst, min(np.abs(lhs - rhs).max(), np.abs(lhs + rhs).max()))
    hom_ok = hom_worst < 1e-8

    poly_ok = all(builtin_apoly(k).is_even_in_x() and builtin_apoly(k).is_reciprocal()
                  for k in KnotId)

    ok = residual_ok and hausdorff_ok and assoc_ok and hom_ok and poly_ok
    report("criterion 7: residuals, Hausdorff, associativity, covering, structure checks",
           ok, f"residual {max(fig8_res, k52_res):.2e}, hausdorff {hausdorff:.2e}, "
               f"assoc {assoc_worst:.2e}, hom {hom_worst:.2e}")


def test_criterion_8_mahler_measures():
    t0 = time.perf_counter()
    smyth = mahler_measure(parse_poly("1 + x + y"), tol=1e-6).value
    oracle = torus_log_mean(parse_poly("1 + x + y"), grid=4096)
    fig8 = mahler_measure(builtin_apoly(KnotId.FIG8), tol=1e-6).value
    volume = lobachevsky_volume_oracle()
    elapsed = time.perf_counter() - t0
    smyth_ok = abs(smyth - oracle) < 1e-4
    fig8_ok = abs(math.pi * fig8 - volume) < 5e-3
    ok = smyth_ok and fig8_ok and elapsed < 60.0
    report("criterion 8: m(1+x+y) within 1e-4 of oracle; pi m(A_fig8) within 5e-3 of volume; < 60 s",
           ok, f"smyth err {abs(smyth - oracle):.2e}, volume err {abs(math.pi * fig8 - volume):.2e}, "
               f"{elapsed:.1f} s")


def test_criterion_9_verify_paper_suite(capsys):
    t0 = time.perf_counter()
    exit_code = main(["verify-paper"])
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    ok = exit_code == 0 and elapsed < 120.0
    with capsys.disabled():
        report("criterion 9: verify-paper exits 0 in under 2 minutes",
               ok, f"exit {exit_code}, {elapsed:.2f} s")
