"""Points on the real branch C of each builtin A-polynomial curve.

Two independent routes produce curve points: explicit branch parametrizations
in the parameter s (closed forms for log x and log y), and a generic
predictor-corrector tracer that knows only the polynomial.  Surgery points,
where x^p y^q = 1 meets the curve, are located on the parametrized branch.

The figure-eight branch lives on s >= 0 with a = log x >= 0:

    cosh(2a) = (s^2 + 3s + 3) / (2(s + 1))
    cosh(b)  = (s^4 + 5s^3 + 7s^2 + 4s + 2) / (2(s + 1)^2)

The 5_2 branch lives on s > 0 with a < 0 and b > 0:

    cosh(2a) = (4s^2 + 6s + 4 + 2 sqrt(s^2 + 4)) / (8s)
    cosh(b)  = 1 - (s^5 + 4s^4 + 6s^3 + 6s^2)/4 + ((s^4 + 4s^3 + 4s^2)/4) sqrt(s^2 + 4)

The 5_2 cosh(b) was recovered by exact elimination against the curve itself
(the quoted source garbles this formula); both branches are validated by the
residual oracle |A(x(s), y(s))| < 1e-8 across the working range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

from .config import DEFAULTS, Tolerances
from .poly import KnotId, LaurentPoly2, builtin_apoly


class CurveError(RuntimeError):
    pass


class ResidualError(CurveError):
    """A produced point does not lie on the curve to the required tolerance."""


class SingularPointError(CurveError):
    """The gradient of A vanished; the curve is singular or nearly so."""


class NewtonDivergenceError(CurveError):
    pass


class NoSignChangeError(CurveError):
    """The surgery constraint does not change sign on the bracket."""


class MultipleRootsError(CurveError):
    """Several surgery roots in one bracket; approximate locations attached."""

    def __init__(self, message: str, candidates: Sequence[float]):
        super().__init__(message)
        self.candidates = list(candidates)


class StepSizeError(CurveError):
    """Tracing step fell below the minimum allowed step."""


class StopNotReachedError(CurveError):
    """Tracing exhausted its arclength budget without meeting the stop condition."""


# ------------------------------------------------------------------ data types

@dataclass(frozen=True)
class CurvePoint:
    """A point on the positive-real locus, with log coordinates."""

    x: float
    y: float
    a: float
    b: float
    residual: float

    @classmethod
    def from_logs(cls, poly: LaurentPoly2, a: float, b: float) -> "CurvePoint":
        x, y = math.exp(a), math.exp(b)
        return cls(x, y, a, b, abs(poly(x, y)))

    @classmethod
    def from_xy(cls, poly: LaurentPoly2, x: float, y: float) -> "CurvePoint":
        if x <= 0 or y <= 0:
            raise ValueError("curve points live in the positive quadrant")
        return cls(x, y, math.log(x), math.log(y), abs(poly(x, y)))


@dataclass(frozen=True)
class BranchSample:
    """A parametrized branch point at parameter value s."""

    s: float
    point: CurvePoint
    knot: KnotId


@dataclass(frozen=True)
class SurgerySpec:
    """Constraint x^p y^q = 1, i.e. p*a + q*b = 0 in log coordinates."""

    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 and self.q == 0:
            raise ValueError("p and q must not both be zero")

    def log_constraint(self, a: float, b: float) -> float:
        return self.p * a + self.q * b

    def __str__(self) -> str:
        return f"x^{self.p}*y^{self.q}=1"


@dataclass(frozen=True)
class TracedPath:
    """Ordered curve points with cumulative xy-plane arclength."""

    poly: LaurentPoly2
    points: Tuple[CurvePoint, ...]
    arclengths: Tuple[float, ...]
    direction: int  # sign applied to the tangent (A_y, -A_x) while tracing

    @classmethod
    def from_points(cls, poly: LaurentPoly2, points: Sequence[CurvePoint],
                    direction: int = 1) -> "TracedPath":
        arcs = [0.0]
        for prev, cur in zip(points, points[1:]):
            arcs.append(arcs[-1] + math.hypot(cur.x - prev.x, cur.y - prev.y))
        return cls(poly, tuple(points), tuple(arcs), direction)

    def reversed(self) -> "TracedPath":
        total = self.arclengths[-1] if self.arclengths else 0.0
        return TracedPath(self.poly, tuple(reversed(self.points)),
                          tuple(total - s for s in reversed(self.arclengths)),
                          -self.direction)

    def __len__(self) -> int:
        return len(self.points)


# ----------------------------------------------------- branch parametrizations

def _fig8_logs(s, lib=math):
    """(a, b) on the figure-eight branch; valid for s >= 0.

    cosh(b) - 1 factors as s^2 (s^2 + 5s + 5) / (2 (s+1)^2), which keeps b
    accurate near s = 0 where the plain cosh expression cancels.
    """
    f = (s * s + 3 * s + 3) / (2 * (s + 1))
    if f < 1:
        raise AssertionError(f"cosh(2a) = {f} < 1 at s = {s}; outside branch domain")
    a = 0.5 * lib.acosh(f)
    gm1 = s * s * (s * s + 5 * s + 5) / (2 * (s + 1) ** 2)
    b = lib.asinh(lib.sqrt(gm1 * (gm1 + 2)))
    return a, b

def _fig8_derivs(s, lib=math):
    """(a, b, da/ds, db/ds) on the figure-eight branch."""
    f = (s * s + 3 * s + 3) / (2 * (s + 1))
    a = 0.5 * lib.acosh(f)
    gm1 = s * s * (s * s + 5 * s + 5) / (2 * (s + 1) ** 2)
    b = lib.asinh(lib.sqrt(gm1 * (gm1 + 2)))
    fp = s * (s + 2) / (2 * (s + 1) ** 2)
    da = fp / (2 * lib.sqrt((f - 1) * (f + 1)))
    # db = g' / sqrt((g-1)(g+1)) with the common factor s cancelled exactly
    g = gm1 + 1
    db = (s + 2) * (2 * s * s + 5 * s + 5) / (
        2 * (s + 1) ** 2 * lib.sqrt((s * s + 5 * s + 5) * (g + 1) / 2))
    return a, b, da, db

def _k52_logs(s, lib=math):
    """(a, b) on the 5_2 branch; valid for s > 0, with a < 0 and b > 0.

    cosh(b) - 1 is evaluated through its rationalized form
    s^2 (s^3 + 7s^2 + 14s + 7) / ((s+2)^2 sqrt(s^2+4) + s^3 + 4s^2 + 6s + 6),
    which is positive for all s > 0 and free of cancellation.
    """
    u = lib.sqrt(s * s + 4)
    c = (4 * s * s + 6 * s + 4 + 2 * u) / (8 * s)
    if c < 1:
        raise AssertionError(f"cosh(2a) = {c} < 1 at s = {s}; outside branch domain")
    a = -0.5 * lib.acosh(c)
    wm1 = s * s * (s**3 + 7 * s * s + 14 * s + 7) / (
        (s + 2) ** 2 * u + s**3 + 4 * s * s + 6 * s + 6)
    b = lib.asinh(lib.sqrt(wm1 * (wm1 + 2)))
    return a, b

def _k52_derivs(s, lib=math):
    """(a, b, da/ds, db/ds) on the 5_2 branch."""
    u = lib.sqrt(s * s + 4)
    c = (4 * s * s + 6 * s + 4 + 2 * u) / (8 * s)
    a = -0.5 * lib.acosh(c)
    wm1 = s * s * (s**3 + 7 * s * s + 14 * s + 7) / (
        (s + 2) ** 2 * u + s**3 + 4 * s * s + 6 * s + 6)
    b = lib.asinh(lib.sqrt(wm1 * (wm1 + 2)))
    cm1 = (4 * s * s - 2 * s + 4 + 2 * u) / (8 * s)
    cp = 0.5 - 1 / (2 * s * s) - 1 / (s * s * u)
    da = -cp / (2 * lib.sqrt(cm1 * (c + 1)))
    wp = (-(5 * s**4 + 16 * s**3 + 18 * s * s + 12 * s)
          + u * (4 * s**3 + 12 * s * s + 8 * s)
          + (s / u) * (s**4 + 4 * s**3 + 4 * s * s)) / 4
    db = wp / lib.sqrt(wm1 * (wm1 + 2))
    return a, b, da, db


_BRANCHES = {
    KnotId.FIG8: (_fig8_logs, _fig8_derivs, 0.0),
    KnotId.K52: (_k52_logs, _k52_derivs, None),  # open at 0
}


def branch_domain_check(knot: KnotId, s: float) -> None:
    lo = _BRANCHES[knot][2]
    if lo is None:
        if s <= 0:
            raise ValueError(f"branch parameter must be positive for {knot.value}, got {s}")
    elif s < lo:
        raise ValueError(f"branch parameter must be >= {lo} for {knot.value}, got {s}")


def branch_logs(knot: KnotId, s: float, lib=math) -> tuple[float, float]:
    """Log coordinates (a, b) at parameter s, without residual validation."""
    branch_domain_check(knot, s)
    return _BRANCHES[knot][0](s, lib)


def branch_derivs(knot: KnotId, s: float, lib=math) -> tuple[float, float, float, float]:
    """(a, b, da/ds, db/ds) at parameter s, without residual validation."""
    branch_domain_check(knot, s)
    return _BRANCHES[knot][1](s, lib)


def branch_point(knot: KnotId, s: float, poly: Optional[LaurentPoly2] = None,
                 residual_tol: float = DEFAULTS.branch_residual) -> BranchSample:
    """Residual-validated branch sample at parameter s.

    The point is checked against ``poly`` (the registry A-polynomial by
    default); a violation raises ResidualError.
    """
    a, b = branch_logs(knot, s)
    poly = builtin_apoly(knot) if poly is None else poly
    point = CurvePoint.from_logs(poly, a, b)
    if point.residual > residual_tol:
        raise ResidualError(
            f"branch point at s = {s} has residual {point.residual:.3e} > {residual_tol:.1e}")
    return BranchSample(s, point, knot)


def fig8_point(s: float, poly: Optional[LaurentPoly2] = None,
               residual_tol: float = DEFAULTS.branch_residual) -> BranchSample:
    """Figure-eight branch sample, s >= 0."""
    return branch_point(KnotId.FIG8, s, poly, residual_tol)


def k52_point(s: float, poly: Optional[LaurentPoly2] = None,
              residual_tol: float = DEFAULTS.branch_residual) -> BranchSample:
    """5_2 branch sample, s > 0."""
    return branch_point(KnotId.K52, s, poly, residual_tol)


# ------------------------------------------------------------- surgery solving

class SurgerySolution(Tuple[float, CurvePoint]):
    """(s, point) with named access."""

    def __new__(cls, s: float, point: CurvePoint):
        return super().__new__(cls, (s, point))

    @property
    def s(self) -> float:
        return self[0]

    @property
    def point(self) -> CurvePoint:
        return self[1]


def _default_bracket(knot: KnotId) -> tuple[float, float]:
    return (0.0, 20.0) if knot is KnotId.FIG8 else (1e-4, 20.0)


def solve_surgery(knot: KnotId, spec: SurgerySpec,
                  bracket: Optional[tuple[float, float]] = None,
                  poly: Optional[LaurentPoly2] = None,
                  subdivisions: int = 1000,
                  tol: Tolerances = DEFAULTS) -> SurgerySolution:
    """Locate the parameter where x^p y^q = 1 on the branch.

    The bracket is scanned for sign changes of h(s) = p a(s) + q b(s); an
    endpoint with h = 0 counts as a root.  Exactly one root must be present,
    otherwise NoSignChangeError or MultipleRootsError (with the candidate
    locations) is raised.  The root is bisected and Newton-polished to
    |h| < 1e-12, and the resulting point is residual-validated.
    """
    if bracket is None:
        bracket = _default_bracket(knot)
    lo, hi = bracket
    if not lo < hi:
        raise ValueError("empty bracket")
    branch_domain_check(knot, lo)

    def h(s: float) -> float:
        return spec.log_constraint(*branch_logs(knot, s))

    grid = [lo + (hi - lo) * k / subdivisions for k in range(subdivisions + 1)]
    values = [h(s) for s in grid]

    roots: list[tuple[float, float]] = []
    for sv, hv in ((grid[0], values[0]), (grid[-1], values[-1])):
        if abs(hv) <= tol.surgery_log:
            roots.append((sv, sv))
    for k in range(subdivisions):
        v0, v1 = values[k], values[k + 1]
        if v0 == 0.0 and grid[k] != grid[0]:
            roots.append((grid[k], grid[k]))
        elif v0 * v1 < 0.0:
            roots.append((grid[k], grid[k + 1]))

    if not roots:
        raise NoSignChangeError(
            f"{spec} does not cross zero on the bracket [{lo}, {hi}] of {knot.value}")
    if len(roots) > 1:
        approx = [0.5 * (r[0] + r[1]) for r in roots]
        raise MultipleRootsError(
            f"{spec} has {len(roots)} roots on [{lo}, {hi}] of {knot.value}", approx)

    s0, s1 = roots[0]
    if s0 == s1:
        s_star = s0
    else:
        f0 = h(s0)
        for _ in range(80):
            mid = 0.5 * (s0 + s1)
            if (h(mid) > 0.0) == (f0 > 0.0):
                s0 = mid
            else:
                s1 = mid
        s_star = 0.5 * (s0 + s1)
        for _ in range(8):  # Newton polish
            a, b, da, db = branch_derivs(knot, s_star)
            hv = spec.p * a + spec.q * b
            hd = spec.p * da + spec.q * db
            if hd == 0.0:
                break
            step = hv / hd
            s_star -= step
            if abs(step) < 1e-17 * max(1.0, abs(s_star)):
                break
        if not (min(s0, s1) - 1e-6 <= s_star <= max(s0, s1) + 1e-6):
            s_star = 0.5 * (s0 + s1)  # Newton escaped; keep the bisection root

    sample = branch_point(knot, s_star, poly)
    hv = spec.log_constraint(sample.point.a, sample.point.b)
    if abs(hv) > tol.surgery_log:
        raise CurveError(f"polished surgery root violates |p a + q b| = {abs(hv):.3e}")
    return SurgerySolution(s_star, sample.point)


# ------------------------------------------------------------------ projection

def _value_and_gradient(poly: LaurentPoly2, px: LaurentPoly2, py: LaurentPoly2,
                        x: float, y: float) -> tuple[float, float, float]:
    return poly(x, y), px(x, y), py(x, y)


def project(poly: LaurentPoly2, guess: tuple[float, float],
            tol: Tolerances = DEFAULTS) -> CurvePoint:
    """Newton-project a nearby guess onto the curve A = 0.

    Each step moves along the gradient direction only (least-norm update for
    one equation in two unknowns).  Raises NewtonDivergenceError if the
    residual target is not met within the iteration budget, and
    SingularPointError on a vanishing gradient.
    """
    x, y = float(guess[0]), float(guess[1])
    if x <= 0 or y <= 0:
        raise ValueError("projection guesses must be in the positive quadrant")
    px, py = poly.partials()
    for _ in range(tol.newton_max_iter):
        v, gx, gy = _value_and_gradient(poly, px, py, x, y)
        if abs(v) <= tol.project_residual:
            return CurvePoint.from_xy(poly, x, y)
        norm2 = gx * gx + gy * gy
        if norm2 < tol.singular_gradient**2:
            raise SingularPointError(f"gradient vanished near ({x}, {y})")
        x -= v * gx / norm2
        y -= v * gy / norm2
        if x <= 0 or y <= 0:
            raise NewtonDivergenceError("projection left the positive quadrant")
    raise NewtonDivergenceError(
        f"projection did not reach residual {tol.project_residual:.1e} "
        f"within {tol.newton_max_iter} iterations")


# --------------------------------------------------------------------- tracing

def _corrector(poly, px, py, x, y, tol: Tolerances) -> Optional[tuple[float, float]]:
    """Newton projection used inside tracing; None signals non-convergence."""
    for _ in range(tol.corrector_max_iter):
        v, gx, gy = _value_and_gradient(poly, px, py, x, y)
        if abs(v) <= tol.curve_residual * 0.1:
            return x, y
        norm2 = gx * gx + gy * gy
        if norm2 < tol.singular_gradient**2:
            raise SingularPointError(f"gradient vanished near ({x}, {y})")
        x -= v * gx / norm2
        y -= v * gy / norm2
        if x <= 0 or y <= 0:
            return None
    return None


def _polish_intersection(poly, px, py, spec: SurgerySpec, x, y,
                         tol: Tolerances) -> CurvePoint:
    """2D Newton on {A = 0, p log x + q log y = 0}."""
    for _ in range(tol.newton_max_iter):
        v, gx, gy = _value_and_gradient(poly, px, py, x, y)
        h = spec.p * math.log(x) + spec.q * math.log(y)
        if abs(v) <= tol.project_residual and abs(h) <= tol.surgery_log:
            return CurvePoint.from_xy(poly, x, y)
        hx, hy = spec.p / x, spec.q / y
        det = gx * hy - gy * hx
        if abs(det) < 1e-300:
            raise SingularPointError("degenerate Jacobian while polishing intersection")
        dx = (v * hy - h * gy) / det
        dy = (gx * h - hx * v) / det
        x, y = x - dx, y - dy
        if x <= 0 or y <= 0:
            raise NewtonDivergenceError("intersection polish left the positive quadrant")
    raise NewtonDivergenceError("intersection polish did not converge")


def trace(poly: LaurentPoly2, start: CurvePoint, stop: SurgerySpec, step: float,
          direction: Optional[int] = None, max_steps: Optional[int] = None,
          max_arclength: float = 50.0, tol: Tolerances = DEFAULTS) -> TracedPath:
    """Predictor-corrector continuation from start until x^p y^q = 1 is crossed.

    The predictor moves a fixed step along the unit tangent (A_y, -A_x),
    scaled by ``direction``; the corrector is a Newton projection back onto
    the curve.  A step is accepted when the corrector converges within the
    iteration budget, otherwise halved; after four consecutive accepts the
    step is doubled, capped at the initial value.  When the stop constraint
    changes sign the crossing is polished with a 2D Newton and appended as
    the final point.
    """
    if start.residual > tol.branch_residual:
        raise ResidualError(f"start residual {start.residual:.3e} exceeds tolerance")
    px, py = poly.partials()

    xy = _corrector(poly, px, py, start.x, start.y, tol)
    if xy is None:
        raise NewtonDivergenceError("could not tighten the start point onto the curve")
    cur = CurvePoint.from_xy(poly, *xy)
    points = [cur]

    h_cur = stop.log_constraint(cur.a, cur.b)
    if max_steps == 0 or abs(h_cur) <= tol.surgery_log:
        return TracedPath.from_points(poly, points, direction or 1)

    def tangent(pt: CurvePoint) -> tuple[float, float]:
        _, gx, gy = _value_and_gradient(poly, px, py, pt.x, pt.y)
        norm = math.hypot(gx, gy)
        if norm < tol.singular_gradient:
            raise SingularPointError(f"singular point at ({pt.x}, {pt.y})")
        return gy / norm, -gx / norm

    if direction is None:
        tx, ty = tangent(cur)
        dh = stop.p * tx / cur.x + stop.q * ty / cur.y
        if dh == 0.0:
            raise CurveError("cannot infer tracing direction; pass direction=+-1")
        direction = 1 if h_cur * dh < 0 else -1

    step_now = step
    accepts_in_a_row = 0
    arclength = 0.0
    steps_taken = 0
    while True:
        if max_steps is not None and steps_taken >= max_steps:
            return TracedPath.from_points(poly, points, direction)
        tx, ty = tangent(cur)
        cand = (cur.x + direction * step_now * tx, cur.y + direction * step_now * ty)
        corrected = None
        if cand[0] > 0 and cand[1] > 0:
            corrected = _corrector(poly, px, py, cand[0], cand[1], tol)
        if corrected is None:
            step_now *= 0.5
            accepts_in_a_row = 0
            if step_now < tol.min_step:
                raise StepSizeError(f"step fell below {tol.min_step} while tracing")
            continue

        nxt = CurvePoint.from_xy(poly, *corrected)
        steps_taken += 1
        arclength += math.hypot(nxt.x - cur.x, nxt.y - cur.y)
        h_nxt = stop.log_constraint(nxt.a, nxt.b)
        if h_cur * h_nxt <= 0.0:
            final = _polish_intersection(poly, px, py, stop,
                                         0.5 * (cur.x + nxt.x), 0.5 * (cur.y + nxt.y), tol)
            points.append(final)
            return TracedPath.from_points(poly, points, direction)
        points.append(nxt)
        cur, h_cur = nxt, h_nxt

        accepts_in_a_row += 1
        if accepts_in_a_row >= 4:
            step_now = min(2.0 * step_now, step)
            accepts_in_a_row = 0
        if arclength > max_arclength:
            raise StopNotReachedError(
                f"stop condition {stop} not met within arclength budget {max_arclength}")
