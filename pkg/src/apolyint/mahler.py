"""Logarithmic Mahler measure of two-variable integer polynomials.

The double integral of log|P| over the unit torus is reduced along y by
Jensen's formula: for each x on the unit circle the inner circle average
equals log of the leading coefficient plus log+ of the root moduli of the
y-slice.  That confines the integrand's singularities to the finitely many
x where a slice root crosses the unit circle, which the adaptive outer
quadrature isolates by bisection.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from .poly import LaurentPoly2
from .quadrature import adaptive_gauss_kronrod


@dataclass(frozen=True)
class MahlerResult:
    value: float
    error_estimate: float
    theta_panels: int


def _slice_coefficients(p: LaurentPoly2):
    """Coefficient functions of the cleared slice polynomial, highest j first.

    Returns a list of {i: c} maps: entry k holds the x-polynomial multiplying
    y^(jmax - k) after the Laurent exponents are shifted nonnegative.  The
    shift multiplies P by a monomial, which moves the Mahler measure by
    exactly zero.
    """
    cleared, _ = p.cleared()
    by_j = cleared.y_coefficients()
    jmax = max(by_j)
    return [by_j.get(j, {}) for j in range(jmax, -1, -1)]


def _eval_coeff(coeff: dict, x0: complex) -> complex:
    return sum(c * x0**i for i, c in coeff.items())


def _slice_poly(rows, x0: complex) -> list[complex]:
    """Numeric slice coefficients at x0, leading zeros stripped."""
    coeffs = [_eval_coeff(row, x0) for row in rows]
    scale = max(abs(c) for c in coeffs) or 1.0
    while len(coeffs) > 1 and abs(coeffs[0]) <= 1e-14 * scale:
        coeffs = coeffs[1:]
    return coeffs


def _horner(coeffs, z):
    v = 0j
    for c in coeffs:
        v = v * z + c
    return v


def _polish_roots(coeffs, roots):
    """One or two Newton touch-ups per root against the slice polynomial."""
    n = len(coeffs) - 1
    deriv = [c * (n - k) for k, c in enumerate(coeffs[:-1])]
    out = []
    for r in roots:
        z = complex(r)
        for _ in range(2):
            dv = _horner(deriv, z)
            if dv == 0:
                break
            z -= _horner(coeffs, z) / dv
        out.append(z)
    return out


def roots_on_slice(p: LaurentPoly2, x0: complex) -> List[complex]:
    """All y-roots (with multiplicity) of the cleared slice of p at x = x0.

    Roots are companion-matrix eigenvalues polished by Newton; each satisfies
    |slice(y_i)| < 1e-9 times the coefficient scale.  A slice that degenerates
    to a constant has no roots.
    """
    if not p:
        raise ValueError("zero polynomial has no slices")
    coeffs = _slice_poly(_slice_coefficients(p), complex(x0))
    if len(coeffs) == 1:
        return []
    roots = _polish_roots(coeffs, np.roots(np.array(coeffs, dtype=complex)))
    scale = max(abs(c) for c in coeffs)
    for r in roots:
        if abs(_horner(coeffs, r)) > 1e-9 * scale:
            raise ArithmeticError(f"slice root {r} has residual above 1e-9 * scale")
    return roots


def _slice_average(rows, theta: float) -> float:
    """Inner circle average of log|P(x0, .)| at x0 = e^(2 pi i theta)."""
    x0 = cmath.exp(2j * math.pi * theta)
    coeffs = _slice_poly(rows, x0)
    lead = abs(coeffs[0])
    if lead == 0.0:
        # all slice coefficients vanished; can only happen on a measure-zero
        # set, where the inner average still exists as a limit
        return 0.0
    total = math.log(lead)
    if len(coeffs) > 1:
        roots = _polish_roots(coeffs, np.roots(np.array(coeffs, dtype=complex)))
        for r in roots:
            m = abs(r)
            if m > 1.0:
                total += math.log(m)
    return total


def mahler_measure(p: LaurentPoly2, tol: float = 1e-6) -> MahlerResult:
    """Logarithmic Mahler measure of a nonzero polynomial.

    The outer integral over theta in [0, 1] runs to tolerance ``tol``
    (required to be at least 1e-8).  The slice leading coefficient is a
    nonzero one-variable Laurent polynomial, so it can vanish at only
    finitely many theta and the degenerate-slicing case cannot occur.
    """
    if not p:
        raise ValueError("the Mahler measure of the zero polynomial is undefined")
    if tol < 1e-8:
        raise ValueError("tol must be at least 1e-8")
    rows = _slice_coefficients(p)
    res = adaptive_gauss_kronrod(lambda th: _slice_average(rows, th), 0.0, 1.0,
                                 rel_tol=tol, abs_tol=tol, max_depth=30)
    return MahlerResult(res.value, res.error_estimate, res.panels)
