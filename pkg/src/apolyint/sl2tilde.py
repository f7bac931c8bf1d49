"""Arithmetic in the universal covering group of PSL(2, R).

Elements are pairs (gamma, omega) with |gamma| < 1 and omega a real number;
omega is kept unreduced (not mod 2 pi) because it carries the lift to the
cover.  The covering map lands in SU(1,1) conjugated back to SL(2, R) by the
Cayley transform, normalized so that (tanh a, k pi) covers +-diag(e^a, e^-a).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import DEFAULTS


@dataclass(frozen=True)
class SlTildeElt:
    """Element (gamma, omega) of the cover; |gamma| strictly below 1."""

    gamma: complex
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "gamma", complex(self.gamma))
        object.__setattr__(self, "omega", float(self.omega))
        if not abs(self.gamma) < 1.0:
            raise ValueError(f"|gamma| = {abs(self.gamma)} must be strictly less than 1")

    def __mul__(self, other: "SlTildeElt") -> "SlTildeElt":
        return compose(self, other)


IDENTITY = SlTildeElt(0.0, 0.0)


class EltClass(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    CENTRAL = "central"


def compose(g: SlTildeElt, h: SlTildeElt) -> SlTildeElt:
    """Group product.

    With e = exp(-2i omega_g) and zeta = 1 + conj(gamma_g) gamma_h e:

        gamma'' = (gamma_g + gamma_h e) / zeta
        omega'' = omega_g + omega_h + arg(zeta)

    arg(zeta) is the principal value of (1/2i) log(zeta / conj(zeta)); since
    |conj(gamma_g) gamma_h| < 1 the real part of zeta is positive, so the
    principal branch is never crossed and the product is associative.
    """
    e = cmath.exp(-2j * g.omega)
    zeta = 1.0 + g.gamma.conjugate() * h.gamma * e
    gamma = (g.gamma + h.gamma * e) / zeta
    omega = g.omega + h.omega + cmath.phase(zeta)
    return SlTildeElt(gamma, omega)


def inverse(g: SlTildeElt) -> SlTildeElt:
    """Group inverse (-gamma e^{2i omega}, -omega)."""
    return SlTildeElt(-g.gamma * cmath.exp(2j * g.omega), -g.omega)


def cover(g: SlTildeElt) -> np.ndarray:
    """Covering map to SL(2, R) as a 2x2 determinant-one matrix.

    (tanh a, k pi) maps to +-diag(e^a, e^-a) and (0, theta) to the rotation
    by theta, so the trace is 2 cos(omega) / sqrt(1 - |gamma|^2).  The map is
    a genuine homomorphism onto its image; it is two-to-one on the center,
    which is where the sign ambiguity of the quotient lives.
    """
    k = 1.0 / math.sqrt(1.0 - abs(g.gamma) ** 2)
    zeta = (1.0 + g.gamma) * cmath.exp(1j * g.omega)
    xi = (1.0 - g.gamma) * cmath.exp(1j * g.omega)
    return np.array([[k * zeta.real, k * zeta.imag],
                     [-k * xi.imag, k * xi.real]])


def trace_of_cover(g: SlTildeElt) -> float:
    """Trace of cover(g) without building the matrix."""
    return 2.0 * math.cos(g.omega) / math.sqrt(1.0 - abs(g.gamma) ** 2)


def classify(g: SlTildeElt, parabolic_band: float = DEFAULTS.parabolic_band) -> EltClass:
    """Classify by the covered matrix: central first, then by |trace| vs 2."""
    if abs(g.gamma) < 1e-14 and abs(g.omega - math.pi * round(g.omega / math.pi)) < 1e-12:
        return EltClass.CENTRAL
    t = abs(trace_of_cover(g))
    if abs(t - 2.0) <= parabolic_band:
        return EltClass.PARABOLIC
    return EltClass.ELLIPTIC if t < 2.0 else EltClass.HYPERBOLIC
