"""Euler number, Euler characteristic, and Seifert volume from Seifert data.

Everything here is exact rational arithmetic.  Volumes are returned as exact
rational multiples of pi^2; the decimal rendering is derived, never compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants (g; (p_1, q_1), ..., (p_r, q_r)) over an orientable base.

    Fibers with p = 1 encode integer framing and carry no gcd constraint;
    fibers with p >= 2 must have gcd(p, |q|) = 1.
    """

    genus: int
    fibers: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple((int(p), int(q)) for p, q in self.fibers))
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        for p, q in self.fibers:
            if p < 1:
                raise ValueError(f"fiber multiplicity p = {p} must be at least 1")
            if p >= 2 and math.gcd(p, abs(q)) != 1:
                raise ValueError(f"fiber ({p}, {q}) is not coprime")


@dataclass(frozen=True)
class PiSquaredRational:
    """An exact rational multiple of pi^2."""

    coefficient: Fraction

    @property
    def decimal(self) -> float:
        return float(self.coefficient) * math.pi**2

    def __str__(self) -> str:
        return f"({self.coefficient})*pi^2"


def euler_number(data: SeifertData) -> Fraction:
    """e = -sum(q_i / p_i), exactly."""
    return -sum((Fraction(q, p) for p, q in data.fibers), Fraction(0))


def euler_characteristic(data: SeifertData) -> Fraction:
    """chi = 2 - 2g - sum((p_i - 1) / p_i), exactly."""
    return 2 - 2 * data.genus - sum((Fraction(p - 1, p) for p, _ in data.fibers), Fraction(0))


def seifert_volume(data: SeifertData) -> PiSquaredRational:
    """Seifert volume 4 pi^2 chi^2 / |e|, or zero when e = 0 or chi >= 0.

    The nonzero case is exactly the range of the SL2~-geometry; in every
    other Seifert geometry the volume vanishes.
    """
    e = euler_number(data)
    chi = euler_characteristic(data)
    if e == 0 or chi >= 0:
        return PiSquaredRational(Fraction(0))
    return PiSquaredRational(4 * chi**2 / abs(e))


# Registry of the named manifolds used by the verification suite.  The
# q-vectors are chosen coprime with |e| = 1/lcm(p_1, p_2, p_3), which pins
# the volume; only |e| matters for it, so the overall sign of e is a
# convention and is not asserted anywhere.
NAMED_MANIFOLDS = {
    "sigma(2,3,7)": SeifertData(0, ((2, 1), (3, 1), (7, -6))),
    "sfs(2,4,5)": SeifertData(0, ((2, 1), (4, 1), (5, -4))),
    "sigma(2,3,11)": SeifertData(0, ((2, 1), (3, 1), (11, -9))),
    "sfs(2,4,7)": SeifertData(0, ((2, 1), (4, 1), (7, -5))),
}
