"""Shared oracles and fixtures for the test suite."""

import math

import numpy as np
import pytest


def torus_log_mean(poly, grid: int = 1024, chunk: int = 256) -> float:
    """Brute-force Riemann sum of log|P| over the unit torus on a grid x grid mesh.

    Independent of the Jensen route: evaluates the polynomial directly at
    roots of unity and averages.  Chunked over rows to bound memory.
    """
    cleared, _ = poly.cleared()
    rows = cleared.y_coefficients()
    xs = np.exp(2j * np.pi * np.arange(grid) / grid)
    ys = np.exp(2j * np.pi * np.arange(grid) / grid)
    total = 0.0
    for lo in range(0, grid, chunk):
        xe = xs[lo:lo + chunk]
        vals = np.zeros((len(xe), grid), dtype=complex)
        for j, coeff in rows.items():
            cj = np.zeros(len(xe), dtype=complex)
            for i, c in coeff.items():
                cj += c * xe**i
            vals += cj[:, None] * ys[None, :] ** j
        total += float(np.sum(np.log(np.abs(vals))))
    return total / (grid * grid)


def lobachevsky_volume_oracle(terms: int = 2_000_000) -> float:
    """6 * Lambda(pi/3) with Lambda(t) = (1/2) sum_{n>=1} sin(2 n t) / n^2."""
    n = np.arange(1, terms + 1)
    lam = 0.5 * float(np.sum(np.sin(2.0 * n * (math.pi / 3.0)) / n**2))
    return 6.0 * lam


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
