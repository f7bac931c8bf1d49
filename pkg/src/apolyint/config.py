"""Central tolerance configuration shared by the curve and integration machinery."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used across the library.

    All curve points accepted anywhere must satisfy ``curve_residual``;
    branch-parametrization samples are held to the looser ``branch_residual``
    because they go through transcendental formulas rather than Newton.
    """

    curve_residual: float = 1e-10      # |A(x,y)| bound for accepted traced points
    branch_residual: float = 1e-8      # |A(x,y)| bound for parametrized samples
    project_residual: float = 1e-12    # |A(x,y)| target for Newton projection
    surgery_log: float = 1e-12         # |p*a + q*b| at a solved surgery point
    singular_gradient: float = 1e-12   # gradient norms below this are singular
    min_step: float = 1e-9             # tracing aborts below this step size
    corrector_max_iter: int = 8        # Newton iterations per corrector attempt
    newton_max_iter: int = 50          # iterations for standalone projections
    quad_rel: float = 1e-10            # relative tolerance, parametrized quadrature
    quad_abs: float = 1e-14            # absolute floor, parametrized quadrature
    traced_refine: float = 1e-9        # stop refining the traced integral here
    parabolic_band: float = 1e-9       # | |trace| - 2 | band classified parabolic


DEFAULTS = Tolerances()
