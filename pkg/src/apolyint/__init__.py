"""Numerical verification of logarithmic 1-form integrals over A-polynomial curves.

The library integrates log x dy/y - log y dx/x along real branches of knot
A-polynomial curves between Dehn-surgery points, computes the matching
Godbillon-Vey and Seifert volumes in exact rational arithmetic, and evaluates
logarithmic Mahler measures of two-variable integer polynomials.
"""

from .config import DEFAULTS, Tolerances
from .curve import (BranchSample, CurvePoint, CurveError, MultipleRootsError,
                    NewtonDivergenceError, NoSignChangeError, ResidualError,
                    SingularPointError, StepSizeError, StopNotReachedError,
                    SurgerySpec, SurgerySolution, TracedPath, branch_derivs,
                    branch_logs, branch_point, fig8_point, k52_point, project,
                    solve_surgery, trace)
from .integrate import (GvResult, IntegralResult, IntegrationError, IntegrationMethod,
                        gv_difference, integrate_between_surgeries, integrate_param,
                        integrate_traced, log_form_integrand)
from .mahler import MahlerResult, mahler_measure, roots_on_slice
from .poly import KnotId, LaurentPoly2, PolyParseError, builtin_apoly, parse_poly
from .quadrature import QuadResult, QuadratureError, adaptive_gauss_kronrod
from .report import VerificationReport, verify_paper
from .seifert import (NAMED_MANIFOLDS, PiSquaredRational, SeifertData,
                      euler_characteristic, euler_number, seifert_volume)
from .sl2tilde import (IDENTITY, EltClass, SlTildeElt, classify, compose, cover,
                       inverse, trace_of_cover)
from .svgplot import emit_plot

__version__ = "0.1.0"

__all__ = [
    "BranchSample", "CurvePoint", "CurveError", "DEFAULTS", "EltClass",
    "GvResult", "IDENTITY", "IntegralResult", "IntegrationError",
    "IntegrationMethod", "KnotId", "LaurentPoly2", "MahlerResult",
    "MultipleRootsError", "NAMED_MANIFOLDS", "NewtonDivergenceError",
    "NoSignChangeError", "PiSquaredRational", "PolyParseError", "QuadResult",
    "QuadratureError", "ResidualError", "SeifertData", "SingularPointError",
    "SlTildeElt", "StepSizeError", "StopNotReachedError", "SurgerySolution",
    "SurgerySpec", "Tolerances", "TracedPath", "VerificationReport",
    "adaptive_gauss_kronrod", "branch_derivs", "branch_logs", "branch_point",
    "builtin_apoly", "classify", "compose", "cover", "emit_plot",
    "euler_characteristic", "euler_number", "fig8_point", "gv_difference",
    "integrate_between_surgeries", "integrate_param", "integrate_traced",
    "inverse", "k52_point", "log_form_integrand", "mahler_measure",
    "parse_poly", "project", "roots_on_slice", "seifert_volume",
    "solve_surgery", "trace", "trace_of_cover", "verify_paper",
]
