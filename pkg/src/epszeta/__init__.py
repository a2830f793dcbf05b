"""Jacobi epsilon and zeta functions for moduli of any size.

The standard definitions cover k in [0, 1]; the extended routines reach
real k > 1 (where zeta turns complex) and pure imaginary moduli i*k by
reducing everything to the standard range.  A self-contained Carlson/AGM
core supplies the elliptic building blocks, an adaptive Newton-Cotes
integrator provides an independent cross-check, and the elastica module
applies the machinery to bent-rod curves.
"""

from .carlson import rc, rd, rf
from .elastica import (ElasticaParams, PlanePoint, flexural_point,
                       inflexural_point, sample_curve, uniform_grid)
from .epsilon_zeta import epsilon, zeta, zeta_shift_quarter_period
from .errors import ConvergenceError, DomainError
from .extended import (DerivedModuli, Modulus, Regime, ek_ratio_large_real,
                       epsilon_any, epsilon_imaginary, epsilon_large_real,
                       epsilon_large_real_via_zeta, imaginary_submoduli,
                       k_e_continued, reciprocal_companion, zeta_any,
                       zeta_imaginary, zeta_large_real)
from .jacobi import (EllipticPair, JacobiTriple, amplitude, complete_e,
                     complete_k, incomplete_e, sncndn)
from .quadrature import (QuadratureResult, epsilon_by_quadrature, integrate,
                         newton_cotes_8, regime_integrand)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DerivedModuli",
    "DomainError",
    "ElasticaParams",
    "EllipticPair",
    "JacobiTriple",
    "Modulus",
    "PlanePoint",
    "QuadratureResult",
    "Regime",
    "amplitude",
    "complete_e",
    "complete_k",
    "ek_ratio_large_real",
    "epsilon",
    "epsilon_any",
    "epsilon_by_quadrature",
    "epsilon_imaginary",
    "epsilon_large_real",
    "epsilon_large_real_via_zeta",
    "flexural_point",
    "imaginary_submoduli",
    "incomplete_e",
    "inflexural_point",
    "integrate",
    "k_e_continued",
    "newton_cotes_8",
    "rc",
    "rd",
    "reciprocal_companion",
    "regime_integrand",
    "rf",
    "sample_curve",
    "sncndn",
    "uniform_grid",
    "zeta",
    "zeta_any",
    "zeta_imaginary",
    "zeta_large_real",
    "zeta_shift_quarter_period",
]
