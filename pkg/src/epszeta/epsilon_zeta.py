"""Jacobi's epsilon and zeta functions on the standard modulus range |k| <= 1.

epsilon(x,k) = integral 0..x dn^2(t,k) dt grows linearly with a periodic
wobble; zeta is the wobble alone.  Both are odd in x and even in k.
"""

import math

from .errors import DomainError
from .jacobi import amplitude, complete_e, complete_k, incomplete_e, sncndn


def epsilon(x: float, k: float) -> float:
    """epsilon(x,k), evaluated as the incomplete E at the amplitude."""
    k = abs(k)
    if not k <= 1.0:
        raise DomainError("epsilon: moduli beyond 1 belong to the extended-modulus routines")
    if not math.isfinite(x):
        raise DomainError("epsilon requires finite x")
    if k == 0.0:
        return float(x)
    if k == 1.0:
        return math.tanh(x)
    return incomplete_e(amplitude(x, k), k)


def zeta(x: float, k: float) -> float:
    """Periodic part of epsilon: Z = epsilon - (E/K) x, period 2K.

    At |k| = 1 the slope E/K vanishes (K diverges) and Z coincides with
    epsilon, i.e. tanh.
    """
    k = abs(k)
    if not k <= 1.0:
        raise DomainError("zeta: moduli beyond 1 belong to the extended-modulus routines")
    if not math.isfinite(x):
        raise DomainError("zeta requires finite x")
    if k == 0.0:
        return 0.0
    if k == 1.0:
        return math.tanh(x)
    return epsilon(x, k) - (complete_e(k) / complete_k(k)) * x


def zeta_shift_quarter_period(x: float, k: float) -> float:
    """Z(x + K, k) computed without leaving the primary cell:
    Z(x + K) = Z(x) - k^2 sn(x) cn(x) / dn(x)."""
    k = abs(k)
    if not k < 1.0:
        raise DomainError("zeta_shift_quarter_period requires |k| < 1 (K diverges at 1)")
    sn, cn, dn = sncndn(x, k)
    return zeta(x, k) - k * k * sn * cn / dn
