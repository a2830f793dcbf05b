"""Legendre elliptic integrals and Jacobi elliptic functions for k in [0, 1].

Complete and incomplete integrals reduce to the Carlson forms (DLMF
19.25); the amplitude follows the descending AGM scheme of DLMF
22.20(ii) after reducing x into a single period so the phase stays
small.  Every routine strips the sign of k first: K, E, dn and the
amplitude are even in the modulus.
"""

import math
from typing import NamedTuple

from .carlson import rd, rf
from .errors import DomainError


class JacobiTriple(NamedTuple):
    """sn, cn, dn evaluated jointly at one (x, k)."""
    sn: float
    cn: float
    dn: float


class EllipticPair(NamedTuple):
    """Complete integrals (K, E) of one modulus; complex once continued past k = 1."""
    K: float
    E: float


def complete_k(k: float) -> float:
    """Complete elliptic integral of the first kind K(k), |k| < 1."""
    k = abs(k)
    if not k < 1.0:
        raise DomainError("complete_k requires |k| < 1; K diverges logarithmically at |k| = 1")
    return rf(0.0, (1.0 - k) * (1.0 + k), 1.0)


def complete_e(k: float) -> float:
    """Complete elliptic integral of the second kind E(k), |k| <= 1."""
    k = abs(k)
    if not k <= 1.0:
        raise DomainError("complete_e requires |k| <= 1")
    if k == 1.0:
        return 1.0
    kp2 = (1.0 - k) * (1.0 + k)
    return rf(0.0, kp2, 1.0) - (k * k / 3.0) * rd(0.0, kp2, 1.0)


def incomplete_e(phi: float, k: float) -> float:
    """Incomplete second-kind integral E(phi,k) = integral 0..phi sqrt(1 - k^2 sin^2 t) dt.

    Odd in phi and defined for all real phi through the quasi-period
    E(phi + pi, k) = E(phi, k) + 2 E(k).
    """
    k = abs(k)
    if not k <= 1.0:
        raise DomainError("incomplete_e requires |k| <= 1")
    if not math.isfinite(phi):
        raise DomainError("incomplete_e requires finite phi")
    n = round(phi / math.pi)
    value = _e_half_cell(phi - n * math.pi, k)
    if n:
        value += 2.0 * n * complete_e(k)
    return value


def _e_half_cell(phi, k):
    # |phi| <= pi/2: Carlson reduction, DLMF 19.25
    s = math.sin(phi)
    c = math.cos(phi)
    w = (1.0 - k * s) * (1.0 + k * s)
    return s * rf(c * c, w, 1.0) - (k * k / 3.0) * s ** 3 * rd(c * c, w, 1.0)


def amplitude(x: float, k: float) -> float:
    """Jacobi amplitude am(x, k), the unbounded branch, monotone in x.

    Satisfies am(x + 2K, k) = am(x, k) + pi; degenerates to the identity
    at k = 0 and to the Gudermannian at k = 1.
    """
    k = abs(k)
    if not k <= 1.0:
        raise DomainError("amplitude requires |k| <= 1")
    if not math.isfinite(x):
        raise DomainError("amplitude requires finite x")
    if k == 0.0:
        return float(x)
    if k == 1.0:
        return 2.0 * math.atan(math.tanh(0.5 * x))
    quarter = complete_k(k)
    n = round(x / (2.0 * quarter))
    return _agm_amplitude(x - 2.0 * quarter * n, k) + math.pi * n


def _agm_amplitude(x, k):
    # DLMF 22.20(ii): ascend the AGM, then unwind the phase downward.
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    ratios = []
    for _ in range(32):
        half_sum = 0.5 * (a + b)
        c = 0.5 * (a - b)
        b = math.sqrt(a * b)
        a = half_sum
        ratios.append(c / a)
        if abs(c) <= 1e-16 * a:
            break
    phi = math.ldexp(a * x, len(ratios))
    for r in reversed(ratios):
        phi = 0.5 * (phi + math.asin(min(1.0, max(-1.0, r * math.sin(phi)))))
    return phi


def sncndn(x: float, k: float) -> JacobiTriple:
    """Jacobi sn, cn, dn at (x, k); k = 1 uses the hyperbolic closed forms."""
    k = abs(k)
    if not k <= 1.0:
        raise DomainError("sncndn requires |k| <= 1")
    if not math.isfinite(x):
        raise DomainError("sncndn requires finite x")
    if k == 1.0:
        sech = 1.0 / math.cosh(x)
        return JacobiTriple(math.tanh(x), sech, sech)
    phi = amplitude(x, k)
    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn from k'^2 + k^2 cn^2: both terms positive, no cancellation near k = 1
    dn = math.sqrt((1.0 - k) * (1.0 + k) + (k * cn) ** 2)
    return JacobiTriple(sn, cn, dn)
