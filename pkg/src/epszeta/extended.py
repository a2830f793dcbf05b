"""Epsilon and zeta continued to real moduli beyond 1 and to pure imaginary moduli.

Everything reduces to the standard-range routines, either through the
reciprocal modulus 1/k (real k > 1; DLMF 22.17.14 and 19.7.3) or through
the descending pair k1 = k/sqrt(1+k^2), k1p = 1/sqrt(1+k^2) (modulus
i*k; DLMF 22.17.8 and 19.7.2).  Signs of real or imaginary moduli are
stripped up front: epsilon and zeta are even in the modulus.

For real k > 1 the complete integrals, and with them zeta, acquire an
imaginary part, and the two boundary values of the continuation are
complex conjugates.  The default "lower" branch is the convention that
makes Im Z(x,k) negative for x > 0; "upper" is its conjugate.  epsilon
stays real in every regime.
"""

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .epsilon_zeta import epsilon, zeta, zeta_shift_quarter_period
from .errors import DomainError
from .jacobi import EllipticPair, complete_e, complete_k

# Below this, 1 - 1/k^2 has no correct digits left and the reciprocal
# reduction is numerically meaningless.
_MIN_LARGE = 1.0 + 1e-12


class Regime(enum.Enum):
    STANDARD = "standard"
    LARGE_REAL = "large_real"
    PURE_IMAGINARY = "pure_imaginary"


@dataclass(frozen=True)
class Modulus:
    """Modulus magnitude tagged with its regime (signs are always stripped)."""
    regime: Regime
    k: float

    def __post_init__(self):
        if not (isinstance(self.k, (int, float)) and math.isfinite(self.k)):
            raise DomainError("modulus must be finite")
        if self.regime is Regime.STANDARD:
            if not 0.0 <= self.k <= 1.0:
                raise DomainError("standard regime requires k in [0, 1]")
        elif self.regime is Regime.LARGE_REAL:
            if not self.k >= _MIN_LARGE:
                raise DomainError(
                    "large-real regime requires k > 1; moduli in (1, 1 + 1e-12) are "
                    "numerically meaningless and rejected")
        else:
            if not self.k > 0.0:
                raise DomainError("pure-imaginary regime requires k > 0")

    @classmethod
    def real(cls, k: float) -> "Modulus":
        """Real modulus: |k| <= 1 is standard, |k| > 1 large-real."""
        k = abs(float(k))
        if k <= 1.0:
            return cls(Regime.STANDARD, k)
        return cls(Regime.LARGE_REAL, k)

    @classmethod
    def imaginary(cls, k: float) -> "Modulus":
        """Imaginary modulus i*k; k = 0 collapses to the standard regime."""
        k = abs(float(k))
        if k == 0.0:
            return cls(Regime.STANDARD, 0.0)
        return cls(Regime.PURE_IMAGINARY, k)


class DerivedModuli(NamedTuple):
    """Descending pair for an imaginary modulus i*k; k1^2 + k1p^2 = 1."""
    k1: float
    k1p: float


def imaginary_submoduli(k: float) -> DerivedModuli:
    """k1 = k/sqrt(1+k^2) and k1p = 1/sqrt(1+k^2), both in (0, 1)."""
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError("imaginary_submoduli requires k > 0")
    h = math.hypot(1.0, k)
    return DerivedModuli(k / h, 1.0 / h)


def reciprocal_companion(k: float) -> float:
    """k' = k/sqrt(k^2-1) for k > 1; 1/k' is the complementary modulus of 1/k."""
    _require_large(k, "reciprocal_companion")
    return k / math.sqrt((k - 1.0) * (k + 1.0))


def _require_large(k, where):
    if not (isinstance(k, (int, float)) and math.isfinite(k) and k >= _MIN_LARGE):
        raise DomainError(
            f"{where} requires k > 1 (and rejects the sliver (1, 1 + 1e-12) "
            "where the reciprocal modulus has no accuracy left)")


def _require_x(x, where):
    if not math.isfinite(x):
        raise DomainError(f"{where} requires finite x")


def _reciprocal_pair(k):
    # 1/k and its complementary modulus sqrt(1 - 1/k^2), formed without
    # cancellation as sqrt((k-1)(k+1))/k
    return 1.0 / k, math.sqrt((k - 1.0) * (k + 1.0)) / k


def _branch_sign(branch):
    # s = sign of the imaginary part of the continued K(k)
    if branch == "lower":
        return -1.0
    if branch == "upper":
        return 1.0
    raise ValueError(f"branch must be 'lower' or 'upper', got {branch!r}")


def epsilon_large_real(x: float, k: float) -> float:
    """epsilon(x,k) for real k > 1, via the reciprocal modulus:
    epsilon(x,k) = k epsilon(kx, 1/k) + (1 - k^2) x.  Real and odd in x."""
    _require_large(k, "epsilon_large_real")
    _require_x(x, "epsilon_large_real")
    return k * epsilon(k * x, 1.0 / k) + (1.0 - k * k) * x


def epsilon_large_real_via_zeta(x: float, k: float) -> float:
    """Same value as epsilon_large_real, but split into the linear trend
    plus a scaled standard zeta.  Retained as an independent cross-check
    form because it exercises the E/K ratio machinery."""
    _require_large(k, "epsilon_large_real_via_zeta")
    _require_x(x, "epsilon_large_real_via_zeta")
    kr = 1.0 / k
    slope = k * k * complete_e(kr) / complete_k(kr) + 1.0 - k * k
    return slope * x + k * zeta(k * x, kr)


def ek_ratio_large_real(k: float, branch: str = "lower") -> complex:
    """E(k)/K(k) continued to real k > 1; genuinely complex.

    By the Legendre relation the imaginary part equals
    +/- k^2 (pi/2) / (K^2(1/k) + K^2(1/k')); the default branch takes the
    plus sign, which is what makes Im Z negative for x > 0.
    """
    s = _branch_sign(branch)
    _require_large(k, "ek_ratio_large_real")
    kr, krc = _reciprocal_pair(k)
    k_rec, k_comp = complete_k(kr), complete_k(krc)
    e_rec, e_comp = complete_e(kr), complete_e(krc)
    denom = k_rec * k_rec + k_comp * k_comp
    re = 1.0 + k * k * (k_rec * (e_rec - k_rec) - e_comp * k_comp) / denom
    im = -s * k * k * (k_comp * (e_rec - k_rec) + e_comp * k_rec) / denom
    return complex(re, im)


def zeta_large_real(x: float, k: float, branch: str = "lower") -> complex:
    """Z(x,k) for real k > 1.

    Real part: k Z(kx, 1/k) plus a linear-in-x drift correction.  The
    imaginary part is exactly linear in x.  Equivalent to
    epsilon_large_real(x,k) - ek_ratio_large_real(k) * x.
    """
    s = _branch_sign(branch)
    _require_large(k, "zeta_large_real")
    _require_x(x, "zeta_large_real")
    kr, krc = _reciprocal_pair(k)
    k_rec, k_comp = complete_k(kr), complete_k(krc)
    bracket = complete_e(kr) / k_rec + complete_e(krc) / k_comp - 1.0
    denom = k_rec * k_rec + k_comp * k_comp
    re = k * zeta(k * x, kr) + (k * k * k_comp * k_comp / denom) * bracket * x
    im = s * (k * k * k_rec * k_comp / denom) * bracket * x
    return complex(re, im)


def k_e_continued(k: float, branch: str = "lower") -> EllipticPair:
    """Complete pair (K(k), E(k)) continued to real k > 1 (DLMF 19.7.3).

    Both entries are complex; the branches are conjugates, and the ratio
    E/K of the returned pair matches ek_ratio_large_real on the same
    branch.  Accuracy degrades as k -> 1+ where K(1/k) diverges.
    """
    s = _branch_sign(branch)
    _require_large(k, "k_e_continued")
    kr, krc = _reciprocal_pair(k)
    k_rec, k_comp = complete_k(kr), complete_k(krc)
    e_rec, e_comp = complete_e(kr), complete_e(krc)
    big_k = complex(k_rec, s * k_comp) / k
    big_e = k * complex(e_rec - krc * krc * k_rec, -s * (e_comp - kr * kr * k_comp))
    return EllipticPair(big_k, big_e)


def epsilon_imaginary(x: float, k: float) -> float:
    """epsilon(x, i*k) for pure imaginary modulus (k > 0); real, odd in x.

    The descending submoduli turn the integrand into 1/dn^2(t/k1p, k1);
    the quarter-period shift identity keeps all zeta evaluations inside
    the primary cell.
    """
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError("epsilon_imaginary requires k > 0 (k = 0 is the standard regime)")
    _require_x(x, "epsilon_imaginary")
    k1, k1p = imaginary_submoduli(k)
    slope = complete_e(k1) / (k1p * k1p * complete_k(k1))
    return slope * x + zeta_shift_quarter_period(x / k1p, k1) / k1p


def zeta_imaginary(x: float, k: float) -> float:
    """Z(x, i*k) for pure imaginary modulus (k > 0); real, odd in x."""
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError("zeta_imaginary requires k > 0 (k = 0 is the standard regime)")
    _require_x(x, "zeta_imaginary")
    k1, k1p = imaginary_submoduli(k)
    return zeta_shift_quarter_period(x / k1p, k1) / k1p


def epsilon_any(x: float, m: Modulus) -> float:
    """epsilon(x, .) dispatched on the modulus regime; real in every regime."""
    if m.regime is Regime.STANDARD:
        return epsilon(x, m.k)
    if m.regime is Regime.LARGE_REAL:
        return epsilon_large_real(x, m.k)
    return epsilon_imaginary(x, m.k)


def zeta_any(x: float, m: Modulus, branch: str = "lower") -> complex:
    """Z(x, .) dispatched on the modulus regime.

    The imaginary part is zero except for real moduli beyond 1.
    """
    if m.regime is Regime.STANDARD:
        return complex(zeta(x, m.k), 0.0)
    if m.regime is Regime.LARGE_REAL:
        return zeta_large_real(x, m.k, branch)
    return complex(zeta_imaginary(x, m.k), 0.0)
