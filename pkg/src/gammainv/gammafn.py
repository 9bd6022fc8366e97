"""Gamma, log-gamma on the cut plane, psi, trigamma, the Binet remainder,
and the critical points x_k where gamma' vanishes.

log_gamma is the holomorphic continuation of log Gamma(x), x > 0, to the
cut plane C \\ (-inf, 0]; it is *not* the principal logarithm of Gamma(z).
For Re z >= 10 the Stirling asymptotic series is used, otherwise the value
is pulled up with the recurrence

    log Gamma(z) = log Gamma(z + n) - sum_j Log(z + j),

which preserves the branch because every z + j stays in the cut plane.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.optimize import brentq
from scipy.special import gammaln

from .kernel import DomainError, principal_log

EULER_GAMMA = 0.577215664901532860606512090082
LOG_SQRT_TWO_PI = 0.918938533204672741780329736406

# Stirling series: log Gamma(z) ~ (z - 1/2) Log z - z + log sqrt(2 pi)
#                                  + sum_n B_{2n} / (2n (2n-1) z^{2n-1})
_STIRLING_LOGGAMMA = (
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0, 43867.0 / 244188.0,
    -174611.0 / 125400.0, 77683.0 / 5796.0, -236364091.0 / 1506960.0,
    657931.0 / 300.0, -3392780147.0 / 93960.0, 1723168255201.0 / 2492028.0,
)
# psi(z) ~ Log z - 1/(2z) - sum_n B_{2n} / (2n z^{2n})
_STIRLING_PSI = (
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0,
    -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0, 43867.0 / 14364.0,
    -174611.0 / 6600.0, 77683.0 / 276.0, -236364091.0 / 65520.0,
    657931.0 / 12.0, -3392780147.0 / 3480.0, 1723168255201.0 / 85932.0,
)
# psi'(z) ~ 1/z + 1/(2z^2) + sum_n B_{2n} / z^{2n+1}
_BERNOULLI_B2N = (
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0,
)

_STIRLING_RE = 10.0


class PoleError(DomainError):
    """Evaluation at a pole of the gamma function."""


@dataclass(frozen=True)
class CriticalPoint:
    """Critical abscissa x_k of gamma (psi(x_k) = 0) and its extremum."""
    k: int
    x: float
    gamma_x: float


@dataclass(frozen=True)
class GammaConstants:
    euler_gamma: float = EULER_GAMMA
    log_sqrt_two_pi: float = LOG_SQRT_TWO_PI


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real)


def _stirling_log_gamma(z: complex) -> complex:
    r = (z - 0.5) * principal_log(z) - z + LOG_SQRT_TWO_PI
    zz = z * z
    p = 1.0 / z
    for c in _STIRLING_LOGGAMMA:
        r += c * p
        p /= zz
    return r


def log_gamma(z: complex) -> complex:
    """Branch-consistent log Gamma on the cut plane C \\ (-inf, 0]."""
    z = complex(z)
    if _on_cut(z):
        raise DomainError("log_gamma undefined on the cut (-inf, 0]")
    if z.real >= _STIRLING_RE:
        return _stirling_log_gamma(z)
    n = int(math.ceil(_STIRLING_RE - z.real))
    shift = 0.0 + 0.0j
    for j in range(n):
        shift += principal_log(z + j)
    return _stirling_log_gamma(z + n) - shift


def gamma(z: complex) -> complex:
    """Gamma(z) for z away from the poles {0, -1, -2, ...}."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z.real:g}")
    if not _on_cut(z):
        return cmath.exp(log_gamma(z))
    # real z < 0: pull up with Gamma(z) = Gamma(z + n) / (z (z+1) ... )
    n = int(math.ceil(0.5 - z.real))
    prod = 1.0 + 0.0j
    for j in range(n):
        prod *= (z + j)
    return cmath.exp(log_gamma(z + n)) / prod


def log_abs_gamma(x: float) -> float:
    """log |Gamma(x)| for real non-pole x (works on both sides of 0)."""
    if x == int(x) and x <= 0.0:
        raise PoleError(f"gamma pole at {x:g}")
    if x > 0.0:
        return float(gammaln(x))
    n = int(math.ceil(0.5 - x))
    s = 0.0
    for j in range(n):
        s += math.log(abs(x + j))
    return float(gammaln(x + n)) - s


def _stirling_psi(z: complex) -> complex:
    r = principal_log(z) - 0.5 / z
    zz = z * z
    p = 1.0 / zz
    for c in _STIRLING_PSI:
        r -= c * p
        p /= zz
    return r


def psi(z: complex) -> complex:
    """Digamma function (logarithmic derivative of gamma)."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"psi pole at {z.real:g}")
    if z.real >= _STIRLING_RE:
        return _stirling_psi(z)
    n = int(math.ceil(_STIRLING_RE - z.real))
    shift = 0.0 + 0.0j
    for j in range(n):
        shift += 1.0 / (z + j)
    return _stirling_psi(z + n) - shift


def psi_prime(z: complex) -> complex:
    """Trigamma function, the derivative of psi."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"psi_prime pole at {z.real:g}")
    if z.real >= _STIRLING_RE:
        zz = z * z
        r = 1.0 / z + 0.5 / zz
        p = 1.0 / (zz * z)
        for b in _BERNOULLI_B2N:
            r += b * p
            p /= zz
        return r
    n = int(math.ceil(_STIRLING_RE - z.real))
    shift = 0.0 + 0.0j
    for j in range(n):
        zj = z + j
        shift += 1.0 / (zj * zj)
    return psi_prime(z + n) + shift


def binet_mu(w: complex) -> complex:
    """Stirling-formula remainder mu(w) for Re w > 0:

        log Gamma(w) = log sqrt(2 pi) + (w - 1/2) Log w - w + mu(w).
    """
    w = complex(w)
    if not w.real > 0.0:
        raise DomainError("binet_mu requires Re w > 0")
    return log_gamma(w) - (LOG_SQRT_TWO_PI
                           + (w - 0.5) * principal_log(w) - w)


def _psi_real(x: float) -> float:
    return psi(complex(x, 0.0)).real


def _gamma_real(x: float) -> float:
    if x > 0.0:
        return math.exp(log_abs_gamma(x))
    # sign of Gamma on (-k, -k+1) is (-1)^k
    k = int(math.floor(-x)) + 1
    return (-1.0) ** k * math.exp(log_abs_gamma(x))


@lru_cache(maxsize=None)
def critical_point(k: int) -> CriticalPoint:
    """The unique zero x_k of psi in (-k, -k+1) (x_0 on the positive axis),
    together with the extremal value Gamma(x_k)."""
    if k < 0:
        raise DomainError("critical_point requires k >= 0")
    if k == 0:
        lo, hi = 1.0, 2.0
    else:
        eps = 1e-9
        lo, hi = -k + eps, -k + 1.0 - eps
    x = brentq(_psi_real, lo, hi, xtol=1e-15, rtol=8.9e-16)
    # Newton polish with psi'
    for _ in range(3):
        x -= _psi_real(x) / psi_prime(complex(x, 0.0)).real
    return CriticalPoint(k=k, x=float(x), gamma_x=_gamma_real(float(x)))
