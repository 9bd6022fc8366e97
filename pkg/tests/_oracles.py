"""Independent oracles used to freeze expected values.

These deliberately avoid the implementation paths in the package: the
log-gamma oracle sums the defining series directly (with Hurwitz-zeta tail
corrections), the digamma oracle sums its series, and the Binet oracle
integrates the periodic remainder kernel period by period.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import zeta

EULER_GAMMA = 0.577215664901532860606512090082


def _w2_series(x: np.ndarray, terms: int = 30) -> np.ndarray:
    """log(1+x) - x = sum_{j>=2} (-1)^(j-1) x^j / j for |x| <= 1/4."""
    acc = np.zeros_like(x)
    for j in range(terms, 1, -1):
        acc = acc * x + (-1.0) ** (j - 1) / j
    return acc * x * x


def log_gamma_series(z: complex, terms: int = 100_000) -> complex:
    """Direct summation of
    log Gamma(z) = -gamma z - log z - sum_k [log(1 + z/k) - z/k]
    with principal logarithms and a zeta tail beyond `terms`."""
    z = complex(z)
    head_n = max(8, int(math.ceil(4.0 * abs(z))))
    head_n = min(head_n, terms)
    k_head = np.arange(1, head_n + 1, dtype=float)
    head = np.sum(np.log(1.0 + z / k_head) - z / k_head)
    k_tail = np.arange(head_n + 1, terms + 1, dtype=float)
    mid = np.sum(_w2_series(z / k_tail))
    tail = 0.0 + 0.0j
    p = z * z
    for j in range(2, 40):
        term = (-1.0) ** (j - 1) * p * float(zeta(j, terms + 1)) / j
        tail += term
        p *= z
        if abs(term) < 1e-20 * max(1.0, abs(tail)):
            break
    total = head + mid + tail
    return -EULER_GAMMA * z - np.log(z) - total


def psi_series(x: float, terms: int = 1_000_000) -> float:
    """psi(x) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+x)), tail via
    sum_{k>=K} (x-1)/((k+1)(k+x)) expanded in Hurwitz zetas."""
    k = np.arange(terms, dtype=float)
    s = float(np.sum(1.0 / (k + 1.0) - 1.0 / (k + x)))
    tail = 0.0
    hm = 1.0       # h_m(x) = sum_{i+j=m} x^j
    xp = 1.0
    for m in range(0, 10):
        tail += (-1.0) ** m * hm * float(zeta(m + 2, terms))
        xp *= x
        hm = hm + xp
    return -EULER_GAMMA + s + (x - 1.0) * tail


def psi_root(lo: float, hi: float, terms: int = 200_000) -> float:
    """Bisection root of the psi series oracle on a bracket."""
    flo = psi_series(lo, terms)
    fhi = psi_series(hi, terms)
    assert flo < 0 < fhi, "bracket must straddle the root"
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if psi_series(mid, terms) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-13:
            break
    return 0.5 * (lo + hi)


def binet_quadrature(w: float, periods: int = 200) -> float:
    """mu(w) = (1/2) int_0^inf Q(t)/(w+t)^2 dt with Q 1-periodic, equal to
    t - t^2 on (0,1): per-period quadrature plus a zeta tail built from
    (c + 1/2) log(1 + 1/c) - 1 = sum_j (-1)^j (j-1)/(2j(j+1)) c^{-j}."""
    from gammainv.kernel import QuadratureConfig, adaptive_integrate
    cfg = QuadratureConfig(abs_tol=1e-14, max_subdivisions=100)
    total = 0.0
    for n in range(periods):
        total += adaptive_integrate(
            lambda t, n=n: (t - t * t) / (w + n + t) ** 2, 0.0, 1.0, cfg)
    total *= 0.5
    tail = 0.0
    for j in range(2, 14):
        b_j = (-1.0) ** j * (j - 1) / (2.0 * j * (j + 1))
        tail += b_j * float(zeta(j, w + periods))
    return total + tail
