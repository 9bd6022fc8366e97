"""Branch inverses of the gamma function.

For an integer k >= -1 the branch inverse g_k maps the upper half plane
into the region D_k = {z in C_+ : -(k+1) pi < arg Gamma(z) < -k pi} and
satisfies Gamma(g_k(w)) = (-1)^(k+1) w.  It is computed by Newton path
continuation on the comb map log_gamma: the target value is

    v = Log w - i (k+1) pi,

which lies in the horizontal strip -(k+1) pi < Im v < -k pi, a slit-free
part of the comb image, so straight continuation paths are safe.

G_k extends g_k holomorphically to C minus the branch interval I_k, e_k is
the even-branch variant G_k(-w), and g_{-1} is the principal inverse.  The
closed-form arcsine built from the Joukowski map doubles as an oracle for
the whole continuation methodology (sin_comb_inverse).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln, zeta

from .kernel import (ConvergenceError, DomainError, NewtonConfig,
                     path_continuation, principal_log)
from .gammafn import critical_point, log_abs_gamma, log_gamma, psi, psi_prime

# Largest exposed branch index; anchors stay well-scaled up to here.
K_MAX = 8

_PI = math.pi

# slack allowed around the arg-window and below the real axis during
# transient Newton steps
_GUARD_SLACK = 0.3
_IM_FLOOR = -1e-9

_NEWTON_CFG = NewtonConfig(max_iter=60, residual_tol=1e-12,
                           step_shrink=0.5, max_path_segments=256,
                           max_leg=4.0, floor_accept=8.0)


@dataclass(frozen=True)
class BranchInterval:
    """Support interval I_k of the Pick measure of g_k (k >= 0)."""
    k: int
    lo: float
    hi: float


@dataclass(frozen=True)
class CombDomain:
    """Slit data of the comb image of the upper half plane under log_gamma:
    horizontal slits [start_k, inf) at heights -k pi."""
    slits: tuple[tuple[float, float], ...]  # (height, slit_start)


def _check_k(k: int, minimum: int) -> int:
    k = int(k)
    if k < minimum:
        raise DomainError(f"branch index must be >= {minimum}, got {k}")
    if k > K_MAX:
        raise DomainError(f"branch index {k} above supported K_MAX={K_MAX}")
    return k


def branch_interval(k: int) -> BranchInterval:
    k = _check_k(k, 0)
    gk = critical_point(k).gamma_x
    gk1 = critical_point(k + 1).gamma_x
    if k % 2 == 1:
        lo, hi = gk, gk1
    else:
        lo, hi = -gk, -gk1
    return BranchInterval(k=k, lo=lo, hi=hi)


def comb_domain(max_k: int = K_MAX) -> CombDomain:
    slits = tuple((-k * _PI, math.log(abs(critical_point(k).gamma_x)))
                  for k in range(max_k + 1))
    return CombDomain(slits=slits)


def in_branch_domain(k: int, z: complex) -> bool:
    """Membership in D_k = {z in C_+ : Im log_gamma(z) in (-(k+1)pi, -kpi)}."""
    k = _check_k(k, -1)
    z = complex(z)
    if not z.imag > 0.0:
        raise DomainError("in_branch_domain requires Im z > 0")
    im = log_gamma(z).imag
    return -(k + 1) * _PI < im < -k * _PI


def _loggamma_fd(z: complex) -> tuple[complex, complex]:
    return log_gamma(z), psi(z)


def _branch_guard(k: int):
    lo = -(k + 1) * _PI - _GUARD_SLACK
    hi = -k * _PI + _GUARD_SLACK

    def guard(z: complex) -> bool:
        if z.imag <= _IM_FLOOR:
            return False
        try:
            im = log_gamma(z).imag
        except DomainError:
            return False
        return lo < im < hi

    return guard


def _anchor(k: int, target_abs: float) -> tuple[complex, complex]:
    """Known pair (v0, z0) with log_gamma(z0) = v0 in the branch-k strip.

    For k >= 0 the seed sits on the upper semicircle of radius
    1/(k! w0) around the pole -k, which keeps arg Gamma mid-window; for
    k = -1 it is the smallest integer n >= 2 with Gamma(n) >= |target|.
    """
    if k >= 0:
        w0 = max(1e3, 10.0 * target_abs)
        rho = 1.0 / (math.factorial(k) * w0)
        z0 = complex(-k, rho)
    else:
        n = 2
        while math.exp(gammaln(n)) < target_abs and n < 170:
            n += 1
        z0 = complex(n, 0.0)
    return log_gamma(z0), z0


# acceptance margin for Newton stalls at the double-precision floor
# |dv| ~ eps |z| |psi(z)| near the poles
_STALL_EPS_MARGIN = 8.0


def _gk_upper(k: int, w: complex) -> complex:
    """g_k(w) for Im w >= 0, w != 0 (boundary values taken from above)."""
    w = complex(w)
    if w == 0:
        raise DomainError("branch inverse undefined at w = 0")
    v_target = principal_log(w) - 1j * (k + 1) * _PI
    v0, z0 = _anchor(k, abs(w))
    guard = _branch_guard(k)
    try:
        return path_continuation(_loggamma_fd, (v0, z0), v_target,
                                 cfg=_NEWTON_CFG, domain_guard=guard)
    except ConvergenceError as err:
        z = err.best_point
        if z is not None:
            resid = abs(log_gamma(z) - v_target)
            floor = _STALL_EPS_MARGIN * np.finfo(float).eps \
                * max(1.0, abs(z)) * abs(psi(z))
            if resid <= max(1e-10, floor):
                return z
        raise


def _real_solve_monotone(x_lo: float, x_hi: float, log_target: float) -> float:
    """Solve log|Gamma(x)| = log_target on a monotone bracket, then polish
    with Newton (d/dx log|Gamma| = psi)."""
    x = brentq(lambda x: log_abs_gamma(x) - log_target, x_lo, x_hi,
               xtol=1e-14, rtol=8.9e-16)
    for _ in range(3):
        step = (log_abs_gamma(x) - log_target) / psi(complex(x, 0.0)).real
        x_new = x - step
        if not x_lo <= x_new <= x_hi:
            break
        x = x_new
    return x


def _real_branch_inverse(k: int, w: float) -> float:
    """G_k on the real line outside I_k (root in (x_{k+1}, -k) or (-k, x_k))."""
    iv = branch_interval(k)
    xk = critical_point(k).x
    xk1 = critical_point(k + 1).x
    log_t = math.log(abs(w))
    pole = float(-k)
    if w > iv.hi:
        # root left of the pole, |Gamma| increasing on (x_{k+1}, -k)
        d = 0.5 / (math.factorial(k) * abs(w))
        d = min(d, 0.25 * (pole - xk1))
        while log_abs_gamma(pole - d) <= log_t:
            d *= 0.25
        return _real_solve_monotone(xk1, pole - d, log_t)
    if w < iv.lo:
        # root right of the pole, |Gamma| decreasing on (-k, x_k)
        d = 0.5 / (math.factorial(k) * abs(w))
        d = min(d, 0.25 * (xk - pole))
        while log_abs_gamma(pole + d) <= log_t:
            d *= 0.25
        return _real_solve_monotone(pole + d, xk, log_t)
    raise DomainError(f"w = {w:g} lies in the branch cut I_{k} "
                      f"[{iv.lo:.9g}, {iv.hi:.9g}]")


def inverse_branch(k: int, w: complex) -> complex:
    """The Pick-function branch inverse g_k on the open upper half plane:
    Gamma(g_k(w)) = (-1)^(k+1) w with Im g_k(w) > 0."""
    k = _check_k(k, -1)
    w = complex(w)
    if not w.imag > 0.0:
        raise DomainError("inverse_branch requires Im w > 0")
    return _gk_upper(k, w)


def extended_inverse(k: int, w: complex) -> complex:
    """Holomorphic extension G_k of g_k to C minus the closed interval I_k,
    real on the real axis and conjugate-symmetric."""
    k = _check_k(k, 0)
    w = complex(w)
    if w.imag > 0.0:
        return _gk_upper(k, w)
    if w.imag < 0.0:
        return _gk_upper(k, w.conjugate()).conjugate()
    iv = branch_interval(k)
    if iv.lo <= w.real <= iv.hi:
        raise DomainError(f"w = {w.real:g} lies in the branch cut I_{k} "
                          f"[{iv.lo:.9g}, {iv.hi:.9g}]")
    return complex(_real_branch_inverse(k, w.real), 0.0)


def principal_inverse(w: complex) -> complex:
    """Extended principal inverse g_{-1}: inverts Gamma on (Gamma(x_0), inf)
    and continues to the cut plane C minus (-inf, Gamma(x_0)]."""
    w = complex(w)
    if w.imag > 0.0:
        return _gk_upper(-1, w)
    if w.imag < 0.0:
        return _gk_upper(-1, w.conjugate()).conjugate()
    g0 = critical_point(0).gamma_x
    if w.real <= g0:
        raise DomainError(f"w = {w.real:g} lies on the principal cut "
                          f"(-inf, {g0:.9g}]")
    x0 = critical_point(0).x
    log_t = math.log(w.real)
    hi = x0 + 1.0
    while gammaln(hi) < log_t:
        hi *= 2.0
    x = brentq(lambda x: gammaln(x) - log_t, x0, hi,
               xtol=1e-14, rtol=8.9e-16)
    for _ in range(3):
        x -= (gammaln(x) - log_t) / psi(complex(x, 0.0)).real
    return complex(x, 0.0)


def even_inverse(k: int, w: complex) -> complex:
    """Even-branch extension e_k(w) = G_k(-w), the inverse of Gamma on
    (x_{k+1}, -k) u (-k, x_k) extended to C minus [Gamma(x_{k+1}), Gamma(x_k)].
    Its imaginary part is negative in the upper half plane."""
    k = _check_k(k, 0)
    if k % 2 != 0:
        raise DomainError("even_inverse requires an even branch index")
    return extended_inverse(k, -complex(w))


def boundary_extension(k: int, side: str, t: float) -> complex:
    """Boundary value h_k^{+/-}(t) = g_k(t + i0) on the two halves of I_k:
    side 'plus' covers t in (0, hi), side 'minus' covers t in (lo, 0)."""
    k = _check_k(k, 0)
    iv = branch_interval(k)
    t = float(t)
    if side == "plus":
        if not 0.0 < t < iv.hi:
            raise DomainError(f"side 'plus' requires t in (0, {iv.hi:.9g})")
    elif side == "minus":
        if not iv.lo < t < 0.0:
            raise DomainError(f"side 'minus' requires t in ({iv.lo:.9g}, 0)")
    else:
        raise DomainError(f"unknown side {side!r}")
    return _gk_upper(k, complex(t, 0.0))


# ----------------------------------------------------------------------
# sin: closed-form inverse via the Joukowski map, and the independent
# comb-map Newton inversion used as a methodology oracle
# ----------------------------------------------------------------------

def joukowski_inverse(z: complex) -> complex:
    """The root w of (w + 1/w)/2 = z with |w| > 1."""
    z = complex(z)
    s = cmath.sqrt(z * z - 1.0)
    w1 = z + s
    w2 = z - s
    w = w1 if abs(w1) >= abs(w2) else w2
    if abs(w) <= 1.0:
        raise DomainError("joukowski_inverse undefined on [-1, 1]")
    return w


def lp_sin_inverse(z: complex) -> complex:
    """arcsin on the upper half plane via i log(J^{-1}(z)) + pi/2, mapping
    C_+ onto the half strip {|Re| < pi/2, Im > 0}."""
    z = complex(z)
    if not z.imag > 0.0:
        raise DomainError("lp_sin_inverse requires Im z > 0")
    return 1j * principal_log(joukowski_inverse(z)) + 0.5 * _PI


def lp_sin_inverse_real(x: float) -> float:
    """Real-axis limit of lp_sin_inverse on [-1, 1]."""
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise DomainError("real limit defined on [-1, 1] only")
    # J^{-1}(x + i0) = x + i sqrt(1 - x^2) on the unit circle
    return 0.5 * _PI - math.atan2(math.sqrt(1.0 - x * x), x)


_SIN_SERIES_TERMS = 2000
_SIN_K = np.arange(1, _SIN_SERIES_TERMS + 1, dtype=float)
_SIN_TAIL_ZETAS = tuple(
    float(zeta(2 * j, _SIN_SERIES_TERMS + 1)) for j in range(1, 7))


def log_sin_product(z: complex) -> complex:
    """log sin z from the Weierstrass product with principal logarithms:
    log z + sum_k log(1 - z^2/(k pi)^2), tail-corrected."""
    z = complex(z)
    if z == 0:
        raise DomainError("log sin undefined at 0")
    x = (z / _PI) ** 2 / (_SIN_K * _SIN_K)
    re = 0.5 * np.log1p(-2.0 * x.real + (x.real * x.real + x.imag * x.imag))
    im = np.arctan2(-x.imag, 1.0 - x.real)
    total = principal_log(z) + complex(re.sum(), im.sum())
    q = (z / _PI) ** 2
    tail = 0.0 + 0.0j
    p = q
    for j, zj in enumerate(_SIN_TAIL_ZETAS, start=1):
        tail -= p * zj / j
        p *= q
    return total + tail


def _logsin_fd(z: complex) -> tuple[complex, complex]:
    return log_sin_product(z), cmath.cos(z) / cmath.sin(z)


def sin_comb_inverse(z: complex) -> complex:
    """Inverse of sin on C_+ obtained by Newton continuation on the
    comb map log sin (independent of the closed form)."""
    z = complex(z)
    if not z.imag > 0.0:
        raise DomainError("sin_comb_inverse requires Im z > 0")

    def guard(u: complex) -> bool:
        return abs(u.real) < 0.5 * _PI + _GUARD_SLACK and u.imag > _IM_FLOOR

    z0 = complex(0.25 * _PI, 1.0)
    v0 = log_sin_product(z0)
    return path_continuation(_logsin_fd, (v0, z0), principal_log(z),
                             cfg=_NEWTON_CFG, domain_guard=guard)
