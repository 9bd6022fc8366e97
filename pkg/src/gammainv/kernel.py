"""Shared numerical machinery: complex scalars, damped Newton with path
continuation, and adaptive quadrature with endpoint substitutions.

All routines are pure functions of their inputs and safe to call from
multiple threads.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import cmath
import numpy as np
from scipy.integrate import IntegrationWarning, quad


class DomainError(ValueError):
    """Argument outside the domain of the requested operation."""


class ConvergenceError(RuntimeError):
    """Newton iteration failed to reach the residual tolerance.

    Carries the best iterate found so that callers may accept a stall at
    the double-precision conditioning floor.
    """

    def __init__(self, message, best_point=None, best_residual=None,
                 best_derivative=None):
        super().__init__(message)
        self.best_point = best_point
        self.best_residual = best_residual
        self.best_derivative = best_derivative


class ContinuationError(ConvergenceError):
    """Path continuation exhausted its segment budget."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature exhausted its budget above tolerance."""


# Damped Newton halves the step at most this many times per iteration.
MAX_STEP_HALVINGS = 8

FnAndDerivative = Callable[[complex], tuple[complex, complex]]


@dataclass(frozen=True)
class NewtonConfig:
    max_iter: int = 60
    residual_tol: float = 1e-12
    step_shrink: float = 0.5
    max_path_segments: int = 256
    # Continuation legs longer than this are pre-split so that Newton
    # tracks the path-continued branch instead of jumping to another
    # solution; 0 disables the cap (use only with a branch-enforcing
    # domain guard).
    max_leg: float = 1.5
    # When > 0, a stalled iteration is accepted if its residual lies below
    # floor_accept * eps * max(1, |z|) * |f'(z)|, the conditioning floor of
    # double precision (relevant near poles where |f'| blows up).
    floor_accept: float = 0.0

    def __post_init__(self):
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.residual_tol > 0:
            raise ValueError("residual_tol must be positive")
        if not 0.0 < self.step_shrink < 1.0:
            raise ValueError("step_shrink must lie in (0, 1)")
        if self.max_path_segments < 1:
            raise ValueError("max_path_segments must be >= 1")
        if self.max_leg < 0:
            raise ValueError("max_leg must be >= 0")
        if self.floor_accept < 0:
            raise ValueError("floor_accept must be >= 0")


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-9
    max_subdivisions: int = 400
    endpoint_substitution: Literal["none", "sqrt", "log"] = "none"

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if self.endpoint_substitution not in ("none", "sqrt", "log"):
            raise ValueError("unknown endpoint substitution "
                             f"{self.endpoint_substitution!r}")


_DEFAULT_NEWTON = NewtonConfig()
_DEFAULT_QUAD = QuadratureConfig()


def principal_log(z: complex) -> complex:
    """Principal logarithm with Im in (-pi, pi].

    The cut convention places negative reals on the +i*pi side, so a
    negative real with imaginary part -0.0 is treated as on the cut.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("principal_log undefined at 0")
    if z.imag == 0.0:
        # normalise -0.0 so that log(-1) = i*pi, not -i*pi
        z = complex(z.real, 0.0)
    return cmath.log(z)


def newton_solve(f_and_derivative: FnAndDerivative,
                 seed: complex,
                 target: complex,
                 cfg: NewtonConfig | None = None,
                 domain_guard: Callable[[complex], bool] | None = None,
                 ) -> complex:
    """Damped Newton iteration for f(z) = target.

    The step is halved (up to MAX_STEP_HALVINGS times) whenever the
    residual fails to decrease or the iterate leaves the guarded domain.
    Raises ConvergenceError with the best iterate attached when no
    acceptable step exists or the iteration budget runs out.
    """
    cfg = cfg or _DEFAULT_NEWTON
    z = complex(seed)
    if domain_guard is not None and not domain_guard(z):
        raise DomainError("newton_solve seed violates the domain guard")

    def at_floor(zz, rr, dd):
        if cfg.floor_accept <= 0:
            return False
        floor = cfg.floor_accept * np.finfo(float).eps \
            * max(1.0, abs(zz)) * abs(dd)
        return rr <= floor

    fz, dfz = f_and_derivative(z)
    resid = abs(fz - target)
    for _ in range(cfg.max_iter):
        if resid <= cfg.residual_tol:
            return z
        if dfz == 0:
            raise ConvergenceError("zero derivative at iterate",
                                   best_point=z, best_residual=resid,
                                   best_derivative=0.0)
        step = (fz - target) / dfz
        lam = 1.0
        accepted = False
        for _ in range(MAX_STEP_HALVINGS + 1):
            cand = z - lam * step
            if domain_guard is None or domain_guard(cand):
                fc, dfc = f_and_derivative(cand)
                rc = abs(fc - target)
                if rc < resid:
                    z, fz, dfz, resid = cand, fc, dfc, rc
                    accepted = True
                    break
            lam *= cfg.step_shrink
        if not accepted:
            if at_floor(z, resid, dfz):
                return z
            raise ConvergenceError(
                f"damped Newton stalled at residual {resid:.3e}",
                best_point=z, best_residual=resid,
                best_derivative=abs(dfz))
    if resid <= cfg.residual_tol or at_floor(z, resid, dfz):
        return z
    raise ConvergenceError(
        f"no convergence after {cfg.max_iter} iterations "
        f"(residual {resid:.3e})",
        best_point=z, best_residual=resid, best_derivative=abs(dfz))


def path_continuation(f_and_derivative: FnAndDerivative,
                      known_point: tuple[complex, complex],
                      target_w: complex,
                      path: Sequence[complex] | None = None,
                      cfg: NewtonConfig | None = None,
                      domain_guard: Callable[[complex], bool] | None = None,
                      ) -> complex:
    """Track the solution of f(z) = w from a known pair (w0, z0) to target_w.

    ``path`` lists intermediate w-waypoints; legs are straight segments in
    w-space. A leg that fails to converge is split in half recursively.
    Raises ContinuationError once more than cfg.max_path_segments legs have
    been attempted.
    """
    cfg = cfg or _DEFAULT_NEWTON
    w0, z0 = known_point
    f0, _ = f_and_derivative(z0)
    if abs(f0 - w0) > max(1e-8, 1e3 * cfg.residual_tol) * max(1.0, abs(w0)):
        raise ValueError("known_point does not satisfy f(z0) = w0")

    waypoints = [complex(w0)] + [complex(w) for w in (path or [])] \
        + [complex(target_w)]
    z = complex(z0)
    segments = 0
    # stack of legs to solve, popped first-to-last, each (w_from, w_to)
    stack = [(waypoints[i], waypoints[i + 1])
             for i in range(len(waypoints) - 2, -1, -1)]
    while stack:
        w_from, w_to = stack.pop()
        if cfg.max_leg > 0 and abs(w_to - w_from) > cfg.max_leg:
            mid = 0.5 * (w_from + w_to)
            stack.append((mid, w_to))
            stack.append((w_from, mid))
            continue
        segments += 1
        if segments > cfg.max_path_segments:
            raise ContinuationError(
                "continuation breakdown: segment budget exhausted",
                best_point=z)
        try:
            z = newton_solve(f_and_derivative, z, w_to, cfg, domain_guard)
        except ConvergenceError:
            if abs(w_to - w_from) == 0.0:
                raise
            mid = 0.5 * (w_from + w_to)
            stack.append((mid, w_to))
            stack.append((w_from, mid))
    return z


def _quad_piece(g, a, b, abs_tol, limit):
    """One QUADPACK call with the budget/tolerance contract applied."""
    if a == b:
        return 0.0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, err = quad(g, a, b, epsabs=abs_tol, epsrel=0.0, limit=limit)
    if caught and err > abs_tol:
        raise QuadratureError(
            f"quadrature budget exhausted on ({a}, {b}): "
            f"error indicator {err:.3e} above tolerance {abs_tol:.3e}")
    return value


# e-foldings appended below the finite endpoint when a log substitution
# runs down to an endpoint at 0
_LOG_SUB_EFOLDS = 120.0


def adaptive_integrate(g: Callable[[float], float],
                       a: float,
                       b: float,
                       cfg: QuadratureConfig | None = None) -> float:
    """Integrate g over (a, b) to absolute tolerance cfg.abs_tol.

    Endpoint substitutions:
      * ``sqrt``: t = a + s^2 / t = b - s^2 on the two halves; resolves
        square-root endpoint singularities.
      * ``log``: t = exp(-u) (requires 0 <= a < b); resolves logarithmic
        blow-up towards t = 0. With a = 0 the u-range is truncated after
        _LOG_SUB_EFOLDS e-foldings, which leaves the weight below 1e-52.
    """
    cfg = cfg or _DEFAULT_QUAD
    if not (np.isfinite(a) and np.isfinite(b)):
        raise DomainError("adaptive_integrate requires finite endpoints")
    if a > b:
        return -adaptive_integrate(g, b, a, cfg)
    if a == b:
        return 0.0
    limit = cfg.max_subdivisions
    mode = cfg.endpoint_substitution

    if mode == "none":
        return _quad_piece(g, a, b, cfg.abs_tol, limit)

    if mode == "sqrt":
        m = 0.5 * (a + b)
        tol = 0.5 * cfg.abs_tol
        left = _quad_piece(lambda s: 2.0 * s * g(a + s * s),
                           0.0, np.sqrt(m - a), tol, limit)
        right = _quad_piece(lambda s: 2.0 * s * g(b - s * s),
                            0.0, np.sqrt(b - m), tol, limit)
        return left + right

    # mode == "log"
    if a < 0:
        raise DomainError("log substitution requires 0 <= a < b")
    u_lo = -np.log(b)
    u_hi = -np.log(a) if a > 0 else u_lo + _LOG_SUB_EFOLDS
    return _quad_piece(lambda u: np.exp(-u) * g(np.exp(-u)),
                       u_lo, u_hi, cfg.abs_tol, limit)
