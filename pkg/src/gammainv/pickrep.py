"""Stieltjes densities and integral representations of the branch inverses.

The Pick measure of g_k lives on the branch interval I_k and has the
smooth density d_k(t) = Im g_k(t + i0) / pi there.  The representation

    g_k(z) = integral_{I_k} d_k(t) / (t - z) dt - k,     z outside I_k,

holds for every k >= 0 (odd and even alike, with I_k oriented so that
lo < 0 < hi).  The density blows up logarithmically at t = 0 and vanishes
like sqrt(s) at the interval endpoints, so the quadrature splits I_k into
four pieces with log substitutions around 0 and sqrt substitutions at the
endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal

import numpy as np

from .kernel import DomainError, QuadratureConfig, adaptive_integrate
from .gammafn import critical_point, psi_prime
from .branches import (BranchInterval, boundary_extension, branch_interval,
                       extended_inverse, inverse_branch, _check_k)

Side = Literal["left", "right"]

# distance (relative to |I_k|) below which the density switches to the
# local square-root model at an interval endpoint
_ENDPOINT_SWITCH = 1e-7

_DEFAULT_QUAD = QuadratureConfig(abs_tol=1e-8, max_subdivisions=400)


@dataclass(frozen=True)
class PickParameters:
    """Canonical Pick-representation coefficients: linear term a, constant
    b, and point mass c at the origin."""
    a: float
    b: float
    c: float


@dataclass(frozen=True)
class DensityTable:
    """Sampled density d_k over I_k \\ {0}, nodes sorted by t."""
    k: int
    scheme: str
    nodes: tuple[tuple[float, float], ...]

    def to_csv(self) -> str:
        lines = ["t,d"]
        for t, d in self.nodes:
            lines.append(f"{t:.17g},{d:.17g}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _endpoint_sqrt_coeff(k: int, which: Side) -> float:
    """Coefficient C of the endpoint model d_k ~ C sqrt(s): from the local
    quadratic Gamma(z) = Gamma(x_e) +/- m(z)^2, C = sqrt(2/|Gamma''(x_e)|)/pi
    with Gamma''(x_e) = Gamma(x_e) psi'(x_e)."""
    cp = critical_point(k if which == "left" else k + 1)
    second = abs(cp.gamma_x) * psi_prime(complex(cp.x, 0.0)).real
    return math.sqrt(2.0 / second) / math.pi


def density(k: int, t: float, *, endpoint_model: bool = True) -> float:
    """Density d_k(t) = Im g_k(t + i0)/pi for t in the interior of I_k
    away from 0.  Below _ENDPOINT_SWITCH * |I_k| from an endpoint the local
    square-root model replaces the (there singular) boundary Newton solve.
    """
    k = _check_k(k, 0)
    iv = branch_interval(k)
    t = float(t)
    if not (iv.lo < t < iv.hi) or t == 0.0:
        raise DomainError(f"density defined on ({iv.lo:.9g}, {iv.hi:.9g}) "
                          "minus 0")
    length = iv.hi - iv.lo
    s_right = iv.hi - t
    s_left = t - iv.lo
    if endpoint_model and s_right < _ENDPOINT_SWITCH * length:
        return _endpoint_sqrt_coeff(k, "right") * math.sqrt(s_right)
    if endpoint_model and s_left < _ENDPOINT_SWITCH * length:
        return _endpoint_sqrt_coeff(k, "left") * math.sqrt(s_left)
    side = "plus" if t > 0 else "minus"
    return boundary_extension(k, side, t).imag / math.pi


# log-spaced node grids stop this many e-foldings below the interval scale
_TABLE_LOG_RANGE = 30.0


def _side_nodes_uniform(a: float, b: float, n: int) -> np.ndarray:
    h = (b - a) / n
    return a + h * (np.arange(n) + 0.5)


def _side_nodes_refined(outer: float, n: int) -> np.ndarray:
    """Nodes on the side between endpoint `outer` and 0: half sqrt-spaced
    from the endpoint, half log-spaced towards 0."""
    half = abs(outer) / 2.0
    m1 = n // 2
    m2 = n - m1
    s = math.sqrt(half) * (np.arange(m1) + 0.5) / m1
    near_end = abs(outer) - s * s
    u0 = -math.log(half)
    u = u0 + (_TABLE_LOG_RANGE - 0.0) * (np.arange(m2) + 0.5) / m2
    near_zero = np.exp(-u)
    ts = np.concatenate([near_end, near_zero])
    return math.copysign(1.0, outer) * ts


def density_table(k: int, n_nodes: int = 64,
                  scheme: str = "endpoint_refined") -> DensityTable:
    """Sample d_k on a grid covering I_k \\ {0}."""
    k = _check_k(k, 0)
    if n_nodes < 16:
        raise DomainError("n_nodes must be >= 16")
    if scheme not in ("uniform", "endpoint_refined"):
        raise DomainError(f"unknown scheme {scheme!r}")
    iv = branch_interval(k)
    n_left = max(8, int(round(n_nodes * (-iv.lo) / (iv.hi - iv.lo))))
    n_left = min(n_left, n_nodes - 8)
    n_right = n_nodes - n_left
    if scheme == "uniform":
        ts = np.concatenate([_side_nodes_uniform(iv.lo, 0.0, n_left),
                             _side_nodes_uniform(0.0, iv.hi, n_right)])
    else:
        ts = np.concatenate([_side_nodes_refined(iv.lo, n_left),
                             _side_nodes_refined(iv.hi, n_right)])
    ts = np.sort(ts)
    nodes = tuple((float(t), density(k, float(t))) for t in ts)
    return DensityTable(k=k, scheme=scheme, nodes=nodes)


def write_density_csv(table: DensityTable, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(table.to_csv())


def _representation_integral(k: int, z: complex,
                             cfg: QuadratureConfig,
                             dens: Callable[[float], float]) -> complex:
    """integral_{I_k} dens(t) / (t - z) dt split into four pieces:
    sqrt substitutions on the endpoint halves, log substitutions on the
    two halves meeting at the interior singularity t = 0."""
    iv = branch_interval(k)
    tol = cfg.abs_tol / 4.0
    sqrt_cfg = QuadratureConfig(abs_tol=tol, endpoint_substitution="sqrt",
                                max_subdivisions=cfg.max_subdivisions)
    log_cfg = QuadratureConfig(abs_tol=tol, endpoint_substitution="log",
                               max_subdivisions=cfg.max_subdivisions)

    def run(part: Callable[[complex], float]) -> float:
        total = 0.0
        # (lo, lo/2): sqrt at the left endpoint
        total += adaptive_integrate(
            lambda t: part(dens(t) / (t - z)), iv.lo, iv.lo / 2.0, sqrt_cfg)
        # (lo/2, 0): flip to (0, -lo/2), log singularity at 0
        total += adaptive_integrate(
            lambda u: part(dens(-u) / (-u - z)), 0.0, -iv.lo / 2.0, log_cfg)
        # (0, hi/2): log singularity at 0
        total += adaptive_integrate(
            lambda t: part(dens(t) / (t - z)), 0.0, iv.hi / 2.0, log_cfg)
        # (hi/2, hi): sqrt at the right endpoint
        total += adaptive_integrate(
            lambda t: part(dens(t) / (t - z)), iv.hi / 2.0, iv.hi, sqrt_cfg)
        return total

    re = run(lambda v: v.real)
    if z.imag == 0.0:
        return complex(re, 0.0)
    return complex(re, run(lambda v: v.imag))


def _cached_density(k: int) -> Callable[[float], float]:
    cache: dict[float, float] = {}

    def dens(t: float) -> float:
        d = cache.get(t)
        if d is None:
            d = density(k, t)
            cache[t] = d
        return d

    return dens


def stieltjes_eval(k: int, z: complex,
                   cfg: QuadratureConfig | None = None) -> complex:
    """Evaluate the integral representation of G_k at z outside I_k."""
    k = _check_k(k, 0)
    z = complex(z)
    cfg = cfg or _DEFAULT_QUAD
    iv = branch_interval(k)
    if z.imag == 0.0 and iv.lo <= z.real <= iv.hi:
        raise DomainError(f"z = {z.real:g} lies in I_{k}")
    return _representation_integral(k, z, cfg, _cached_density(k)) - k


def endpoint_identity(k: int, which: Side,
                      cfg: QuadratureConfig | None = None) -> float:
    """Monotone-convergence sum rule at an endpoint of I_k: the integral

        integral d_k(t) / (t - e) dt - k,   e in {lo, hi},

    reproduces the critical abscissa x_k (left) or x_{k+1} (right)."""
    k = _check_k(k, 0)
    if which not in ("left", "right"):
        raise DomainError(f"unknown endpoint {which!r}")
    cfg = cfg or _DEFAULT_QUAD
    iv = branch_interval(k)
    e = iv.lo if which == "left" else iv.hi
    val = _representation_integral(k, complex(e, 0.0), cfg,
                                   _cached_density(k))
    return val.real - k


_EXPONENT_FIT_DECADES = (1e-6, 1e-3)


def endpoint_exponent(k: int, which: Side, n_samples: int = 13) -> float:
    """Least-squares slope of log d_k versus log s over the endpoint window
    s in [1e-6, 1e-3] |I_k| (expected 1/2).  Uses genuine boundary solves,
    never the endpoint model."""
    k = _check_k(k, 0)
    if which not in ("left", "right"):
        raise DomainError(f"unknown endpoint {which!r}")
    iv = branch_interval(k)
    length = iv.hi - iv.lo
    s = np.geomspace(_EXPONENT_FIT_DECADES[0] * length,
                     _EXPONENT_FIT_DECADES[1] * length, n_samples)
    ts = iv.lo + s if which == "left" else iv.hi - s
    d = np.array([density(k, float(t), endpoint_model=False) for t in ts])
    if np.any(d < 1e-13):
        raise DomainError("density below resolvable level in fit window")
    slope = np.polyfit(np.log(s), np.log(d), 1)[0]
    return float(slope)


def point_mass_sequence(k: int, j_lo: int = 4, j_hi: int = 20
                        ) -> list[tuple[float, float]]:
    """The extrapolation sequence (y, y * Im g_k(iy)) for y = 2^{-j}."""
    k = _check_k(k, 0)
    out = []
    for j in range(j_lo, j_hi + 1):
        y = 2.0 ** (-j)
        out.append((y, y * inverse_branch(k, 1j * y).imag))
    return out


def pick_parameters(k: int) -> PickParameters:
    """Estimate the representation constants of g_k (expected a = 0,
    b = -k, c = 0):

      * a from the large-x difference quotient of G_k,
      * b by Richardson extrapolation of G_k(x) as x -> inf,
      * c by extrapolating y Im g_k(iy) as y -> 0+ against the
        y log(1/y) leading behaviour.
    """
    k = _check_k(k, 0)
    big = 1e6
    g1 = extended_inverse(k, big).real
    g2 = extended_inverse(k, 2.0 * big).real
    a = (g2 - g1) / big
    b = 2.0 * g2 - g1
    seq = point_mass_sequence(k)
    (y1, q1), (y2, q2) = seq[-2], seq[-1]
    l1 = y1 * math.log(1.0 / y1)
    l2 = y2 * math.log(1.0 / y2)
    alpha = (q1 - q2) / (l1 - l2)
    c = q2 - alpha * l2
    return PickParameters(a=max(a, 0.0), b=b, c=max(c, 0.0))
