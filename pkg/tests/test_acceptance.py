"""Acceptance suite: one test per criterion, each printing a summary line
(run with `pytest -s tests/test_acceptance.py` to see them).

Criterion 9 compares the genus-2 classification against the literature
values at +/- 0.001.  Three of the four reference values are reproducible
only with a bare-truncated product (about 500 zeros, no tail correction);
the tail-corrected minima, confirmed by an independent 30-digit
computation, sit 0.002..0.015 away.  The criterion is asserted as stated
and fails honestly; test_criterion_09_ground_truth pins the implementation
against the independently computed minima instead.  See
/root/notes/decisions.md for the full analysis.
"""

import cmath
import math

import numpy as np
import pytest

from gammainv import gammafn as gf
from gammainv import branches as br
from gammainv import pickrep as pr
from gammainv import genus2 as g2

SQRT_PI = 1.7724538509055160273


def report(n, name, ok, detail):
    print(f"ACCEPTANCE {n:>2} ({name}): {'PASS' if ok else 'FAIL'} "
          f"- {detail}")


def test_criterion_01_branch_inverse_identity():
    rng = np.random.default_rng(101)
    worst = 0.0
    for k in range(-1, 7):
        for _ in range(40):
            r = 10.0 ** rng.uniform(-2, 2)
            th = rng.uniform(0.01, math.pi - 0.01)
            w = r * cmath.exp(1j * th)
            z = br.inverse_branch(k, w)
            assert z.imag > 0.0, (k, w)
            resid = abs(gf.gamma(z) - (-1.0) ** (k + 1) * w)
            worst = max(worst, resid / max(1.0, abs(w)))
            assert resid <= 1e-9 * max(1.0, abs(w)), (k, w)
    report(1, "branch-inverse identity", True,
           f"k in -1..6, 40 points each, worst scaled residual {worst:.2e}")


def test_criterion_02_factorial_anchors():
    for w, x in [(1.0, 2.0), (2.0, 3.0), (6.0, 4.0), (24.0, 5.0),
                 (120.0, 6.0)]:
        assert abs(br.principal_inverse(w) - x) <= 1e-10
    g1 = br.extended_inverse(1, 4.0 * SQRT_PI / 3.0)
    assert abs(g1 - (-1.5)) <= 1e-10
    e0 = br.even_inverse(0, -2.0 * SQRT_PI)
    assert abs(e0 - (-0.5)) <= 1e-10
    report(2, "factorial anchors", True,
           "principal inverse at 1,2,6,24,120; G_1, e_0 closed forms")


def _representation_points(k):
    iv = br.branch_interval(k)
    return [complex(iv.lo - 1.0), complex(iv.lo - 0.01),
            complex(iv.hi + 0.01), complex(iv.hi + 1.0),
            complex(iv.hi + 100.0), 1j, 2 + 2j, -2 - 3j, 0.5j,
            complex(iv.lo - 0.01, -0.01)]


def test_criterion_03_representation_reproduction():
    worst = 0.0
    for k in (1, 2, 3, 4):
        for z in _representation_points(k):
            diff = abs(pr.stieltjes_eval(k, z) - br.extended_inverse(k, z))
            worst = max(worst, diff)
            assert diff <= 1e-5, (k, z, diff)
    report(3, "integral representation", True,
           f"k in 1..4, 10 points each, worst |stieltjes - G_k| = "
           f"{worst:.2e}")


def test_criterion_04_pick_parameters():
    for k in (1, 2, 3, 4):
        p = pr.pick_parameters(k)
        assert abs(p.a) < 1e-6, (k, p)
        assert abs(p.b + k) < 1e-3, (k, p)
        assert p.c < 1e-4, (k, p)
    report(4, "Pick parameters", True,
           "a ~ 0, b = -k, point mass c ~ 0 for k = 1..4")


def test_criterion_05_endpoint_sum_rules():
    worst = 0.0
    for k in (1, 3):
        d_right = abs(pr.endpoint_identity(k, "right")
                      - gf.critical_point(k + 1).x)
        d_left = abs(pr.endpoint_identity(k, "left")
                     - gf.critical_point(k).x)
        worst = max(worst, d_right, d_left)
        assert d_right <= 1e-4 and d_left <= 1e-4, k
    report(5, "endpoint sum rules", True,
           f"x_k recovered by quadrature, worst deviation {worst:.2e}")


def test_criterion_06_endpoint_exponent():
    slopes = {}
    for k in (1, 2):
        for which in ("left", "right"):
            s = pr.endpoint_exponent(k, which)
            slopes[(k, which)] = s
            assert abs(s - 0.5) <= 0.05, (k, which, s)
    report(6, "endpoint exponent", True,
           "fitted slopes " + ", ".join(f"k={k} {w}: {s:.4f}"
                                        for (k, w), s in slopes.items()))


def test_criterion_07_density_monotonicity():
    for k in (1, 3):
        tab = pr.density_table(k, 64, "endpoint_refined")
        left = [d for t, d in tab.nodes if t < 0]
        right = [d for t, d in tab.nodes if t > 0]
        assert np.all(np.diff(left) > 0), k
        assert np.all(np.diff(right) < 0), k
    report(7, "density monotonicity", True,
           "64-node grids for k = 1, 3: zero violations")


def test_criterion_08_sin_oracle():
    rng = np.random.default_rng(108)
    worst = 0.0
    for _ in range(20):
        z = complex(rng.uniform(-3, 3), 10.0 ** rng.uniform(-1.5, 1.0))
        dev = abs(br.lp_sin_inverse(z) - br.sin_comb_inverse(z))
        worst = max(worst, dev)
        assert dev <= 1e-10, z
    at_i = abs(br.lp_sin_inverse(1j) - 1j * math.asinh(1.0))
    assert at_i <= 1e-12
    report(8, "sin comb oracle", True,
           f"20 points, worst deviation {worst:.2e}; at i: {at_i:.2e}")


# literature values quoted for the genus-2 minima, with the stated windows
_PAPER_VALUES = (
    ("beta_G", 2.568, 1e-3),
    ("G(beta_G)", 0.945, 1e-3),
    ("beta_2", 3.763, 1e-3),
    ("1/Gamma_2(beta_2)", 0.048, 1e-3),
)

# the same four quantities from an independent 30-digit computation
# (mpmath findroot/ barnesg), frozen
_GROUND_TRUTH = (2.5576639327890194, 0.9468456052697061,
                 3.7480645241476726, 0.0489989840627470)


def _genus2_numbers():
    d_g = g2.classify(g2.barnes_g_function())
    d_2 = g2.classify(g2.inv_gamma2_function())
    return (d_g.beta, d_g.f_beta, d_2.beta, d_2.f_beta)


def test_criterion_09_genus2_paper_numbers():
    computed = _genus2_numbers()
    failures = []
    for (name, ref, tol), val in zip(_PAPER_VALUES, computed):
        if abs(val - ref) > tol:
            failures.append(f"{name}: computed {val:.10f} vs quoted {ref} "
                            f"(off by {abs(val - ref):.2e} > {tol})")
    ok = not failures
    report(9, "genus-2 literature values", ok,
           "all four within 0.001" if ok else "; ".join(failures))
    assert ok, (
        "tail-corrected minima disagree with the quoted desk values; "
        "the quoted values match a ~500-term bare truncation of the "
        "product (see decisions ledger): " + "; ".join(failures))


def test_criterion_09_ground_truth():
    computed = _genus2_numbers()
    for val, truth in zip(computed, _GROUND_TRUTH):
        assert abs(val - truth) <= 1e-9
    report(9, "genus-2 minima vs independent 30-digit computation", True,
           "beta_G, G(beta_G), beta_2, 1/Gamma_2(beta_2) all within 1e-9")


def test_criterion_10_barnes_functional_equation():
    worst = 0.0
    for z in (0.5, 1.5, 2.5 + 1j, 4 + 2j, 0.3 + 0.1j, 6.0, 1e-2, 3 - 2j):
        lhs = g2.barnes_g(z + 1)
        rhs = gf.gamma(z) * g2.barnes_g(z)
        rel = abs(lhs - rhs) / abs(lhs)
        worst = max(worst, rel)
        assert rel < 1e-10, z
    report(10, "Barnes functional equation", True,
           f"8-point grid, worst relative error {worst:.2e}")


def test_criterion_11_genus2_pick_property():
    rng = np.random.default_rng(111)
    for fn in (g2.barnes_g_function(), g2.inv_gamma2_function()):
        beta = g2.classify(fn).beta
        for _ in range(40):
            w = complex(rng.uniform(-30, 30), 10.0 ** rng.uniform(-2, 1.5))
            z = g2.inverse_f(fn, w)
            assert z.imag > 0.0, (fn, w)
            assert z.real > beta, (fn, w)
    assert abs(g2.inverse_f(g2.barnes_g_function(), 2.0) - 4.0) <= 1e-8
    assert abs(g2.inverse_f(g2.barnes_g_function(), 12.0) - 5.0) <= 1e-8
    report(11, "genus-2 Pick property", True,
           "40 random points per instance; G^{-1}(2)=4, G^{-1}(12)=5")


def test_criterion_12_boundary_curve():
    for fn in (g2.barnes_g_function(), g2.inv_gamma2_function()):
        ys = np.geomspace(0.01, 50.0, 50)
        vals = [g2.boundary_curve(fn, y) for y in ys]
        re = np.array([v.real for v in vals])
        im = np.array([v.imag for v in vals])
        assert np.all(np.diff(re) < 0.0)
        assert np.all(np.diff(im) < 0.0)
    report(12, "boundary curve monotonicity", True,
           "Re and Im of log f(beta + iy) strictly decreasing, 50-point "
           "log grid")


def test_criterion_13_genus2_representation():
    fn = g2.barnes_g_function()
    solver = g2.Genus2Solver(fn)
    f_beta = g2.classify(fn).f_beta
    worst = 0.0
    for w in (f_beta + 0.5, f_beta + 1.0, 2.0, 5.0, 12.0, 50.0):
        got = g2.genus2_stieltjes_eval(fn, w, solver=solver)
        want = g2.inverse_f(fn, w)
        diff = abs(got - want)
        worst = max(worst, diff)
        assert diff <= 1e-4, (w, diff)
    report(13, "genus-2 representation", True,
           f"6 real points, worst |representation - inverse| = {worst:.2e}")
