"""Command-line surface.

Every operation of the library is reachable from one subcommand; outputs
are machine-readable (JSON by default, CSV with --format csv) and
deterministic for fixed arguments.  Exit codes: 0 success / all checks
pass, 1 verification failure, 2 usage error.  The environment variable
GAMMA_INV_QUAD_TOL overrides the quadrature absolute tolerance.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import branches, gammafn, genus2, pickrep
from .kernel import DomainError, QuadratureConfig
from ._serialize import dumps_17, fmt_value_csv

# paper-reported genus-2 numbers checked by `report --suite paper`; see
# README for why the first four fail at the stated tolerance
_PAPER_SUITE = (
    ("beta_G", 2.568, 1e-3),
    ("G(beta_G)", 0.945, 1e-3),
    ("beta_2", 3.763, 1e-3),
    ("inv_Gamma_2(beta_2)", 0.048, 1e-3),
)

_GENUS2_FNS = {
    "barnes-g": genus2.barnes_g_function,
    "inv-gamma2": genus2.inv_gamma2_function,
}


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' (whitespace tolerated, 'j' accepted)."""
    s = "".join(text.split()).replace("j", "i")
    if not s:
        raise UsageError("empty complex literal")
    try:
        if s.endswith("i"):
            body = s[:-1]
            split = 0
            for pos in range(len(body) - 1, 0, -1):
                if body[pos] in "+-" and body[pos - 1] not in "eE":
                    split = pos
                    break
            re_part, im_part = body[:split], body[split:]
            if im_part in ("", "+"):
                im = 1.0
            elif im_part == "-":
                im = -1.0
            else:
                im = float(im_part)
            re = float(re_part) if re_part else 0.0
            return complex(re, im)
        return complex(float(s), 0.0)
    except ValueError as exc:
        raise UsageError(f"cannot parse complex value {text!r}") from exc


def _quad_config() -> QuadratureConfig:
    tol = os.environ.get("GAMMA_INV_QUAD_TOL")
    if tol is None:
        return QuadratureConfig(abs_tol=1e-8, max_subdivisions=400)
    try:
        return QuadratureConfig(abs_tol=float(tol), max_subdivisions=400)
    except ValueError as exc:
        raise UsageError(f"bad GAMMA_INV_QUAD_TOL={tol!r}") from exc


def _report(items: list[dict]) -> dict:
    return {"items": items, "pass": all(it["pass"] for it in items)}


def _check(name: str, computed, reference, tol: float) -> dict:
    return {
        "name": name,
        "computed": computed,
        "reference": reference,
        "tolerance": tol,
        "pass": bool(abs(computed - reference) <= tol),
    }


# ----------------------------------------------------------------------
# subcommand handlers, each returning (payload dict, exit code)
# ----------------------------------------------------------------------

def _cmd_critical_points(args) -> tuple[dict, int]:
    if args.max_k < 0:
        raise UsageError("--max-k must be >= 0")
    items = []
    for k in range(args.max_k + 1):
        cp = gammafn.critical_point(k)
        items.append({"k": cp.k, "x": cp.x, "gamma": cp.gamma_x})
    return {"items": items}, 0


_EVAL_FNS = {
    "gamma": gammafn.gamma,
    "log-gamma": gammafn.log_gamma,
    "psi": gammafn.psi,
    "psi-prime": gammafn.psi_prime,
    "binet-mu": gammafn.binet_mu,
    "barnes-g": genus2.barnes_g,
    "gamma2": genus2.gamma2,
}


def _cmd_eval(args) -> tuple[dict, int]:
    fn = _EVAL_FNS[args.fn]
    z = parse_complex(args.z)
    return {"fn": args.fn, "z": z, "value": complex(fn(z))}, 0


def _cmd_invert(args) -> tuple[dict, int]:
    w = parse_complex(args.w)
    k = args.branch
    if k == -1:
        if args.even:
            raise UsageError("--even requires a branch index >= 0")
        z = branches.principal_inverse(w)
        target = w
    elif args.even:
        z = branches.even_inverse(k, w)
        target = w
    else:
        z = branches.extended_inverse(k, w)
        target = (-1.0) ** (k + 1) * w
    residual = abs(gammafn.gamma(z) - target)
    return {"branch": k, "even": bool(args.even), "w": w, "z": z,
            "residual": residual}, 0


def _cmd_density(args) -> tuple[dict, int]:
    if args.k < 0:
        raise UsageError("density requires a branch index k >= 0")
    if args.n < 16:
        raise UsageError("--n must be >= 16")
    scheme = args.scheme.replace("-", "_")
    table = pickrep.density_table(args.k, args.n, scheme)
    if args.out:
        pickrep.write_density_csv(table, args.out)
        return {"k": args.k, "n": args.n, "scheme": args.scheme,
                "path": args.out, "rows": len(table.nodes)}, 0
    return {"k": args.k, "n": args.n, "scheme": args.scheme,
            "items": [{"t": t, "d": d} for t, d in table.nodes]}, 0


def _representation_points(k: int) -> list[complex]:
    iv = branches.branch_interval(k)
    return [
        complex(iv.lo - 1.0), complex(iv.lo - 0.01),
        complex(iv.hi + 0.01), complex(iv.hi + 1.0),
        complex(iv.hi + 100.0), 1j, 2 + 2j, -2 - 3j, 0.5j,
        complex(iv.lo - 0.01, -0.01),
    ]


def _cmd_verify_representation(args) -> tuple[dict, int]:
    if args.k < 0:
        raise UsageError("verify-representation requires k >= 0")
    cfg = _quad_config()
    items = []
    for z in _representation_points(args.k):
        computed = pickrep.stieltjes_eval(args.k, z, cfg)
        reference = branches.extended_inverse(args.k, z)
        items.append(_check(f"k={args.k} z={fmt_value_csv(z)}",
                            computed, reference, args.tol))
    rep = _report(items)
    return rep, 0 if rep["pass"] else 1


def _cmd_endpoint(args) -> tuple[dict, int]:
    if args.k < 0:
        raise UsageError("endpoint requires k >= 0")
    if args.mode == "sum-rule":
        cfg = _quad_config()
        computed = pickrep.endpoint_identity(args.k, args.which, cfg)
        ref_k = args.k if args.which == "left" else args.k + 1
        reference = gammafn.critical_point(ref_k).x
        item = _check(f"sum-rule k={args.k} {args.which} (x_{ref_k})",
                      computed, reference, 1e-4)
    else:
        computed = pickrep.endpoint_exponent(args.k, args.which)
        item = _check(f"exponent k={args.k} {args.which}",
                      computed, 0.5, 0.05)
    rep = _report([item])
    return rep, 0 if rep["pass"] else 1


def _cmd_pick_params(args) -> tuple[dict, int]:
    if args.k < 0:
        raise UsageError("pick-params requires k >= 0")
    p = pickrep.pick_parameters(args.k)
    items = [
        _check(f"a_{args.k}", p.a, 0.0, 1e-6),
        _check(f"b_{args.k}", p.b, -float(args.k), 1e-3),
        _check(f"c_{args.k}", p.c, 0.0, 1e-4),
    ]
    rep = _report(items)
    return rep, 0 if rep["pass"] else 1


def _cmd_genus2_classify(args) -> tuple[dict, int]:
    fn = _GENUS2_FNS[args.fn]()
    derived = genus2.classify(fn)
    return {
        "r": fn.r,
        "a": fn.a,
        "b": fn.b,
        "lambda_rule": fn.rule.name,
        "u": derived.u,
        "beta": derived.beta,
        "f_beta": derived.f_beta,
        "in_class_g": derived.in_class_g,
    }, 0


def _cmd_genus2_invert(args) -> tuple[dict, int]:
    fn = _GENUS2_FNS[args.fn]()
    w = parse_complex(args.w)
    z = genus2.inverse_f(fn, w)
    if args.fn == "barnes-g":
        fz = genus2.barnes_g(z)
    else:
        fz = 1.0 / genus2.gamma2(z)
    return {"fn": args.fn, "w": w, "z": z, "residual": abs(fz - w)}, 0


def _cmd_sin_oracle(args) -> tuple[dict, int]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    rng = np.random.default_rng(20120925)
    worst = 0.0
    for _ in range(args.n):
        w = complex(rng.uniform(-3.0, 3.0), 10.0 ** rng.uniform(-1.5, 1.0))
        dev = abs(branches.lp_sin_inverse(w) - branches.sin_comb_inverse(w))
        worst = max(worst, dev)
    at_i = branches.lp_sin_inverse(1j)
    items = [
        _check(f"comb vs closed form, max over {args.n} points",
               worst, 0.0, 1e-10),
        _check("value at i vs i*ln(1+sqrt(2))",
               abs(at_i - 1j * np.arcsinh(1.0)), 0.0, 1e-12),
    ]
    rep = _report(items)
    return rep, 0 if rep["pass"] else 1


def _cmd_report(args) -> tuple[dict, int]:
    if args.suite != "paper":
        raise UsageError(f"unknown suite {args.suite!r}")
    d_g = genus2.classify(genus2.barnes_g_function())
    d_2 = genus2.classify(genus2.inv_gamma2_function())
    computed = (d_g.beta, d_g.f_beta, d_2.beta, d_2.f_beta)
    items = [_check(name, val, ref, tol)
             for (name, ref, tol), val in zip(_PAPER_SUITE, computed)]
    for k in range(1, 5):
        p = pickrep.pick_parameters(k)
        items.append(_check(f"a_{k}", p.a, 0.0, 1e-6))
        items.append(_check(f"b_{k}", p.b, -float(k), 1e-3))
        items.append(_check(f"c_{k}", p.c, 0.0, 1e-4))
    rep = _report(items)
    return rep, 0 if rep["pass"] else 1


# ----------------------------------------------------------------------
# output formatting and argument wiring
# ----------------------------------------------------------------------

def _emit_csv(payload: dict) -> str:
    if "items" in payload:
        items = payload["items"]
        if items and "name" in items[0]:
            lines = ["name,computed,reference,tolerance,pass"]
            for it in items:
                lines.append(",".join(fmt_value_csv(it[c]) for c in
                                      ("name", "computed", "reference",
                                       "tolerance", "pass")))
        elif items:
            cols = list(items[0].keys())
            lines = [",".join(cols)]
            for it in items:
                lines.append(",".join(fmt_value_csv(it[c]) for c in cols))
        else:
            lines = []
        return "\n".join(lines) + "\n"
    lines = [f"{k},{fmt_value_csv(v)}" for k, v in payload.items()]
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammainv",
        description="Branch inverses of the gamma function, their "
                    "Stieltjes densities, and genus-2 extensions.")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critical-points",
                       help="critical abscissas x_k and extrema Gamma(x_k)")
    p.add_argument("--max-k", type=int, default=4)

    p = sub.add_parser("eval", help="evaluate a special function")
    p.add_argument("--fn", choices=sorted(_EVAL_FNS), required=True)
    p.add_argument("--z", required=True)

    p = sub.add_parser("invert", help="branch inverse of gamma")
    p.add_argument("--branch", type=int, required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--even", action="store_true",
                   help="use the even-branch variant e_k")

    p = sub.add_parser("density", help="export a density table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--scheme", choices=("uniform", "endpoint-refined"),
                   default="endpoint-refined")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify-representation",
                       help="integral representation vs Newton inverse")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-5)

    p = sub.add_parser("endpoint", help="endpoint sum rule / exponent")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--which", choices=("left", "right"), required=True)
    p.add_argument("--mode", choices=("sum-rule", "exponent"),
                   default="sum-rule")

    p = sub.add_parser("pick-params",
                       help="representation constants a_k, b_k, c_k")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("genus2-classify",
                       help="inflection/minimum data of a genus-2 instance")
    p.add_argument("--fn", choices=sorted(_GENUS2_FNS), required=True)

    p = sub.add_parser("genus2-invert", help="Pick inverse of a genus-2 fn")
    p.add_argument("--fn", choices=sorted(_GENUS2_FNS), required=True)
    p.add_argument("--w", required=True)

    p = sub.add_parser("sin-oracle",
                       help="comb inversion of log sin vs closed form")
    p.add_argument("--n", type=int, default=20)

    p = sub.add_parser("report", help="verification report")
    p.add_argument("--suite", default="paper")
    return parser


_HANDLERS = {
    "critical-points": _cmd_critical_points,
    "eval": _cmd_eval,
    "invert": _cmd_invert,
    "density": _cmd_density,
    "verify-representation": _cmd_verify_representation,
    "endpoint": _cmd_endpoint,
    "pick-params": _cmd_pick_params,
    "genus2-classify": _cmd_genus2_classify,
    "genus2-invert": _cmd_genus2_invert,
    "sin-oracle": _cmd_sin_oracle,
    "report": _cmd_report,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        payload, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"gammainv: usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"gammainv: usage error: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        sys.stdout.write(_emit_csv(payload))
    else:
        sys.stdout.write(dumps_17(payload) + "\n")
    return code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
