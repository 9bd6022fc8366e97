"""Deterministic JSON/CSV emission: floats at 17 significant digits
(lossless double round-trip), complex values as {"re": ..., "im": ...}.
"""

from __future__ import annotations

import math


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return f"{x:.17g}"


def _emit(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, complex):
        return _emit({"re": obj.real, "im": obj.imag})
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    if isinstance(obj, dict):
        inner = ", ".join(f'{_emit(str(k))}: {_emit(v)}'
                          for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_emit(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj)!r}")


def dumps_17(obj) -> str:
    """JSON text with insertion-ordered keys and 17-digit floats."""
    return _emit(obj)


def fmt_value_csv(v) -> str:
    """Scalar formatting for CSV cells; complex as 'a+bi'."""
    if isinstance(v, complex):
        sign = "+" if v.imag >= 0 else "-"
        return f"{fmt_float(v.real)}{sign}{fmt_float(abs(v.imag))}i"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    return str(v)
