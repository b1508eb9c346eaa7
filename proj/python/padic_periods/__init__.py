"""Exact p-adic period polynomials, filtered phi-modules and Z recursions.

Rationals are returned as :class:`fractions.Fraction`; intervals are strings
such as ``"0..2"`` or ``"]-1,1]"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from . import _core

__all__ = [
    "xitilde",
    "norm_bounds",
    "unit_quotient",
    "polygons",
    "dim2_module",
    "z_recursion_report",
    "pollack_report",
]


def _q(text: str) -> Fraction:
    return Fraction(text)


def _s(value: Any) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _opt(value: Any) -> str | None:
    return None if value is None else _s(value)


def xitilde(p: int, n: int, J: str, Jp: str, u: Any = None) -> list[Fraction]:
    """Coefficients of xi~_n^{J' in J}, lowest degree first."""
    return [_q(c) for c in _core.xitilde(p, n, J, Jp, _opt(u))]


def norm_bounds(p: int, n: int, J: str, Jp: str, u: Any = None) -> dict[str, Any]:
    d = _core.norm_bounds(p, n, J, Jp, _opt(u))
    return {"attained": _q(d["attained"]), "lower": _q(d["lower"]), "upper": _q(d["upper"]), "ok": d["ok"]}


def unit_quotient(p: int, n: int, J: str, u: Any = None) -> dict[str, Any]:
    d = _core.unit_quotient(p, n, J, _opt(u))
    d["quotient"] = [_q(c) for c in d["quotient"]]
    d["mu"] = None if d["mu"] == "+inf" else _q(d["mu"])
    return d


def polygons(p: int, phi: Sequence[Sequence[Any]], weights: Sequence[int]) -> dict[str, Any]:
    d = _core.polygons(p, [[_s(x) for x in row] for row in phi], list(weights))
    for key in ("newton", "smith", "hodge"):
        d[key] = [_q(s) for s in d[key]]
    return d


def dim2_module(p: int, r: int, a_p: Any = 0, iota: Any = 1) -> dict[str, Any]:
    """JSON form of the two-dimensional module with weights (-r, 0)."""
    return json.loads(_core.dim2_module(p, r, _s(a_p), _s(iota)))


def z_recursion_report(module: dict[str, Any], J: str | None = None, N: int = 0, n_max: int = 4,
                       mode: str = "standard", u: Any = None) -> dict[str, Any]:
    return json.loads(_core.z_recursion_report(json.dumps(module), int(module["p"]), _opt(u), J, N, n_max, mode))


def pollack_report(module: dict[str, Any], N: int = 0, n_max: int = 4) -> dict[str, Any]:
    return json.loads(_core.pollack_report(json.dumps(module), int(module["p"]), N, n_max))
