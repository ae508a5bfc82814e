"""Truncated power series ``x + a_2 x^2 + ...`` under composition.

Every value lives in the Jennings group modulo ``x^N``: the constant term is
0, the linear term is 1, and only degrees ``2 <= d < N`` carry data.  All
arithmetic is on Python integers, so coefficient growth is never an issue.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import OrderMismatchError, PrecisionError, SeriesParseError

INFINITE = math.inf
"""Level of the identity; compares greater than every integer level."""


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """An element ``x + sum(coeffs[d] x^d)`` of the Jennings group mod ``x^N``.

    ``coeffs`` is kept canonical: only degrees ``2 <= d < trunc_order`` with a
    nonzero coefficient are stored.
    """

    trunc_order: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.trunc_order < 1:
            raise ValueError(f"trunc_order must be positive, got {self.trunc_order}")
        clean = {}
        for d, c in self.coeffs.items():
            d, c = int(d), int(c)
            if d < 2:
                raise ValueError(f"degree {d} cannot be stored (must be >= 2)")
            if d < self.trunc_order and c:
                clean[d] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def identity(cls, n: int) -> "TruncatedSeries":
        return cls(n, {})

    @classmethod
    def monomial(cls, degree: int, coefficient: int, n: int) -> "TruncatedSeries":
        """``x + coefficient * x^degree`` mod ``x^n``."""
        return cls(n, {degree: coefficient})

    @classmethod
    def from_dense(cls, dense: list[int]) -> "TruncatedSeries":
        return cls(len(dense), {d: c for d, c in enumerate(dense) if d >= 2 and c})

    def dense(self) -> list[int]:
        """Coefficient list indexed by degree, length ``trunc_order``.

        Positions 0 and 1 hold 0; the implicit linear term is not stored.
        """
        out = [0] * self.trunc_order
        for d, c in self.coeffs.items():
            out[d] = c
        return out

    def __getitem__(self, degree: int) -> int:
        if degree >= self.trunc_order:
            raise PrecisionError(
                f"degree {degree} is beyond the known window mod x^{self.trunc_order}"
            )
        if degree == 1:
            return 1
        return self.coeffs.get(degree, 0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc_order == other.trunc_order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc_order, tuple(self.coeffs.items())))

    def is_identity(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"TruncatedSeries({format_series(self)!r})"


def _check_orders(f: TruncatedSeries, g: TruncatedSeries) -> int:
    if f.trunc_order != g.trunc_order:
        raise OrderMismatchError(f.trunc_order, g.trunc_order)
    return f.trunc_order


def compose_dense(f: list[int], g: list[int]) -> list[int]:
    """``f(g(x))`` on dense coefficient lists of equal length N.

    Writes ``g = x*u`` and accumulates ``a_d x^d u^d`` for each nonzero
    ``a_d`` of f.  Powers of u are kept only to the length still visible
    below ``x^N``, so high-level inputs are cheap.
    """
    n = len(g)
    out = list(g)
    if n > 1:
        out[1] = 0
    support = [d for d in range(2, n) if f[d]]
    if not support:
        return out
    u_sparse = [(j, g[j + 1]) for j in range(1, n - 1) if g[j + 1]]
    power = [1] + [g[j + 1] for j in range(1, n - 1)]  # u^1, length n - 1
    e = 1
    for d in support:
        while e < d:
            m = n - e - 1
            nxt = power[:m]
            for j, b in u_sparse:
                if j >= m:
                    break
                for t in range(m - j):
                    nxt[t + j] += b * power[t]
            power = nxt
            e += 1
        a = f[d]
        for t in range(n - d):
            out[d + t] += a * power[t]
    return out


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(x)) mod x^N``."""
    _check_orders(f, g)
    if g.is_identity():
        return f
    if f.is_identity():
        return g
    return TruncatedSeries.from_dense(compose_dense(f.dense(), g.dense()))


def compose_all(items: Iterable[TruncatedSeries], n: int) -> TruncatedSeries:
    """Left-to-right composition ``s_1 o s_2 o ... o s_r`` (identity if empty)."""
    acc = TruncatedSeries.identity(n)
    for s in items:
        acc = compose(acc, s)
    return acc


def inverse_dense(f: list) -> list:
    """Compositional inverse of a dense coefficient list, solved one degree
    at a time from ``f(h) = x``.

    With ``h = x*u`` the degree-d coefficient of ``f(h)`` is ``h_d`` plus
    terms ``a_j [x^{d-j}] u^j`` that only involve ``h_2..h_{d-1}``.  The
    coefficients of each needed ``u^j`` are produced online with the
    J.C.P. Miller recurrence (``u_0 = 1``, divisions are exact).  Entries
    may be any ring elements supporting ``+``, ``*`` and exact ``//``.
    """
    n = len(f)
    support = [(j, f[j]) for j in range(2, n) if f[j]]
    u = [1] + [0] * max(n - 1, 0)  # u[i] = h_{i+1}
    powers = {j: [1] for j, _ in support}  # coefficients of u^j computed so far
    h = [0] * n
    if n > 1:
        h[1] = 1
    for d in range(2, n):
        s = 0
        for j, a in support:
            idx = d - j
            if idx < 0:
                continue
            w = powers[j]
            while len(w) <= idx:
                m = len(w)
                acc = 0
                for i in range(1, m + 1):
                    acc += ((j + 1) * i - m) * u[i] * w[m - i]
                w.append(acc // m)
            s += a * w[idx]
        h[d] = -s
        u[d - 1] = h[d]
    return h


def inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``f^-1`` with ``f o f^-1 = f^-1 o f = x``."""
    if f.is_identity():
        return f
    return TruncatedSeries.from_dense(inverse_dense(f.dense()))


def power(f: TruncatedSeries, e: int) -> TruncatedSeries:
    """Group power ``f^e`` under composition, by binary exponentiation."""
    n = f.trunc_order
    if e < 0:
        f, e = inverse(f), -e
    result = TruncatedSeries.identity(n)
    base = f
    while e:
        if e & 1:
            result = compose(result, base)
        e >>= 1
        if e:
            base = compose(base, base)
    return result


def commutator(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``[f, g] = f o g o f^-1 o g^-1``, so that ``[f, g] o g o f = f o g``."""
    _check_orders(f, g)
    if f.is_identity() or g.is_identity():
        return TruncatedSeries.identity(f.trunc_order)
    return compose(compose(f, g), compose(inverse(f), inverse(g)))


def lvl(f: TruncatedSeries):
    """Smallest degree with a nonzero coefficient; ``INFINITE`` for ``x``.

    Only the known window is inspected: a series equal to ``x`` mod ``x^N``
    reports ``INFINITE``.
    """
    if not f.coeffs:
        return INFINITE
    return next(iter(f.coeffs))


def truncate(f: TruncatedSeries, m: int) -> TruncatedSeries:
    """Reduce to ``mod x^m``; precision is never invented."""
    if m > f.trunc_order:
        raise PrecisionError(
            f"cannot extend a series known mod x^{f.trunc_order} to mod x^{m}"
        )
    return TruncatedSeries(m, {d: c for d, c in f.coeffs.items() if d < m})


def in_subgroup(f: TruncatedSeries, k: int) -> bool:
    """Membership in J_k, judged on the series' own window."""
    return lvl(f) >= k


# --- text and JSON formats -------------------------------------------------


def format_series(f: TruncatedSeries) -> str:
    """Render as ``x + 2*x^3 - x^7 (mod x^12)``."""
    parts = ["x"]
    for d, c in f.coeffs.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = f"x^{d}" if mag == 1 else f"{mag}*x^{d}"
        parts.append(f"{sign} {term}")
    return " ".join(parts) + f" (mod x^{f.trunc_order})"


_MOD_RE = re.compile(r"\(\s*mod\s+x\s*\^\s*(\d+)\s*\)\s*$")
_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*(?:\*\s*)?)?
        (?P<x>x(?:\s*\^\s*(?P<deg>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_series(text: str, trunc: int | None = None) -> TruncatedSeries:
    """Parse the text format.  ``trunc`` is required when no ``(mod x^N)``
    suffix is present; when both are given they must agree.

    Terms of degree >= N are dropped (they vanish mod ``x^N``).
    """
    text = text.strip()
    if text.startswith("{"):
        return series_from_json(text)
    m = _MOD_RE.search(text)
    if m:
        n = int(m.group(1))
        if trunc is not None and trunc != n:
            raise SeriesParseError(f"text says mod x^{n} but --trunc is {trunc}")
        text = text[: m.start()]
    elif trunc is None:
        raise SeriesParseError("no truncation order: add '(mod x^N)' or pass trunc")
    else:
        n = trunc
    body = text.replace(" ", "")
    if not body:
        raise SeriesParseError("empty series")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(body):
        tm = _TERM_RE.match(body, pos)
        if tm is None or tm.end() == pos:
            raise SeriesParseError(f"cannot parse near {body[pos:]!r}")
        if not first and tm.group("sign") is None:
            raise SeriesParseError(f"missing operator near {body[pos:]!r}")
        if tm.group("coef") is None and tm.group("x") is None:
            raise SeriesParseError(f"dangling sign near {body[pos:]!r}")
        sign = -1 if tm.group("sign") == "-" else 1
        coef = int(tm.group("coef")) if tm.group("coef") is not None else 1
        if tm.group("x") is None:
            deg = 0
        elif tm.group("deg") is None:
            deg = 1
        else:
            deg = int(tm.group("deg"))
        coeffs[deg] = coeffs.get(deg, 0) + sign * coef
        pos = tm.end()
        first = False
    if coeffs.pop(0, 0) != 0:
        raise SeriesParseError("constant term must be 0")
    if n > 1 and coeffs.pop(1, 0) != 1:
        raise SeriesParseError("linear coefficient must be 1")
    return TruncatedSeries(n, {d: c for d, c in coeffs.items() if d < n})


def series_to_json(f: TruncatedSeries) -> dict:
    return {"trunc": f.trunc_order, "coeffs": {str(d): str(c) for d, c in f.coeffs.items()}}


def series_from_json(data) -> TruncatedSeries:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SeriesParseError(str(exc)) from exc
    try:
        n = int(data["trunc"])
        coeffs = {int(d): int(c) for d, c in data.get("coeffs", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise SeriesParseError(f"bad series JSON: {exc}") from exc
    bad = [d for d in coeffs if d < 2 or d >= n]
    if bad:
        raise SeriesParseError(f"degrees {bad} outside 2..{n - 1}")
    return TruncatedSeries(n, coeffs)
