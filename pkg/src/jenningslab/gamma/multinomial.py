"""The multi-index expansion of f o g on J_k^{c_k}.

With g = x + sum beta_i x^i, the multinomial theorem gives

    g^l = sum_{|v| = l} binom(l; v) x^(v_1) prod_i (beta_{k+i-2} x^(k+i-2))^(v_i)

and only the v with v . w^k < c_k survive truncation.  These form S_{l,k}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod

from ..errors import DomainError, PrecisionError
from ..series import TruncatedSeries, lvl
from ..structure import bounds


def m_k(k: int) -> int:
    return bounds(k).c - k + 1


def weight_vector(k: int) -> tuple[int, ...]:
    """w^k = (1, k, k + 1, ..., c_k - 1)."""
    return (1,) + tuple(range(k, bounds(k).c))


@dataclass(frozen=True)
class MultiIndex:
    """v in Z_{>=0}^{m_k}; v[0] counts x, v[j] counts beta_{k+j-1} x^(k+j-1)."""

    k: int
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.v) != m_k(self.k):
            raise ValueError(f"multi-index for k={self.k} needs {m_k(self.k)} entries")
        if any(x < 0 for x in self.v):
            raise ValueError("entries must be non-negative")

    @property
    def size(self) -> int:
        return sum(self.v)

    @cached_property
    def weight(self) -> int:
        return sum(a * b for a, b in zip(self.v, weight_vector(self.k)))

    @property
    def multinomial(self) -> int:
        return factorial(self.size) // prod(factorial(x) for x in self.v)

    @property
    def tail(self) -> dict[int, int]:
        """Nonzero tail entries keyed by the degree of beta they count."""
        return {self.k + j - 1: x for j, x in enumerate(self.v) if j and x}

    def classify(self) -> str | None:
        """'pure', 'A', 'B' or 'C'; None for shapes outside the k >= 5 list."""
        t = self.tail
        l = self.size
        if not t:
            return "pure"
        vals = sorted(t.values())
        if vals == [1] and self.v[0] == l - 1:
            return "A"
        if vals == [2] and self.v[0] == l - 2:
            return "B"
        if vals == [1, 1] and self.v[0] == l - 2:
            return "C"
        return None


def enumerate_S(l: int, k: int) -> list[MultiIndex]:
    """All v with |v| = l and v . w^k < c_k, in lexicographic tail order."""
    if k < 2 or l < k:
        raise DomainError(f"need l >= k >= 2, got l={l}, k={k}")
    return [MultiIndex(k, v) for v in _enumerate(l, k)]


@lru_cache(maxsize=None)
def _enumerate(l: int, k: int) -> tuple[tuple[int, ...], ...]:
    c = bounds(k).c
    degrees = list(range(k, c))
    # each unit in slot of degree e trades one x for x^e: cost e - 1
    budget = c - 1 - l
    out = []

    def rec(j, left, count, tail):
        if j == len(degrees):
            out.append((l - count,) + tuple(tail))
            return
        cost = degrees[j] - 1
        x = 0
        while x * cost <= left and count + x <= l:
            tail.append(x)
            rec(j + 1, left - x * cost, count + x, tail)
            tail.pop()
            x += 1

    if budget >= 0:
        rec(0, budget, 0, [])
    return tuple(out)


def multinomial_compose(f: TruncatedSeries, g: TruncatedSeries, k: int) -> TruncatedSeries:
    """f o g on J_k^{c_k} summed term by term over the sets S_{l,k}."""
    c = bounds(k).c
    for s in (f, g):
        if s.trunc_order != c:
            raise PrecisionError(f"series must be given mod x^{c}, got mod x^{s.trunc_order}")
        if lvl(s) < k:
            raise DomainError(f"level {lvl(s)} < {k}")
    beta = g.dense()
    out = list(beta)
    for l, a in f.coeffs.items():
        for mi in enumerate_S(l, k):
            term = mi.multinomial
            for d, e in mi.tail.items():
                term *= beta[d] ** e
                if not term:
                    break
            if term:
                out[mi.weight] += a * term
    return TruncatedSeries(c, {d: x for d, x in enumerate(out) if d >= 2})
