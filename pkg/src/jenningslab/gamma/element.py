"""Elements of the reduced quotient Gamma_k = J_k^{c_k} / H_k.

H_k is the normal subgroup of J_k^{c_k} whose elements vanish below d_k
and carry even coefficients in every odd degree >= d_k.  A class is
therefore pinned down by

* the exact coefficients in degrees k .. d_k - 1 (``low``), and
* the parities of the odd-degree coefficients in d_k .. c_k - 1
  (``high_odd``); even degrees >= d_k carry no information.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import DomainError, PrecisionError
from ..series import TruncatedSeries, commutator, compose, inverse, lvl
from ..structure import bounds


def low_degrees(k: int) -> range:
    b = bounds(k)
    return range(k, b.d)


def high_odd_degrees(k: int) -> list[int]:
    b = bounds(k)
    return [i for i in range(b.d, b.c) if i % 2]


@dataclass(frozen=True)
class GammaElement:
    """Class of a series in Gamma_k; ``low[i - k]`` is the degree-i coefficient
    and ``high_odd`` lists bits for the odd degrees d_k <= i < c_k."""

    k: int
    low: tuple[int, ...]
    high_odd: tuple[int, ...]

    def __post_init__(self):
        b = bounds(self.k)
        if len(self.low) != b.d - self.k:
            raise ValueError(f"expected {b.d - self.k} low coefficients, got {len(self.low)}")
        if len(self.high_odd) != len(high_odd_degrees(self.k)):
            raise ValueError("wrong number of high odd bits")
        object.__setattr__(self, "low", tuple(int(a) for a in self.low))
        object.__setattr__(self, "high_odd", tuple(int(a) % 2 for a in self.high_odd))

    @classmethod
    def zero(cls, k: int) -> "GammaElement":
        return cls(k, (0,) * (bounds(k).d - k), (0,) * len(high_odd_degrees(k)))

    @classmethod
    def from_coefficients(cls, k: int, coef: Callable[[int], int]) -> "GammaElement":
        """Reduce a representative given by ``coef(i)`` for k <= i < c_k."""
        return cls(
            k,
            tuple(coef(i) for i in low_degrees(k)),
            tuple(coef(i) % 2 for i in high_odd_degrees(k)),
        )

    def coefficient(self, i: int) -> int:
        """Coefficient of the canonical lift at degree i (0 outside k..c_k-1)."""
        b = bounds(self.k)
        if self.k <= i < b.d:
            return self.low[i - self.k]
        if b.d <= i < b.c and i % 2:
            return self.high_odd[(i - b.d) // 2]
        return 0

    def is_zero(self) -> bool:
        return not any(self.low) and not any(self.high_odd)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "low": {str(i): str(a) for i, a in zip(low_degrees(self.k), self.low)},
            "high_odd": {str(i): a for i, a in zip(high_odd_degrees(self.k), self.high_odd)},
        }


def reduce(f: TruncatedSeries, k: int) -> GammaElement:
    """Class of f in Gamma_k: exact below d_k, odd degrees mod 2 above."""
    b = bounds(k)
    if f.trunc_order < b.c:
        raise PrecisionError(f"reduce needs f mod x^{b.c}, got mod x^{f.trunc_order}")
    if lvl(f) < k:
        raise DomainError(f"level {lvl(f)} < {k}")
    return GammaElement.from_coefficients(k, f.__getitem__)


def lift(a: GammaElement) -> TruncatedSeries:
    """Canonical representative: high even coefficients 0, high odd in {0, 1}."""
    b = bounds(a.k)
    return TruncatedSeries(b.c, {i: a.coefficient(i) for i in range(a.k, b.c)})


def _same_k(a: GammaElement, b: GammaElement):
    if a.k != b.k:
        raise DomainError(f"elements of Gamma_{a.k} and Gamma_{b.k} cannot be combined")


def oracle_compose(a: GammaElement, b: GammaElement) -> GammaElement:
    _same_k(a, b)
    return reduce(compose(lift(a), lift(b)), a.k)


def oracle_inverse(a: GammaElement) -> GammaElement:
    return reduce(inverse(lift(a)), a.k)


def oracle_commutator(a: GammaElement, b: GammaElement) -> GammaElement:
    _same_k(a, b)
    return reduce(commutator(lift(a), lift(b)), a.k)
