"""Subgroup bounds, the C / ell pair arithmetic, quotient classes and
generator factorisation for J_k."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, PairNotFoundError, PrecisionError
from .series import TruncatedSeries, compose, inverse, lvl, power


@dataclass(frozen=True)
class Bounds:
    k: int
    c: int
    d: int


def c_bound(k: int) -> int:
    """Degree c_k from which J_{c_k}(Z) lies in the derived subgroup of J_k(Z)."""
    if k % 2 == 1:
        return 3 * k + 1
    if k % 4 == 2:
        return 3 * k + 2
    return 3 * k + 4


def d_bound(k: int) -> int:
    """Cut-off degree of the subgroup H_k (see :mod:`jenningslab.gamma`)."""
    r = k % 4
    if r == 3:
        return 2 * k + 1
    if r in (1, 2):
        return 2 * k + 2
    return 2 * k + 4


def bounds(k: int) -> Bounds:
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    return Bounds(k, c_bound(k), d_bound(k))


def C(m: int, n: int) -> int:
    """Second commutator coefficient: binom(m, 2) - (m - n)(m + n - 1)."""
    return m * (m - 1) // 2 - (m - n) * (m + n - 1)


def ell(m: int, n: int) -> int:
    """Degree at which C(m, n) appears in [x + a x^m, x + x^n]."""
    return m + 2 * (n - 1)


@dataclass(frozen=True)
class UsefulPair:
    m: int
    n: int
    k: int

    def is_useful(self) -> bool:
        return self.m > self.n + 2 and self.m % 2 == 1

    def is_k_useful(self) -> bool:
        return self.is_useful() and self.n >= self.k

    def has_odd_C(self) -> bool:
        return C(self.m, self.n) % 2 == 1

    @property
    def level(self) -> int:
        return ell(self.m, self.n)


def _check_odd(l: int):
    if l % 2 == 0:
        raise DomainError(f"l must be odd, got {l}")


def find_useful_pair(l: int, k: int) -> UsefulPair:
    """k-useful pair (m, n) with ell(m, n) = l and m = 3 (mod 4).

    Scans n downward from the largest value allowed by m > n + 2, so the
    first hit has the smallest m.
    """
    _check_odd(l)
    # m = l - 2n + 2 > n + 2  <=>  3n < l
    for n in range((l - 1) // 3, k - 1, -1):
        m = l - 2 * (n - 1)
        if m > n + 2 and m % 4 == 3:
            return UsefulPair(m, n, k)
    raise PairNotFoundError(f"no {k}-useful pair with ell(m, n) = {l} and odd C(m, n)")


def residue_useful_pair(l: int, k: int) -> UsefulPair:
    """Constructive pair from the residues of l mod 3 and mod 4.

    Produces (n + 5, n), (n + 8, n), (n + 6, n) or (n + 7, n) according to
    the residue class, then shifts (m, n) -> (m - 2, n + 1) when m = 1 (mod 4)
    to flip the parity of C.
    """
    _check_odd(l)
    if l % 3 == 0 and l % 4 == 1:
        n = (l - 3) // 3
        m = n + 5
    elif l % 3 == 0:
        n = (l - 6) // 3
        m = n + 8
    elif l % 3 == 1:
        n = (l - 4) // 3
        m = n + 6
    else:
        n = (l - 5) // 3
        m = n + 7
    if m % 4 == 1:
        m, n = m - 2, n + 1
    pair = UsefulPair(m, n, k)
    if ell(m, n) != l or not pair.is_k_useful() or not pair.has_odd_C():
        raise PairNotFoundError(f"residue construction gives no {k}-useful pair for l = {l}")
    return pair


def quotient_equal(f: TruncatedSeries, g: TruncatedSeries, k: int, l: int) -> bool:
    """Whether f and g define the same class in J_k / J_l."""
    if min(f.trunc_order, g.trunc_order) < l:
        raise PrecisionError(f"need coefficients below x^{l}")
    return all(f[i] == g[i] for i in range(k, l))


def factor_into_generators(f: TruncatedSeries, k: int, l: int) -> list[tuple[int, int]]:
    """Ascending factors (n, gamma) with f = (x + gamma_1 x^n_1) o ... mod x^l.

    Each new factor corrects the lowest degree where the running product
    still disagrees with f.
    """
    if f.trunc_order < l:
        raise PrecisionError(f"need coefficients below x^{l}, series is mod x^{f.trunc_order}")
    if lvl(f) < k:
        raise DomainError(f"series has level {lvl(f)} < {k}")
    target = TruncatedSeries(l, {d: c for d, c in f.coeffs.items() if d < l})
    factors = []
    acc = TruncatedSeries.identity(l)
    for i in range(k, l):
        gamma = target[i] - acc[i]
        if gamma:
            factors.append((i, gamma))
            acc = compose(acc, TruncatedSeries.monomial(i, gamma, l))
    return factors


def coset_representative_check(f: TruncatedSeries, g: TruncatedSeries, l: int) -> bool:
    """Cross-check for :func:`quotient_equal`: f^-1 o g lies in J_l."""
    return lvl(compose(inverse(f), g)) >= l


@lru_cache(maxsize=4096)
def sigma(i: int, n: int, e: int = 1) -> TruncatedSeries:
    """``(x + x^i)^e`` mod ``x^n``."""
    return power(TruncatedSeries.monomial(i, 1, n), e)
