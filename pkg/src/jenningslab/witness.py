"""Commutator words certifying membership in [J_k(Z), J_k(Z)].

A word is a small expression tree over generators ``x + a x^n``.  Builders
below produce, for every degree l >= c_k and every integer a, a product of
commutators whose value is ``x + a x^l + O(x^(l+1))``; peeling with them
writes any element of J_{c_k} as an explicit product of commutators.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import BelowGuaranteeError, DomainError, PrecisionError
from .series import (
    INFINITE,
    TruncatedSeries,
    commutator,
    compose,
    compose_all,
    inverse,
    lvl,
    power,
    truncate,
)
from .structure import C, c_bound, find_useful_pair


@dataclass(frozen=True)
class Gen:
    degree: int
    coefficient: int


@dataclass(frozen=True)
class Comm:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class Pow:
    child: "Word"
    exponent: int


@dataclass(frozen=True)
class Prod:
    children: tuple["Word", ...] = ()


Word = Union[Gen, Comm, Pow, Prod]


@lru_cache(maxsize=8192)
def evaluate(w: Word, n: int) -> TruncatedSeries:
    """Value of a word mod x^n; products compose left to right."""
    if n < 2:
        raise DomainError("evaluation order must be >= 2")
    if isinstance(w, Gen):
        return TruncatedSeries.monomial(w.degree, w.coefficient, n)
    if isinstance(w, Comm):
        return commutator(evaluate(w.left, n), evaluate(w.right, n))
    if isinstance(w, Pow):
        return power(evaluate(w.child, n), w.exponent)
    if isinstance(w, Prod):
        return compose_all((evaluate(c, n) for c in w.children), n)
    raise TypeError(f"not a witness word: {w!r}")


def is_commutator_certificate(w: Word) -> bool:
    """Every root-to-leaf path meets a Comm node before its Gen leaf."""
    if isinstance(w, Gen):
        return False
    if isinstance(w, Comm):
        return True
    if isinstance(w, Pow):
        return is_commutator_certificate(w.child)
    return all(is_commutator_certificate(c) for c in w.children)


def leaves(w: Word):
    if isinstance(w, Gen):
        yield w
    elif isinstance(w, Comm):
        yield from leaves(w.left)
        yield from leaves(w.right)
    elif isinstance(w, Pow):
        yield from leaves(w.child)
    else:
        for c in w.children:
            yield from leaves(c)


@dataclass(frozen=True)
class WitnessReport:
    word: Word
    value: TruncatedSeries
    target_degree: object
    target_coefficient: int
    valid: bool
    reason: str = ""


def check_witness(w: Word, k: int, n: int) -> WitnessReport:
    """Structural and degree checks plus evaluation; never raises on bad words."""
    value = evaluate(w, n)
    deg = lvl(value)
    coef = 0 if deg == INFINITE else value[deg]
    reason = ""
    if not is_commutator_certificate(w):
        reason = "some generator is not enclosed in a commutator"
    else:
        low = [g.degree for g in leaves(w) if g.degree < k]
        if low:
            reason = f"generator degree {min(low)} < k = {k}"
    return WitnessReport(w, value, deg, coef, not reason, reason)


# --- builders ----------------------------------------------------------------


def even_witness(k: int, l: int, alpha: int) -> Comm:
    """[x + a x^(l/2+1), x + x^(l/2)] = x + a x^l + ... for even l >= 2k."""
    if l % 2 or l < 2 * k:
        raise DomainError(f"even_witness needs even l >= 2k = {2 * k}, got l = {l}")
    h = l // 2
    return Comm(Gen(h + 1, alpha), Gen(h, 1))


def doubling_witness(k: int, l: int, alpha: int) -> Comm:
    """[x + a x^(h+2), x + x^h] = x + 2a x^l + ... with l = 2h + 1, h >= k."""
    if l % 2 == 0 or (l - 1) // 2 < k:
        raise DomainError(f"doubling_witness needs odd l with (l-1)/2 >= k = {k}, got l = {l}")
    h = (l - 1) // 2
    return Comm(Gen(h + 2, alpha), Gen(h, 1))


def _fix_odd_multiple(parts: list[Word], multiple: int, k: int, l: int, alpha: int) -> Word:
    """Turn a word worth ``x + multiple*a x^l + ...`` (multiple odd) into one
    worth ``x + a x^l + ...`` using powers of the doubling witness."""
    if multiple % 2 == 0:
        raise DomainError(f"coefficient multiple {multiple} is even")
    t = (multiple - 1) // 2
    if t:
        parts = parts + [Pow(doubling_witness(k, l, alpha), -t)]
    return parts[0] if len(parts) == 1 else Prod(tuple(parts))


def pair_witness(k: int, m: int, n: int, alpha: int) -> Word:
    """Word worth ``x + a x^ell(m,n) + ...`` built from [x + a x^m, x + x^n].

    The leading term (m - n) a x^(m+n-1) is cancelled by a power of an even
    or doubling witness one level up; the odd multiple C(m, n) that remains
    is reduced to 1.
    """
    if not (m > n + 2 and n >= k):
        raise DomainError(f"({m}, {n}) is not {k}-useful")
    l = m + 2 * (n - 1)
    main = Comm(Gen(m, alpha), Gen(n, 1))
    s = m + n - 1
    if s % 2 == 0:
        cancel = Pow(Comm(Gen(s // 2 + 1, alpha), Gen(s // 2, 1)), -(m - n))
    else:
        h = (m + n - 2) // 2
        cancel = Pow(Comm(Gen(h + 2, alpha), Gen(h, 1)), -((m - n) // 2))
    return _fix_odd_multiple([main, cancel], C(m, n), k, l, alpha)


def odd_witness(k: int, l: int, alpha: int) -> Word:
    """Certificate for ``x + a x^l + ...`` with odd l, via a k-useful pair."""
    if l % 2 == 0:
        raise DomainError(f"odd_witness needs odd l, got {l}")
    if l < c_bound(k):
        raise BelowGuaranteeError(f"l = {l} is below c_{k} = {c_bound(k)}")
    pair = find_useful_pair(l, k)
    return pair_witness(k, pair.m, pair.n, alpha)


def special_witness(k: int, alpha: int) -> Word:
    """k = 1 (mod 4), l = 3k + 2: no k-useful pair with odd C exists.

    [x + a x^(k+2), x + x^(k+1)]^3 o [x + a x^(k+3), x + x^k]^-1 cancels the
    common x^(2k+2) term, leaving -C(k+3,k) a x^(3k+1) and
    3 C(k+2,k+1) a x^(3k+2).  The first is removed with an even witness, the
    second is an odd multiple of a.
    """
    if k % 4 != 1:
        raise DomainError(f"special case applies to k = 1 (mod 4), got {k}")
    l = 3 * k + 2
    parts: list[Word] = [
        Pow(Comm(Gen(k + 2, alpha), Gen(k + 1, 1)), 3),
        Pow(Comm(Gen(k + 3, alpha), Gen(k, 1)), -1),
        even_witness(k, 3 * k + 1, C(k + 3, k) * alpha),
    ]
    return _fix_odd_multiple(parts, 3 * C(k + 2, k + 1), k, l, alpha)


def lemma_witness(k: int, l: int, alpha: int) -> Word:
    """A certificate worth ``x + a x^l + O(x^(l+1))`` for any l >= c_k."""
    c = c_bound(k)
    if l < c:
        raise BelowGuaranteeError(f"l = {l} is below c_{k} = {c}")
    if l % 2 == 0:
        return even_witness(k, l, alpha)
    if l >= 3 * k + 5:
        return odd_witness(k, l, alpha)
    r = k % 4
    if r == 3 and l == 3 * k + 2:
        return pair_witness(k, k + 4, k, alpha)
    if r == 3 and l == 3 * k + 4:
        return pair_witness(k, k + 4, k + 1, alpha)
    if r == 2 and l == 3 * k + 3:
        return pair_witness(k, k + 5, k, alpha)
    if r == 1 and l == 3 * k + 2:
        return special_witness(k, alpha)
    if r == 1 and l == 3 * k + 4:
        return pair_witness(k, k + 6, k, alpha)
    raise AssertionError(f"unhandled case k={k}, l={l}")  # pragma: no cover


def express_in_commutators(f: TruncatedSeries, k: int, n: int) -> Prod:
    """Write f (level >= c_k) as a product of witnesses from lemma_witness mod x^n.

    Peels the lowest term each round: r <- value(w)^-1 o r.  The level of r
    strictly increases, so at most n - c_k rounds run.
    """
    if f.trunc_order < n:
        raise PrecisionError(f"need f mod x^{n}, got mod x^{f.trunc_order}")
    c = c_bound(k)
    if lvl(f) < c:
        raise BelowGuaranteeError(f"level {lvl(f)} is below c_{k} = {c}")
    r = truncate(f, n)
    factors = []
    while lvl(r) < n:
        l = lvl(r)
        w = lemma_witness(k, l, r[l])
        factors.append(w)
        r = compose(inverse(evaluate(w, n)), r)
    return Prod(tuple(factors))


# --- JSON --------------------------------------------------------------------


def word_to_json(w: Word):
    if isinstance(w, Gen):
        return {"gen": [w.degree, str(w.coefficient)]}
    if isinstance(w, Comm):
        return {"comm": [word_to_json(w.left), word_to_json(w.right)]}
    if isinstance(w, Pow):
        return {"pow": [word_to_json(w.child), w.exponent]}
    return {"prod": [word_to_json(c) for c in w.children]}


def word_from_json(data) -> Word:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or len(data) != 1:
        raise ValueError(f"bad witness node: {data!r}")
    (kind, arg), = data.items()
    if kind == "gen":
        return Gen(int(arg[0]), int(arg[1]))
    if kind == "comm":
        return Comm(word_from_json(arg[0]), word_from_json(arg[1]))
    if kind == "pow":
        return Pow(word_from_json(arg[0]), int(arg[1]))
    if kind == "prod":
        return Prod(tuple(word_from_json(c) for c in arg))
    raise ValueError(f"unknown witness node kind {kind!r}")


def word_size(w: Word) -> int:
    """Number of nodes in the tree."""
    if isinstance(w, Gen):
        return 1
    if isinstance(w, Comm):
        return 1 + word_size(w.left) + word_size(w.right)
    if isinstance(w, Pow):
        return 1 + word_size(w.child)
    return 1 + sum(word_size(c) for c in w.children)
