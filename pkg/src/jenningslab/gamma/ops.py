"""Group law on Gamma_k.

For k >= 5 the closed forms of :mod:`jenningslab.gamma.closed_form` are
used directly.  For k in {2, 3, 4} the printed tables are not trusted (see
:mod:`jenningslab.gamma.tables`), so lift-compose-reduce is the law.
"""
from __future__ import annotations

from ..structure import bounds
from . import closed_form
from .element import (
    GammaElement,
    _same_k,
    oracle_commutator,
    oracle_compose,
    oracle_inverse,
)


def _accessor(a: GammaElement):
    return a.coefficient


def gamma_compose(a: GammaElement, b: GammaElement) -> GammaElement:
    _same_k(a, b)
    k = a.k
    if k < 5:
        return oracle_compose(a, b)
    A, B = _accessor(a), _accessor(b)
    return GammaElement.from_coefficients(k, lambda l: closed_form.gamma_coefficient(k, l, A, B))


def gamma_inverse(a: GammaElement) -> GammaElement:
    k = a.k
    if k < 5:
        return oracle_inverse(a)
    A = _accessor(a)
    return GammaElement.from_coefficients(k, lambda l: closed_form.inverse_coefficient(k, l, A))


def gamma_commutator(a: GammaElement, b: GammaElement) -> GammaElement:
    _same_k(a, b)
    k = a.k
    if k < 5:
        return oracle_commutator(a, b)
    A, B = _accessor(a), _accessor(b)
    return GammaElement.from_coefficients(k, lambda l: closed_form.commutator_coefficient(k, l, A, B))


def gamma_power(a: GammaElement, e: int) -> GammaElement:
    result = GammaElement.zero(a.k)
    base = a if e >= 0 else gamma_inverse(a)
    e = abs(e)
    while e:
        if e & 1:
            result = gamma_compose(result, base)
        e >>= 1
        if e:
            base = gamma_compose(base, base)
    return result


def in_commutator_image_degrees(a: GammaElement) -> bool:
    """Whether every coefficient below 2k vanishes."""
    return all(a.coefficient(i) == 0 for i in range(a.k, min(2 * a.k, bounds(a.k).c)))
