"""Closed-form group law on J_k^{c_k} and Gamma_k for k >= 5.

Each function returns the degree-l coefficient as a ring expression in the
coefficient accessors ``A(i)`` and ``B(i)`` (plain ints for evaluation, or
polynomial-ring generators for symbolic checks).  Degrees that the band
formulas declare vanishing in Gamma_k return 0; the caller reduces odd
degrees >= d_k mod 2 and discards even ones.
"""
from __future__ import annotations

from math import comb
from typing import Callable

from ..errors import DomainError
from ..structure import bounds

Accessor = Callable[[int], object]


def _check(k: int, l: int):
    b = bounds(k)
    if k < 5:
        raise DomainError(f"the closed forms need k >= 5, got {k}")
    if not k <= l < b.c:
        raise DomainError(f"degree {l} outside {k}..{b.c - 1}")
    return b


def _linear(k, l, A, B, top):
    """sum_{i=k}^{top} i A_i B_{l-i+1}"""
    s = 0
    for i in range(k, top + 1):
        s = s + i * A(i) * B(l - i + 1)
    return s


def _type_c(k, c, L, A, B):
    """sum over l, i < j with l - 2 + i + j = L of l(l-1) A_l B_i B_j."""
    s = 0
    for l in range(k, c):
        for i in range(k, c):
            j = L + 2 - l - i
            if j > i and j < c:
                s = s + l * (l - 1) * A(l) * B(i) * B(j)
    return s


def theorem_gamma(k: int, l: int, A: Accessor, B: Accessor):
    """Exact degree-l coefficient of f o g in J_k^{c_k} (bands a-g)."""
    b = _check(k, l)
    base = A(l) + B(l)
    if l <= 2 * k - 2:
        return base
    if l <= 3 * k - 3:
        return base + _linear(k, l, A, B, l - k + 1)
    if l == 3 * k - 2:
        return base + _linear(k, l, A, B, 2 * k - 1) + comb(k, 2) * A(k) * B(k) ** 2
    if l == 3 * k - 1:
        return (base + _linear(k, l, A, B, 2 * k) + comb(k + 1, 2) * A(k + 1) * B(k) ** 2
                + k * (k - 1) * A(k) * B(k) * B(k + 1))
    if l == 3 * k:
        return (base + _linear(k, l, A, B, 2 * k + 1) + comb(k, 2) * A(k) * B(k + 1) ** 2
                + comb(k + 2, 2) * A(k + 2) * B(k) ** 2 + k * (k - 1) * A(k) * B(k) * B(k + 2)
                + (k + 1) * k * A(k + 1) * B(k) * B(k + 1))
    if l == 3 * k + 1 and k % 2 == 0:
        return (base + _linear(k, l, A, B, 2 * k + 2) + comb(k + 1, 2) * A(k + 1) * B(k + 1) ** 2
                + comb(k + 3, 2) * A(k + 3) * B(k) ** 2 + _type_c(k, b.c, l, A, B))
    if l == 3 * k + 2 and k % 4 == 0:
        return (base + _linear(k, l, A, B, 2 * k + 3) + comb(k, 2) * A(k) * B(k + 2) ** 2
                + comb(k + 2, 2) * A(k + 2) * B(k + 1) ** 2 + comb(k + 4, 2) * A(k + 4) * B(k) ** 2
                + _type_c(k, b.c, l, A, B))
    if l == 3 * k + 3 and k % 4 == 0:
        return (base + _linear(k, l, A, B, 2 * k + 4) + comb(k + 1, 2) * A(k + 1) * B(k + 2) ** 2
                + comb(k + 3, 2) * A(k + 3) * B(k + 1) ** 2 + comb(k + 5, 2) * A(k + 5) * B(k) ** 2
                + _type_c(k, b.c, l, A, B))
    raise AssertionError(f"no band for k={k}, l={l}")  # pragma: no cover


def gamma_coefficient(k: int, l: int, A: Accessor, B: Accessor):
    """Degree-l coefficient of f o g in Gamma_k (exact below d_k, else mod 2)."""
    b = _check(k, l)
    base = A(l) + B(l)
    even_k = k % 2 == 0
    if l <= 2 * k - 2:
        return base
    if l <= 3 * k - 3:
        if l >= b.d and l % 2 == 0:
            return 0
        return base + _linear(k, l, A, B, l - k + 1)
    if l == 3 * k - 2:
        if even_k:
            return 0
        return base + _linear(k, l, A, B, 2 * k - 1) + comb(k, 2) * A(k) * B(k) ** 2
    if l == 3 * k - 1:
        if not even_k:
            return 0
        return base + _linear(k, l, A, B, 2 * k) + comb(k + 1, 2) * A(k + 1) * B(k) ** 2
    if l == 3 * k:
        if even_k:
            return 0
        return (base + _linear(k, l, A, B, 2 * k + 1) + comb(k, 2) * A(k) * B(k + 1) ** 2
                + comb(k + 2, 2) * A(k + 2) * B(k) ** 2)
    if l == 3 * k + 1:
        return (base + _linear(k, l, A, B, 2 * k + 2) + comb(k + 1, 2) * A(k + 1) * B(k + 1) ** 2
                + comb(k + 3, 2) * A(k + 3) * B(k) ** 2)
    if l == 3 * k + 2:
        return 0
    if l == 3 * k + 3:
        return base + _linear(k, l, A, B, 2 * k + 4) + A(k + 3) * B(k + 1) ** 2
    raise AssertionError(f"no band for k={k}, l={l}")  # pragma: no cover


def inverse_coefficient(k: int, l: int, A: Accessor):
    """Degree-l coefficient of f^-1 in Gamma_k."""
    b = _check(k, l)
    even_k = k % 2 == 0
    if l <= 2 * k - 2:
        return -A(l)
    if l <= 3 * k - 3:
        if l >= b.d and l % 2 == 0:
            return 0
        return -A(l) + _linear(k, l, A, A, l - k + 1)
    if l == 3 * k - 2:
        if even_k:
            return 0
        return A(l) + _linear(k, l, A, A, 2 * k - 1) + (comb(k, 2) + 1) * A(k) ** 3
    if l == 3 * k - 1:
        if not even_k:
            return 0
        return A(l) + _linear(k, l, A, A, 2 * k) + comb(k + 1, 2) * A(k + 1) * A(k) ** 2
    if l == 3 * k:
        if even_k:
            return 0
        return (A(l) + _linear(k, l, A, A, 2 * k + 1) + comb(k, 2) * A(k) * A(k + 1) ** 2
                + (comb(k + 2, 2) + 1) * A(k + 2) * A(k) ** 2)
    if l == 3 * k + 1:
        return (A(l) + _linear(k, l, A, A, 2 * k + 2) + (comb(k + 1, 2) + 1) * A(k + 1) ** 3
                + comb(k + 3, 2) * A(k + 3) * A(k) ** 2)
    if l == 3 * k + 2:
        return 0
    if l == 3 * k + 3:
        return A(l) + _linear(k, l, A, A, 2 * k + 4)
    raise AssertionError(f"no band for k={k}, l={l}")  # pragma: no cover


def commutator_coefficient(k: int, l: int, A: Accessor, B: Accessor):
    """Degree-l coefficient of [f, g] in Gamma_k."""
    b = _check(k, l)
    even_k = k % 2 == 0
    if l <= 2 * k - 1:
        return 0
    if l <= 3 * k - 3:
        if l >= b.d:
            return 0
        s = 0
        for i in range(k, l - k + 2):
            s = s + (2 * i - l - 1) * A(i) * B(l - i + 1)
        return s
    if l == 3 * k - 2:
        return 0 if even_k else comb(k, 2) * (A(k) * B(k) ** 2 + B(k) * A(k) ** 2)
    if l == 3 * k - 1:
        return comb(k + 1, 2) * (A(k + 1) * B(k) ** 2 + B(k + 1) * A(k) ** 2) if even_k else 0
    if l == 3 * k:
        if even_k:
            return 0
        return (comb(k, 2) * (A(k) * B(k + 1) ** 2 + B(k) * A(k + 1) ** 2)
                + comb(k + 2, 2) * (A(k + 2) * B(k) ** 2 + B(k + 2) * A(k) ** 2))
    if l == 3 * k + 1:
        return comb(k + 3, 2) * (A(k + 3) * B(k) ** 2 + B(k + 3) * A(k) ** 2)
    if l == 3 * k + 2:
        return 0
    if l == 3 * k + 3:
        return A(k + 3) * B(k + 1) ** 2 + B(k + 3) * A(k + 1) ** 2
    raise AssertionError(f"no band for k={k}, l={l}")  # pragma: no cover
