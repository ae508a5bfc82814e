"""H_1(J_k(Z)) computed from the finite nilpotent quotient J_k / J_{c_k}.

The quotient has the polycyclic generators sigma_i = x + x^i (k <= i < c_k);
each element has a unique ascending normal form
``sigma_k^a_k o ... o sigma_{c-1}^a_{c-1}``.  The conjugation relations
``sigma_j sigma_i = sigma_i sigma_j w_ij`` (w_ij the normal form of the
commutator, of level >= i + j - 1 > j) form a complete presentation, so

    H_1 = Z^(c_k - k) / <normal_form([sigma_i, sigma_j]) : i < j>.

Because J_{c_k}(Z) lies inside the derived subgroup, this is H_1(J_k(Z)).
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import DomainError, PrecisionError
from .series import INFINITE, TruncatedSeries, compose, inverse, lvl, truncate
from .snf import diagonal, row_lattice_basis, smith_normal_form
from .structure import bounds, c_bound, sigma


@dataclass(frozen=True)
class ExponentVector:
    """Normal-form exponents ``entries[i - k]`` of sigma_i, k <= i < window."""

    k: int
    entries: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        return self.entries[degree - self.k]

    @property
    def window(self) -> int:
        return self.k + len(self.entries)


@dataclass(frozen=True)
class AbelianStructure:
    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = tuple(sorted(self.invariant_factors))
        if any(x < 2 for x in f):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f"{f} is not a divisibility chain")
        object.__setattr__(self, "invariant_factors", f)

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.invariant_factors

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        counts: dict[int, int] = {}
        for d in self.invariant_factors:
            counts[d] = counts.get(d, 0) + 1
        for d in sorted(counts, reverse=True):
            parts.append(f"Z/{d}" if counts[d] == 1 else f"(Z/{d})^{counts[d]}")
        return " + ".join(parts) if parts else "0"


def normal_form(g: TruncatedSeries, k: int, window: int | None = None) -> ExponentVector:
    """Exponents a with sigma_k^a_k o ... o sigma_{w-1}^a_{w-1} = g mod x^w.

    ``window`` defaults to c_k.  Peels the lowest remaining degree by
    left-dividing by the matching power of sigma.
    """
    w = c_bound(k) if window is None else window
    if g.trunc_order < w:
        raise PrecisionError(f"normal form needs g mod x^{w}, got mod x^{g.trunc_order}")
    if lvl(g) < k:
        raise DomainError(f"level {lvl(g)} < {k}")
    r = truncate(g, w)
    entries = []
    for i in range(k, w):
        a = r[i]
        entries.append(a)
        if a:
            r = compose(sigma(i, w, -a), r)
    return ExponentVector(k, tuple(entries))


def from_normal_form(v: ExponentVector, window: int | None = None) -> TruncatedSeries:
    w = v.window if window is None else window
    acc = TruncatedSeries.identity(w)
    for i, a in enumerate(v.entries, start=v.k):
        if a:
            acc = compose(acc, sigma(i, w, a))
    return acc


@dataclass(frozen=True)
class RelationMatrix:
    k: int
    pairs: tuple[tuple[int, int], ...]
    rows: tuple[ExponentVector, ...]
    window: int

    def as_lists(self) -> list[list[int]]:
        return [list(r.entries) for r in self.rows]


@lru_cache(maxsize=None)
def _sigma_inverse(i: int, w: int) -> TruncatedSeries:
    return inverse(TruncatedSeries.monomial(i, 1, w))


def generator_commutator(i: int, j: int, w: int) -> TruncatedSeries:
    """[sigma_i, sigma_j] mod x^w, skipping the work when it is trivial."""
    if i + j - 1 >= w:
        return TruncatedSeries.identity(w)
    si = TruncatedSeries.monomial(i, 1, w)
    sj = TruncatedSeries.monomial(j, 1, w)
    return compose(compose(si, sj), compose(_sigma_inverse(i, w), _sigma_inverse(j, w)))


def relation_matrix(k: int, window: int | None = None) -> RelationMatrix:
    """Normal forms of [sigma_i, sigma_j] for k <= i < j < window (default c_k)."""
    bounds(k)
    w = c_bound(k) if window is None else window
    pairs, rows = [], []
    for i in range(k, w):
        for j in range(i + 1, w):
            pairs.append((i, j))
            rows.append(normal_form(generator_commutator(i, j, w), k, w))
    return RelationMatrix(k, tuple(pairs), tuple(rows), w)


class AbelianQuotient:
    """Z^n modulo a row lattice, with coordinates read off a Smith form.

    ``coordinates(v)`` maps a vector to its image in
    ``Z/d_1 + ... + Z/d_r + Z^(n - r)``.
    """

    def __init__(self, relations: list[list[int]], n: int):
        self.n = n
        basis = row_lattice_basis(relations, n)
        self.rank = len(basis)
        if basis:
            D, _, V = smith_normal_form(basis)
            self.diag = diagonal(D)
            self.V = V
        else:
            self.diag = []
            self.V = [[int(i == j) for j in range(n)] for i in range(n)]

    @cached_property
    def structure(self) -> AbelianStructure:
        return AbelianStructure(self.n - self.rank, tuple(d for d in self.diag if d > 1))

    def coordinates(self, vec) -> tuple[int, ...]:
        y = [sum(vec[i] * self.V[i][j] for i in range(self.n) if vec[i]) for j in range(self.n)]
        out = [y[j] % self.diag[j] for j in range(self.rank)]
        return tuple(out + y[self.rank:])

    def order(self, vec):
        """Order of the image of ``vec``; ``INFINITE`` if it has a free part."""
        y = self.coordinates(vec)
        if any(y[self.rank:]):
            return INFINITE
        o = 1
        for j in range(self.rank):
            d = self.diag[j]
            o = math.lcm(o, d // math.gcd(d, y[j]))
        return o


@dataclass
class AbelianizationResult:
    k: int
    window: int
    quotient: AbelianQuotient
    runtime_ms: float
    relations: RelationMatrix = field(repr=False)

    @property
    def structure(self) -> AbelianStructure:
        return self.quotient.structure

    def image(self, f: TruncatedSeries) -> tuple[int, ...]:
        return self.quotient.coordinates(normal_form(f, self.k, self.window).entries)

    def element_order(self, f: TruncatedSeries):
        return self.quotient.order(normal_form(f, self.k, self.window).entries)

    def generator_order(self, i: int):
        if not self.k <= i < self.window:
            raise DomainError(f"degree {i} outside {self.k}..{self.window - 1}")
        vec = [0] * (self.window - self.k)
        vec[i - self.k] = 1
        return self.quotient.order(vec)


@lru_cache(maxsize=None)
def compute_abelianization(k: int, window: int | None = None) -> AbelianizationResult:
    bounds(k)
    w = c_bound(k) if window is None else window
    t0 = time.perf_counter()
    rel = relation_matrix(k, w)
    quotient = AbelianQuotient(rel.as_lists(), w - k)
    quotient.structure
    ms = (time.perf_counter() - t0) * 1000
    return AbelianizationResult(k, w, quotient, ms, rel)


def abelianization(k: int) -> AbelianStructure:
    """Free rank and invariant factors of H_1(J_k(Z))."""
    return compute_abelianization(k).structure


def theorem_prediction(k: int) -> AbelianStructure:
    """Closed-form H_1(J_k(Z)) by the residue of k mod 4."""
    bounds(k)
    r = k % 4
    if r == 3:
        tors = [2] * ((k + 1) // 2)
    elif r == 2:
        tors = [2] * ((k + 2) // 2)
    elif r == 1:
        tors = [2] * ((k - 3) // 2) + [4]
    else:
        tors = [2] * ((k - 2) // 2) + [4]
    return AbelianStructure(k, tuple(tors))


def generator_image_order(k: int, i: int):
    """Order of the class of x + x^i in H_1(J_k(Z))."""
    return compute_abelianization(k).generator_order(i)


def psi(f: TruncatedSeries, k: int) -> tuple[int, ...]:
    """(a_k, ..., a_{2k-2}, k a_k^2 - 2 a_{2k-1}); additive on J_k / J_{2k}."""
    if f.trunc_order < 2 * k:
        raise PrecisionError(f"psi needs coefficients below x^{2 * k}")
    if lvl(f) < k:
        raise DomainError(f"level {lvl(f)} < {k}")
    head = tuple(f[i] for i in range(k, 2 * k - 1))
    return head + (k * f[k] ** 2 - 2 * f[2 * k - 1],)


def babenko_bogatyy_phi(f: TruncatedSeries) -> tuple[int, int, int, int]:
    """The abelianisation map of J(Z) onto Z + Z + Z/2 + Z/2."""
    if f.trunc_order < 8:
        raise PrecisionError("phi needs coefficients below x^8")
    a = f.__getitem__
    return (
        a(2),
        a(3) - a(2) ** 2,
        (a(4) + a(5) + a(3) * (a(3) + 1) // 2) % 2,
        (a(7) + a(5) * a(3) + a(5)) % 2,
    )


def phi_add(p, q) -> tuple[int, int, int, int]:
    return (p[0] + q[0], p[1] + q[1], (p[2] + q[2]) % 2, (p[3] + q[3]) % 2)


def report(k: int, orders: bool = True) -> dict:
    """JSON-ready summary of the computed H_1 against the closed form."""
    res = compute_abelianization(k)
    s = res.structure
    pred = theorem_prediction(k)
    out = {
        "k": k,
        "free_rank": s.free_rank,
        "invariant_factors": list(s.invariant_factors),
        "matches_theorem": s == pred,
        "runtime_ms": round(res.runtime_ms, 3),
    }
    if orders:
        out["generator_orders"] = {
            str(i): ("inf" if (o := res.generator_order(i)) == INFINITE else o)
            for i in range(k, res.window)
        }
    return out
