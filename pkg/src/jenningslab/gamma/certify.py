"""Grid certification of coefficient identities in Gamma_k.

Every coefficient of f o g, f^-1 or [f, g] at degree l is an integer
polynomial in the input coefficients, weighted-homogeneous of weight l - 1
when the degree-i coefficient has weight i - 1.  So on J_k^{c_k} all of them
live in the span of monomials x^v with v . w <= c_k - 2.

Let L be a finite downward-closed set of exponent vectors containing the
supports of both sides of a claimed identity P = Q.

* Exact identities: the points L (as integer vectors) are unisolvent for
  span{x^v : v in L}; in the Newton basis prod_i prod_{j < v_i} (x_i - j)
  the evaluation matrix is triangular with diagonal prod v_i!.  Agreement on
  L therefore proves P = Q.
* Identities mod 2: P - Q mod 2 is a function of the parities only and
  equals a multilinear polynomial over F_2 whose monomials are supports of
  vectors in L.  Its coefficient on a support S is the alternating sum of
  its values at the 0/1 points below 1_S, all of which lie in L.  Agreement
  mod 2 on L again proves the identity.

Both sides are also compared symbolically, which gives the oracle
expression quoted in the discrepancy report.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import ZZ, sympify
from sympy.polys.rings import ring

from ..series import (
    TruncatedSeries,
    commutator,
    compose,
    compose_dense,
    inverse,
    inverse_dense,
)
from ..structure import bounds
from . import closed_form
from .tables import PRINTED_TABLES

OPERATIONS = ("compose", "inverse", "commutator")


@dataclass(frozen=True)
class SymbolicSetup:
    k: int
    operation: str
    ring: object
    names: tuple[str, ...]
    weights: tuple[int, ...]


@lru_cache(maxsize=None)
def setup(k: int, operation: str) -> SymbolicSetup:
    b = bounds(k)
    degs = list(range(k, b.c))
    names = [f"a{i}" for i in degs]
    weights = [i - 1 for i in degs]
    # a b-side is kept for the inverse so that printed slips naming b survive
    names += [f"b{i}" for i in degs]
    weights += [i - 1 for i in degs]
    R = ring(",".join(names), ZZ)[0]
    return SymbolicSetup(k, operation, R, tuple(names), tuple(weights))


def _gens(s: SymbolicSetup):
    g = dict(zip(s.names, s.ring.gens))
    b = bounds(s.k)

    def A(i):
        return g[f"a{i}"] if s.k <= i < b.c else 0

    def B(i):
        return g[f"b{i}"] if s.k <= i < b.c else 0

    return A, B


def is_low(k: int, l: int) -> bool:
    return l < bounds(k).d


def tracked_degrees(k: int) -> list[int]:
    """Degrees that carry data in Gamma_k."""
    b = bounds(k)
    return [l for l in range(k, b.c) if l < b.d or l % 2]


def mod2_multilinear(p):
    """Reduce coefficients mod 2 and exponents to {0, 1}."""
    bits: dict = {}
    for mon, c in p.terms():
        if c % 2:
            key = tuple(min(e, 1) for e in mon)
            bits[key] = bits.get(key, 0) ^ 1
    return p.ring({m: 1 for m, v in bits.items() if v})


def normalize(k: int, l: int, p):
    return p if is_low(k, l) else mod2_multilinear(p)


@lru_cache(maxsize=None)
def symbolic_oracle(k: int, operation: str) -> dict:
    """Oracle coefficients (normalized) for a generic representative."""
    s = setup(k, operation)
    A, B = _gens(s)
    c = bounds(k).c
    f = [0, 1] + [A(i) for i in range(2, c)]
    g = [0, 1] + [B(i) for i in range(2, c)]
    if operation == "compose":
        h = compose_dense(f, g)
    elif operation == "inverse":
        h = inverse_dense(f)
    else:
        h = compose_dense(compose_dense(f, g), compose_dense(inverse_dense(f), inverse_dense(g)))
    R = s.ring
    return {l: normalize(k, l, R(h[l])) for l in tracked_degrees(k)}


def closed_form_polys(k: int, operation: str) -> dict:
    """Closed forms as ring elements (k >= 5)."""
    s = setup(k, operation)
    A, B = _gens(s)
    R = s.ring
    out = {}
    for l in tracked_degrees(k):
        if operation == "compose":
            p = closed_form.gamma_coefficient(k, l, A, B)
        elif operation == "inverse":
            p = closed_form.inverse_coefficient(k, l, A)
        else:
            p = closed_form.commutator_coefficient(k, l, A, B)
        out[l] = R(p)
    return out


def theorem_polys(k: int) -> dict:
    """Exact composition theorem on J_k^{c_k}, every degree k .. c_k - 1."""
    s = setup(k, "compose")
    A, B = _gens(s)
    return {l: s.ring(closed_form.theorem_gamma(k, l, A, B)) for l in range(k, bounds(k).c)}


def printed_polys(k: int, operation: str) -> dict:
    s = setup(k, operation)
    table = PRINTED_TABLES[k][operation]
    out = {}
    for l in tracked_degrees(k):
        text = table.get(l, "0")
        out[l] = (text, s.ring(sympify(text)))
    return out


# --- grids -------------------------------------------------------------------


def lower_set_grid(weights, limit: int, extra=()) -> list[tuple[int, ...]]:
    """All v >= 0 with v . weights <= limit, plus the downward closure of ``extra``."""
    n = len(weights)
    pts = set()

    def rec(j, left, cur):
        if j == n:
            pts.add(tuple(cur))
            return
        x = 0
        while x * weights[j] <= left:
            cur.append(x)
            rec(j + 1, left - x * weights[j], cur)
            cur.pop()
            x += 1

    rec(0, limit, [])
    stack = [tuple(v) for v in extra]
    while stack:
        v = stack.pop()
        if v in pts:
            continue
        pts.add(v)
        for i, x in enumerate(v):
            if x:
                stack.append(v[:i] + (x - 1,) + v[i + 1:])
    return sorted(pts)


def _series_at(k: int, point, offset: int) -> TruncatedSeries:
    b = bounds(k)
    n = b.c - k
    return TruncatedSeries(b.c, {k + i: point[offset + i] for i in range(n)})


def _oracle_numeric(k: int, operation: str, point) -> TruncatedSeries:
    n = bounds(k).c - k
    f = _series_at(k, point, 0)
    if operation == "inverse":
        return inverse(f)
    g = _series_at(k, point, n)
    if operation == "compose":
        return compose(f, g)
    return commutator(f, g)


def _evaluator(p):
    terms = [(tuple((i, e) for i, e in enumerate(mon) if e), int(c)) for mon, c in p.terms()]

    def ev(pt):
        total = 0
        for mon, c in terms:
            t = c
            for i, e in mon:
                x = pt[i]
                if not x:
                    t = 0
                    break
                t *= x ** e
            total += t
        return total

    return ev


@dataclass
class DegreeCheck:
    k: int
    operation: str
    degree: int
    mode: str  # "exact" or "mod 2"
    hypothesis: str
    oracle: str
    grid_ok: bool
    symbolic_ok: bool

    @property
    def ok(self) -> bool:
        return self.grid_ok and self.symbolic_ok


@dataclass
class CertificationResult:
    k: int
    operation: str
    source: str
    grid_points: int
    checks: list[DegreeCheck] = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[DegreeCheck]:
        return [c for c in self.checks if not c.ok]


def certify(k: int, operation: str, hypotheses: dict, source: str,
            modes: dict | None = None) -> CertificationResult:
    """Check ``hypotheses[l] = (text, poly)`` against the oracle on a lower-set grid.

    ``modes`` overrides the comparison per degree (default: exact below
    d_k, mod 2 above).
    """
    t0 = time.perf_counter()
    s = setup(k, operation)
    oracle_sym = symbolic_oracle(k, operation) if modes is None else None
    extra = [mon for _, p in hypotheses.values() for mon, _ in p.terms()]
    grid = lower_set_grid(s.weights, bounds(k).c - 2, extra)
    evals = {l: _evaluator(p) for l, (_, p) in hypotheses.items()}
    exact = {l: (is_low(k, l) if modes is None else modes[l] == "exact") for l in hypotheses}
    bad = set()
    for pt in grid:
        value = _oracle_numeric(k, operation, pt)
        for l, ev in evals.items():
            if l in bad:
                continue
            d = ev(pt) - value[l]
            if (d != 0) if exact[l] else (d % 2 != 0):
                bad.add(l)
    res = CertificationResult(k, operation, source, len(grid))
    for l, (text, p) in hypotheses.items():
        if modes is None:
            ref = oracle_sym[l]
            sym_ok = normalize(k, l, p) == ref
            oracle_text = str(ref)
        else:
            ref = theorem_reference(k)[l]
            sym_ok = p == ref
            oracle_text = str(ref)
        res.checks.append(DegreeCheck(
            k, operation, l, "exact" if exact[l] else "mod 2",
            text, oracle_text, l not in bad, sym_ok,
        ))
    res.runtime_ms = (time.perf_counter() - t0) * 1000
    return res


@lru_cache(maxsize=None)
def theorem_reference(k: int) -> dict:
    s = setup(k, "compose")
    A, B = _gens(s)
    c = bounds(k).c
    f = [0, 1] + [A(i) for i in range(2, c)]
    g = [0, 1] + [B(i) for i in range(2, c)]
    h = compose_dense(f, g)
    return {l: s.ring(h[l]) for l in range(k, c)}


def certify_printed_table(k: int, operation: str) -> CertificationResult:
    return certify(k, operation, printed_polys(k, operation), "printed table")


def certify_closed_form(k: int, operation: str) -> CertificationResult:
    polys = closed_form_polys(k, operation)
    return certify(k, operation, {l: (str(p), p) for l, p in polys.items()}, "closed form")


def certify_theorem(k: int) -> CertificationResult:
    polys = theorem_polys(k)
    return certify(
        k, "compose", {l: (str(p), p) for l, p in polys.items()}, "composition theorem",
        modes={l: "exact" for l in polys},
    )


# --- report ------------------------------------------------------------------


def discrepancy_report(ks=(2, 3, 4), operations=OPERATIONS) -> dict:
    """Every printed-table coefficient that disagrees with the oracle."""
    entries, checked = [], 0
    for k in ks:
        for op in operations:
            res = certify_printed_table(k, op)
            checked += len(res.checks)
            for c in res.failures:
                entries.append({
                    "k": c.k,
                    "operation": c.operation,
                    "degree": c.degree,
                    "mode": c.mode,
                    "printed_expression": c.hypothesis,
                    "oracle_expression": c.oracle,
                })
    return {"checked": checked, "discrepancies": entries}


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
