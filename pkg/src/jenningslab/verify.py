"""Invariant suites, runnable from the command line and from the tests.

Each suite takes ``seed`` and ``trials`` and returns a :class:`SuiteReport`;
an empty failure list means every check passed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb

from . import abelian
from .errors import PairNotFoundError
from .gamma import certify
from .gamma.element import (
    GammaElement,
    high_odd_degrees,
    lift,
    low_degrees,
    oracle_commutator,
    oracle_compose,
    oracle_inverse,
    reduce,
)
from .gamma.multinomial import enumerate_S, multinomial_compose
from .gamma.ops import gamma_commutator, gamma_compose, gamma_inverse
from .gamma.tables import PRINTED_TORSION
from .series import (
    INFINITE,
    TruncatedSeries,
    commutator,
    compose,
    format_series,
    inverse,
    lvl,
    parse_series,
    power,
)
from .snf import determinant
from .structure import C, bounds, c_bound, find_useful_pair, residue_useful_pair
from .witness import check_witness, evaluate, express_in_commutators, lemma_witness

SUITES = ("core", "witness", "gamma", "appendix", "abelianization", "phi", "psi")


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    runtime_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, **info):
        self.cases += 1
        if not cond:
            self.failures.append({k: _jsonable(v) for k, v in info.items()})

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "runtime_ms": round(self.runtime_ms, 3),
            **({"notes": self.notes} if self.notes else {}),
        }

    def summary(self) -> str:
        return f"{self.suite}: {self.cases} cases, {len(self.failures)} failures ({self.runtime_ms:.0f} ms)"


def _jsonable(v):
    if isinstance(v, TruncatedSeries):
        return format_series(v)
    if isinstance(v, GammaElement):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if v == INFINITE:
        return "inf"
    return v if isinstance(v, (int, str, bool, float, type(None), dict)) else repr(v)


def random_series(rng: random.Random, k: int, n: int, bound: int = 5, density: float = 1.0) -> TruncatedSeries:
    """Uniform coefficients in [-bound, bound] on degrees k..n-1."""
    return TruncatedSeries(n, {
        i: rng.randint(-bound, bound) for i in range(k, n) if rng.random() < density
    })


def random_gamma(rng: random.Random, k: int, bound: int = 5) -> GammaElement:
    return GammaElement(
        k,
        tuple(rng.randint(-bound, bound) for _ in low_degrees(k)),
        tuple(rng.randint(0, 1) for _ in high_odd_degrees(k)),
    )


# --- suites ------------------------------------------------------------------


def suite_core(seed: int = 0, trials: int = 200) -> SuiteReport:
    rep = SuiteReport("core")
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(3, 16)
        f, g, h = (random_series(rng, 2, n, density=0.7) for _ in range(3))
        x = TruncatedSeries.identity(n)
        rep.check(compose(compose(f, g), h) == compose(f, compose(g, h)), law="associativity", f=f, g=g, h=h)
        rep.check(compose(f, inverse(f)) == x and compose(inverse(f), f) == x, law="inverse", f=f)
        rep.check(compose(f, x) == f and compose(x, f) == f, law="identity", f=f)
        rep.check(compose(commutator(f, g), compose(g, f)) == compose(f, g), law="commutator", f=f, g=g)
        rep.check(parse_series(format_series(f)) == f, law="round-trip", f=f)
        e1, e2 = rng.randint(-4, 4), rng.randint(-4, 4)
        rep.check(power(f, e1 + e2) == compose(power(f, e1), power(f, e2)), law="power", f=f, e=(e1, e2))
        k = rng.randint(2, 6)
        n = 4 * k + 2
        f, g = random_series(rng, k, n), random_series(rng, k, n)
        rep.check(lvl(commutator(f, g)) >= 2 * k, law="containment", k=k, f=f, g=g)
    check_leading_terms(rep)
    return rep


def check_leading_terms(rep: SuiteReport, top: int = 12):
    """[x + a x^m, x + b x^n] = x + (m-n) ab x^(m+n-1) + C(m,n) ab^2 x^(m+2n-2) + ...

    For monomials nothing else appears below x^(m+2n-1), so the check is
    exact through that degree.
    """
    for m in range(3, top + 1):
        for n in range(2, m):
            s, l = m + n - 1, m + 2 * (n - 1)
            for a in range(-2, 3):
                for b in range(-2, 3):
                    v = commutator(TruncatedSeries.monomial(m, a, l + 1), TruncatedSeries.monomial(n, b, l + 1))
                    expect = {s: (m - n) * a * b, l: C(m, n) * a * b * b}
                    ok = all(v[i] == expect.get(i, 0) for i in range(2, l + 1))
                    rep.check(ok, law="leading terms", m=m, n=n, alpha=a, beta=b, value=v)


def suite_witness(seed: int = 0, trials: int = 200, ks=range(2, 11), samples: int | None = None) -> SuiteReport:
    rep = SuiteReport("witness")
    rng = random.Random(seed)
    samples = max(1, trials // 4) if samples is None else samples
    for k in ks:
        c = c_bound(k)
        for l in range(c, c + 7):
            for a in (-3, -2, -1, 1, 2, 3):
                r = check_witness(lemma_witness(k, l, a), k, l + 1)
                rep.check(r.valid and r.target_degree == l and r.target_coefficient == a,
                          check="lemma", k=k, l=l, alpha=a, value=r.value, reason=r.reason)
        N = c + 10
        for _ in range(samples):
            f = random_series(rng, c, N)
            w = express_in_commutators(f, k, N)
            rep.check(evaluate(w, N) == f and check_witness(w, k, N).valid or f.is_identity(),
                      check="round-trip", k=k, f=f)
        for l in range(c | 1, c + 30, 2):
            try:
                pair = find_useful_pair(l, k)
                rep.check(pair.is_k_useful() and pair.has_odd_C() and pair.level == l,
                          check="useful pair", k=k, l=l)
            except PairNotFoundError:
                rep.check(k % 4 == 1 and l == 3 * k + 2, check="useful pair missing", k=k, l=l)
            try:
                p2 = residue_useful_pair(l, k)
                rep.check(p2.is_k_useful() and p2.has_odd_C() and p2.level == l,
                          check="residue pair", k=k, l=l)
            except PairNotFoundError:
                rep.check(l < 3 * k + 5, check="residue pair missing", k=k, l=l)
    return rep


def suite_gamma(seed: int = 0, trials: int = 200, ks=range(2, 10)) -> SuiteReport:
    rep = SuiteReport("gamma")
    rng = random.Random(seed)
    per_k = max(1, trials // len(ks))
    for k in ks:
        b = bounds(k)
        zero = GammaElement.zero(k)
        for _ in range(per_k):
            a, g = random_gamma(rng, k), random_gamma(rng, k)
            rep.check(gamma_compose(a, g) == oracle_compose(a, g), op="compose", k=k, a=a, b=g)
            rep.check(gamma_inverse(a) == oracle_inverse(a), op="inverse", k=k, a=a)
            comm = gamma_commutator(a, g)
            rep.check(comm == oracle_commutator(a, g), op="commutator", k=k, a=a, b=g)
            rep.check(gamma_compose(a, gamma_inverse(a)) == zero, op="a o a^-1", k=k, a=a)
            rep.check(all(comm.coefficient(i) == 0 for i in range(k, 2 * k)), op="image >= 2k", k=k)
            # well-definedness: any H_k representative gives the same class
            h = TruncatedSeries(b.c, {
                i: rng.randint(-4, 4) * (1 if i % 2 == 0 else 2) for i in range(b.d, b.c)
            })
            f = lift(a)
            rep.check(reduce(compose(f, h), k) == a and reduce(compose(h, f), k) == a,
                      op="coset", k=k, a=a, h=h)
    report = certify.discrepancy_report()
    rep.notes["printed_entries_checked"] = report["checked"]
    rep.notes["discrepancies"] = report["discrepancies"]
    for k, tors in PRINTED_TORSION.items():
        rep.check(abelian.abelianization(k).invariant_factors == tors, op="printed torsion", k=k)
    return rep


def suite_appendix(seed: int = 0, trials: int = 200, ks=range(5, 10)) -> SuiteReport:
    rep = SuiteReport("appendix")
    rng = random.Random(seed)
    for k in ks:
        res = certify.certify_theorem(k)
        for c in res.checks:
            rep.check(c.ok, cert="theorem", k=k, degree=c.degree, hypothesis=c.hypothesis, oracle=c.oracle)
        for op in certify.OPERATIONS:
            res = certify.certify_closed_form(k, op)
            for c in res.checks:
                rep.check(c.ok, cert=op, k=k, degree=c.degree, hypothesis=c.hypothesis, oracle=c.oracle)
        check_S_classification(rep, k)
        c = c_bound(k)
        for _ in range(max(1, trials // len(ks))):
            f, g = random_series(rng, k, c), random_series(rng, k, c)
            rep.check(multinomial_compose(f, g, k) == compose(f, g), cert="multinomial", k=k, f=f, g=g)
    return rep


def check_S_classification(rep: SuiteReport, k: int):
    """Types A/B/C exhaust S_{l,k} and respect the weight bounds."""
    c = c_bound(k)
    low = {"A": 2 * k - 1, "B": 3 * k - 2, "C": 3 * k - 1}
    for l in range(k, c):
        members = enumerate_S(l, k)
        rep.check(len(members) == brute_force_S_size(l, k), cert="S size", k=k, l=l)
        for mi in members:
            t = mi.classify()
            ok = t is not None and mi.weight < c and mi.size == l
            if t in low:
                ok = ok and mi.weight >= low[t]
            if t == "pure":
                ok = ok and mi.weight == l
            ok = ok and len(mi.tail) <= 2
            rep.check(ok, cert="S type", k=k, l=l, v=list(mi.v), type=t)


def brute_force_S_size(l: int, k: int) -> int:
    """|S_{l,k}| from expanding (x + sum y_j x^j)^l and counting monomials."""
    c = c_bound(k)
    # state: map from (x-degree, tail exponent tuple) kept sparse by dict
    cur = {(0, ()): 1}
    for _ in range(l):
        nxt = {}
        for (deg, tail), _v in cur.items():
            if deg + 1 < c:
                nxt[(deg + 1, tail)] = 1
            for j in range(k, c):
                if deg + j < c:
                    t = tuple(sorted(tail + (j,)))
                    nxt[(deg + j, t)] = 1
        cur = nxt
    return len(cur)


def suite_abelianization(seed: int = 0, trials: int = 200, ks=range(2, 17)) -> SuiteReport:
    rep = SuiteReport("abelianization")
    for k in ks:
        s, p = abelian.abelianization(k), abelian.theorem_prediction(k)
        rep.check(s == p, check="theorem", k=k, computed=str(s), predicted=str(p))
        if k <= 12:
            check_generator_orders(rep, k)
    return rep


def check_generator_orders(rep: SuiteReport, k: int):
    c = c_bound(k)
    res = abelian.compute_abelianization(k)
    o = {i: res.generator_order(i) for i in range(k, c)}
    rep.check(o[c - 1] != 1, check="optimality of c_k", k=k, order=o[c - 1])
    for i in range(k, c):
        rep.check((o[i] == INFINITE) == (i < 2 * k), check="infinite iff i < 2k", k=k, i=i, order=o[i])
        if i % 2 == 0 and i >= 2 * k + 4:
            rep.check(o[i] == 1, check="even degree vanishes", k=k, i=i, order=o[i])
        if i % 2 == 1 and i >= 2 * k + 5:
            rep.check(o[i] in (1, 2), check="odd degree order <= 2", k=k, i=i, order=o[i])
    if 2 * k + 3 < c:
        allowed = (1, 2, 4) if k % 4 == 0 else (1, 2)
        rep.check(o[2 * k + 3] in allowed, check="degree 2k+3", k=k, order=o[2 * k + 3])
    allowed = (1, 2) if k % 4 == 3 else (1, 2, 4)
    rep.check(o[2 * k + 1] in allowed, check="degree 2k+1", k=k, order=o[2 * k + 1])


def suite_phi(seed: int = 0, trials: int = 200) -> SuiteReport:
    rep = SuiteReport("phi")
    rng = random.Random(seed)
    phi = abelian.babenko_bogatyy_phi
    for _ in range(trials):
        f, g = random_series(rng, 2, 8), random_series(rng, 2, 8)
        rep.check(phi(compose(f, g)) == abelian.phi_add(phi(f), phi(g)), check="homomorphism", f=f, g=g)
        rep.check(phi(commutator(f, g)) == (0, 0, 0, 0), check="kills commutators", f=f, g=g)
    # components agree with the computed H_1(J_2) = Z^2 + (Z/2)^2
    rep.check(str(abelian.abelianization(2)) == "Z^2 + (Z/2)^2", check="H_1(J_2)")
    images = [phi(TruncatedSeries.monomial(i, 1, 8)) for i in range(2, 8)]
    res = abelian.compute_abelianization(2)
    for i, v in zip(range(2, 8), images):
        o = INFINITE if (v[0] or v[1]) else (2 if (v[2] or v[3]) else 1)
        rep.check(o == res.generator_order(i), check="generator order", degree=i, image=list(v),
                  order=res.generator_order(i))
    # onto Z + Z + Z/2 + Z/2: images plus the torsion relations span Z^4
    rows = [list(v) for v in images] + [[0, 0, 2, 0], [0, 0, 0, 2]]
    q = abelian.AbelianQuotient(rows, 4).structure
    rep.check(q.free_rank == 0 and not q.invariant_factors, check="surjective", cokernel=str(q))
    return rep


def suite_psi(seed: int = 0, trials: int = 200, ks=range(2, 11)) -> SuiteReport:
    rep = SuiteReport("psi")
    rng = random.Random(seed)
    for k in ks:
        n = 2 * k
        for _ in range(max(1, trials // len(ks))):
            f, g = random_series(rng, k, n), random_series(rng, k, n)
            s = [a + b for a, b in zip(abelian.psi(f, k), abelian.psi(g, k))]
            rep.check(list(abelian.psi(compose(f, g), k)) == s, check="additive", k=k, f=f, g=g)
        # kernel: only the identity of J_k^{2k} maps to 0, checked on a box
        for _ in range(max(1, trials // len(ks))):
            f = random_series(rng, k, n, bound=2)
            rep.check((abelian.psi(f, k) == (0,) * k) == f.is_identity(), check="kernel", k=k, f=f)
        rows = [list(abelian.psi(TruncatedSeries.monomial(i, 1, n), k)) for i in range(k, n)]
        rep.check(abs(determinant(rows)) == 2, check="index 2", k=k, det=determinant(rows))
    return rep


SUITE_FUNCS = {
    "core": suite_core,
    "witness": suite_witness,
    "gamma": suite_gamma,
    "appendix": suite_appendix,
    "abelianization": suite_abelianization,
    "phi": suite_phi,
    "psi": suite_psi,
}


def run_suite(name: str, seed: int = 0, trials: int = 200) -> SuiteReport:
    if name not in SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    t0 = time.perf_counter()
    rep = SUITE_FUNCS[name](seed=seed, trials=trials)
    rep.runtime_ms = (time.perf_counter() - t0) * 1000
    return rep


def run_suites(name: str, seed: int = 0, trials: int = 200) -> list[SuiteReport]:
    names = SUITES if name == "all" else (name,)
    return [run_suite(n, seed, trials) for n in names]
