import pytest
from hypothesis import given, strategies as st

from jenningslab.errors import DomainError, PrecisionError
from jenningslab.gamma import (
    GammaElement,
    MultiIndex,
    enumerate_S,
    gamma_commutator,
    gamma_compose,
    gamma_inverse,
    high_odd_degrees,
    lift,
    low_degrees,
    multinomial_compose,
    reduce,
)
from jenningslab.gamma import certify
from jenningslab.gamma.element import oracle_commutator, oracle_compose, oracle_inverse
from jenningslab.gamma.ops import gamma_power, in_commutator_image_degrees
from jenningslab.gamma.tables import PRINTED_TABLES
from jenningslab.series import TruncatedSeries, compose, parse_series
from jenningslab.structure import bounds
from jenningslab.verify import brute_force_S_size

from strategies import series


@st.composite
def gamma_elements(draw, k):
    low = draw(st.lists(st.integers(-6, 6), min_size=len(low_degrees(k)), max_size=len(low_degrees(k))))
    n = len(high_odd_degrees(k))
    high = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    return GammaElement(k, tuple(low), tuple(high))


ks = st.integers(2, 11)


def test_reduce_example():
    a = reduce(parse_series("x + 7*x^13 + 3*x^14", 16), 5)
    assert not any(a.low)
    assert dict(zip(high_odd_degrees(5), a.high_odd)) == {13: 1, 15: 0}
    assert reduce(TruncatedSeries.identity(16), 5).is_zero()
    with pytest.raises(PrecisionError):
        reduce(TruncatedSeries.identity(15), 5)
    with pytest.raises(DomainError):
        reduce(parse_series("x + x^4", 16), 5)
    with pytest.raises(ValueError):
        GammaElement(5, (0,), ())


@given(ks.flatmap(lambda k: st.tuples(gamma_elements(k), gamma_elements(k))))
def test_ops_match_oracle(ab):
    a, b = ab
    assert gamma_compose(a, b) == oracle_compose(a, b)
    assert gamma_inverse(a) == oracle_inverse(a)
    assert gamma_commutator(a, b) == oracle_commutator(a, b)


@given(ks.flatmap(lambda k: st.tuples(gamma_elements(k), gamma_elements(k), gamma_elements(k))))
def test_group_axioms(abc):
    a, b, c = abc
    zero = GammaElement.zero(a.k)
    assert gamma_compose(a, zero) == a == gamma_compose(zero, a)
    assert gamma_compose(a, gamma_inverse(a)) == zero
    assert gamma_compose(gamma_compose(a, b), c) == gamma_compose(a, gamma_compose(b, c))
    assert gamma_commutator(a, a) == zero
    assert in_commutator_image_degrees(gamma_commutator(a, b))
    assert gamma_power(a, -2) == gamma_inverse(gamma_compose(a, a))


@given(st.integers(2, 9), st.data())
def test_reduce_is_well_defined(k, data):
    b = bounds(k)
    f = data.draw(series(n=b.c, k=k))
    hc = data.draw(st.dictionaries(st.integers(b.d, b.c - 1), st.integers(-3, 3)))
    h = TruncatedSeries(b.c, {i: v * (2 if i % 2 else 1) for i, v in hc.items()})
    assert reduce(compose(f, h), k) == reduce(f, k) == reduce(compose(h, f), k)
    assert reduce(lift(reduce(f, k)), k) == reduce(f, k)


@pytest.mark.parametrize("k", range(5, 10))
def test_closed_forms_certified(k):
    for op in certify.OPERATIONS:
        res = certify.certify_closed_form(k, op)
        assert res.ok, [(c.degree, c.hypothesis, c.oracle) for c in res.failures]
    assert certify.certify_theorem(k).ok


def test_certification_catches_a_wrong_identity():
    k = 5
    polys = dict(certify.closed_form_polys(k, "compose"))
    s = certify.setup(k, "compose")
    A, B = certify._gens(s)
    l = 9
    polys[l] = polys[l] + A(5) * B(5)
    res = certify.certify(k, "compose", {d: (str(p), p) for d, p in polys.items()}, "tampered")
    assert [c.degree for c in res.failures] == [l]
    assert not res.failures[0].grid_ok


def test_lower_set_grid_is_downward_closed():
    pts = set(certify.lower_set_grid((1, 2, 3), 6, extra=[(0, 0, 4)]))
    assert (0, 0, 4) in pts and (0, 0, 3) in pts
    for v in pts:
        for i, x in enumerate(v):
            if x:
                assert v[:i] + (x - 1,) + v[i + 1:] in pts


def test_mod2_multilinear():
    s = certify.setup(2, "compose")
    A, B = certify._gens(s)
    p = A(2) ** 2 * B(3) + 3 * A(2) * B(3) + 2 * B(4)
    assert certify.mod2_multilinear(p) == s.ring(0)


def test_discrepancy_report():
    rep = certify.discrepancy_report()
    n_entries = sum(len(certify.tracked_degrees(k)) for k in (2, 3, 4)) * 3
    assert rep["checked"] == n_entries
    found = {(d["k"], d["operation"], d["degree"]) for d in rep["discrepancies"]}
    assert found == {(3, "compose", 3), (4, "inverse", 11), (4, "inverse", 13), (4, "commutator", 11)}
    for d in rep["discrepancies"]:
        assert d["printed_expression"] == PRINTED_TABLES[d["k"]][d["operation"]][d["degree"]]
        assert d["printed_expression"] != d["oracle_expression"]


def test_multi_index():
    with pytest.raises(ValueError):
        MultiIndex(5, (1, 2))
    mi = enumerate_S(5, 5)[0]
    assert mi.classify() == "pure" and mi.weight == 5 and mi.multinomial == 1
    with pytest.raises(DomainError):
        enumerate_S(3, 5)


@pytest.mark.parametrize("k", range(2, 9))
def test_S_sizes_against_expansion(k):
    for l in range(k, bounds(k).c):
        assert len(enumerate_S(l, k)) == brute_force_S_size(l, k)


@pytest.mark.parametrize("k", range(5, 10))
def test_S_types_and_bounds(k):
    low = {"A": 2 * k - 1, "B": 3 * k - 2, "C": 3 * k - 1}
    for l in range(k, bounds(k).c):
        for mi in enumerate_S(l, k):
            t = mi.classify()
            assert t is not None
            if t in low:
                assert mi.weight >= low[t]


@given(st.integers(2, 9), st.data())
def test_multinomial_compose(k, data):
    c = bounds(k).c
    f, g = data.draw(series(n=c, k=k)), data.draw(series(n=c, k=k))
    assert multinomial_compose(f, g, k) == compose(f, g)
