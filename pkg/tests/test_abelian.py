import random

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors

from jenningslab import abelian
from jenningslab.abelian import (
    AbelianQuotient,
    AbelianStructure,
    ExponentVector,
    abelianization,
    babenko_bogatyy_phi,
    compute_abelianization,
    from_normal_form,
    normal_form,
    phi_add,
    psi,
    relation_matrix,
    theorem_prediction,
)
from jenningslab.errors import DomainError
from jenningslab.series import INFINITE, TruncatedSeries, commutator, compose, parse_series
from jenningslab.structure import c_bound, quotient_equal, sigma

from strategies import series, series_pair

# H_1(J_k(Z)) as stated in the source, for the first seven k
STATED = {
    2: (2, (2, 2)), 3: (3, (2, 2)), 4: (4, (2, 4)), 5: (5, (2, 4)),
    6: (6, (2, 2, 2, 2)), 7: (7, (2, 2, 2, 2)), 8: (8, (2, 2, 2, 4)),
}


@pytest.mark.parametrize("k", sorted(STATED))
def test_stated_values(k):
    rank, tors = STATED[k]
    assert abelianization(k) == AbelianStructure(rank, tors)
    assert theorem_prediction(k) == AbelianStructure(rank, tors)


@pytest.mark.parametrize("k", range(2, 8))
def test_relation_matrix_against_sympy(k):
    M = Matrix(relation_matrix(k).as_lists())
    facts = [int(x) for x in invariant_factors(M)]
    n = c_bound(k) - k
    rank = n - sum(1 for x in facts if x)
    assert AbelianStructure(rank, tuple(x for x in facts if x > 1)) == abelianization(k)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_wider_window_is_stable(k):
    # past c_k every generator is a product of commutators, so the group
    # computed on a wider window must not change
    assert compute_abelianization(k, c_bound(k) + 3).structure == abelianization(k)


def test_structure_strings():
    assert str(AbelianStructure(8, (4, 2, 2, 2))) == "Z^8 + Z/4 + (Z/2)^3"
    assert str(AbelianStructure(0, ())) == "0"
    with pytest.raises(ValueError):
        AbelianStructure(1, (2, 3))


def test_normal_form_basics():
    assert normal_form(sigma(3, 10), 3, 10).entries == (1,) + (0,) * 6
    assert normal_form(TruncatedSeries.identity(10), 3, 10).entries == (0,) * 7
    with pytest.raises(DomainError):
        normal_form(parse_series("x + x^2", 10), 3, 10)


@given(series(n=10, k=3))
def test_normal_form_round_trip(f):
    v = normal_form(f, 3, 10)
    assert from_normal_form(v) == f


def test_quotient_orders():
    q = AbelianQuotient([[2, 0, 0], [0, 4, 0]], 3)
    assert str(q.structure) == "Z^1 + Z/4 + Z/2"
    assert q.order([1, 0, 0]) == 2
    assert q.order([0, 2, 0]) == 2
    assert q.order([0, 0, 1]) == INFINITE
    assert q.order([2, 4, 0]) == 1


def test_generator_orders_k2():
    res = compute_abelianization(2)
    orders = [res.generator_order(i) for i in range(2, 8)]
    assert orders[:2] == [INFINITE, INFINITE]
    assert all(o in (1, 2) for o in orders[2:])
    with pytest.raises(DomainError):
        res.generator_order(9)


def test_report_json():
    r = abelian.report(2)
    assert r["matches_theorem"] and r["invariant_factors"] == [2, 2]
    assert r["generator_orders"]["2"] == "inf"


def test_psi_and_phi_examples():
    assert psi(parse_series("x + x^2 + x^3", 4), 2) == (1, 0)
    assert psi(TruncatedSeries.identity(8), 4) == (0, 0, 0, 0)
    assert babenko_bogatyy_phi(TruncatedSeries.identity(8)) == (0, 0, 0, 0)
    assert babenko_bogatyy_phi(parse_series("x + x^2", 8)) == (1, -1, 0, 0)
    assert babenko_bogatyy_phi(parse_series("x + x^3", 8)) == (0, 1, 1, 0)


@given(series_pair(max_n=8).filter(lambda p: p[0].trunc_order == 8))
def test_phi_homomorphism(fg):
    f, g = fg
    phi = babenko_bogatyy_phi
    assert phi(compose(f, g)) == phi_add(phi(f), phi(g))
    assert phi(commutator(f, g)) == (0, 0, 0, 0)


@given(st.integers(2, 7), st.data())
def test_psi_additive_and_kernel(k, data):
    f = data.draw(series(n=2 * k, k=k))
    g = data.draw(series(n=2 * k, k=k))
    s = tuple(a + b for a, b in zip(psi(f, k), psi(g, k)))
    assert psi(compose(f, g), k) == s
    if psi(f, k) == (0,) * k:
        assert quotient_equal(f, TruncatedSeries.identity(2 * k), k, 2 * k)


def test_phi_on_random_series_matches_h1():
    # phi factors through H_1(J_2); generators of infinite order map to free slots
    rng = random.Random(0)
    res = compute_abelianization(2)
    for _ in range(50):
        f = TruncatedSeries(8, {i: rng.randint(-3, 3) for i in range(2, 8)})
        if res.element_order(f) == 1:
            assert babenko_bogatyy_phi(f) == (0, 0, 0, 0)
