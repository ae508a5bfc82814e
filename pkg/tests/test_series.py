import pytest
from hypothesis import given, strategies as st

from jenningslab.errors import OrderMismatchError, PrecisionError, SeriesParseError
from jenningslab.series import (
    INFINITE,
    TruncatedSeries,
    commutator,
    compose,
    compose_dense,
    format_series,
    in_subgroup,
    inverse,
    lvl,
    parse_series,
    power,
    series_from_json,
    series_to_json,
    truncate,
)

from strategies import series, series_pair, series_triple


def naive_compose(f, g):
    """Reference composition: expand sum a_d g^d with plain polynomial products."""
    n = f.trunc_order
    gd = g.dense()
    gd[1] = 1

    def mul(p, q):
        out = [0] * n
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q[: n - i]):
                    out[i + j] += a * b
        return out

    fd = f.dense()
    fd[1] = 1
    result = [0] * n
    pw = [1] + [0] * (n - 1)
    for d in range(1, n):
        pw = mul(pw, gd)
        for i in range(n):
            result[i] += fd[d] * pw[i]
    return TruncatedSeries.from_dense(result)


def test_examples():
    f = parse_series("x + x^2", trunc=5)
    g = parse_series("x + x^3", trunc=5)
    assert format_series(compose(f, g)) == "x + x^2 + x^3 + 2*x^4 (mod x^5)"
    assert format_series(inverse(parse_series("x + x^2", trunc=4))) == "x - x^2 + 2*x^3 (mod x^4)"
    assert format_series(power(parse_series("x + x^3", trunc=6), 2)) == "x + 2*x^3 + 3*x^5 (mod x^6)"
    c = commutator(parse_series("x + x^3", trunc=6), parse_series("x + x^2", trunc=6))
    assert format_series(c) == "x + x^4 - x^5 (mod x^6)"


def test_level_and_identity():
    assert lvl(TruncatedSeries.identity(9)) == INFINITE
    assert lvl(parse_series("x + 3*x^5 - x^7 (mod x^9)")) == 5
    assert in_subgroup(TruncatedSeries.identity(4), 100)
    with pytest.raises(ValueError):
        TruncatedSeries(5, {1: 2})


def test_order_mismatch_names_both_orders():
    with pytest.raises(OrderMismatchError, match="5 vs 6"):
        compose(TruncatedSeries.identity(5), TruncatedSeries.identity(6))


def test_precision_is_never_invented():
    f = parse_series("x + x^2 (mod x^4)")
    with pytest.raises(PrecisionError):
        truncate(f, 6)
    with pytest.raises(PrecisionError):
        f[4]
    assert truncate(parse_series("x + x^2 + x^5 (mod x^8)"), 4) == f


@pytest.mark.parametrize("text", [
    "x + 1", "2*x", "x + x^2 x^3", "x +", "", "x + y^2",
])
def test_parse_rejects(text):
    with pytest.raises(SeriesParseError):
        parse_series(text, trunc=6)


def test_parse_forms():
    f = parse_series("x - 2*x^3 + x^3 + 4x^5 (mod x^5)")
    assert f.coeffs == {3: -1}
    assert parse_series("x+x^2", trunc=3) == parse_series("x + x^2 (mod x^3)")
    with pytest.raises(SeriesParseError):
        parse_series("x + x^2 (mod x^5)", trunc=6)
    j = series_to_json(parse_series("x + 2*x^3 (mod x^7)"))
    assert j == {"trunc": 7, "coeffs": {"3": "2"}}
    assert parse_series('{"trunc": 7, "coeffs": {"3": "2"}}') == series_from_json(j)


@given(series_pair())
def test_compose_matches_naive(fg):
    f, g = fg
    assert compose(f, g) == naive_compose(f, g)


@given(series_triple())
def test_associative(fgh):
    f, g, h = fgh
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(series())
def test_inverse_both_sides(f):
    x = TruncatedSeries.identity(f.trunc_order)
    assert compose(f, inverse(f)) == x
    assert compose(inverse(f), f) == x
    assert inverse(inverse(f)) == f


@given(series(), st.integers(-5, 5), st.integers(-5, 5))
def test_power_laws(f, a, b):
    assert compose(power(f, a), power(f, b)) == power(f, a + b)
    assert power(power(f, a), b) == power(f, a * b)


@given(series_pair())
def test_commutator_identity(fg):
    f, g = fg
    assert compose(compose(commutator(f, g), g), f) == compose(f, g)
    assert commutator(f, f).is_identity()
    assert compose(commutator(f, g), commutator(g, f)).is_identity()


@given(st.integers(2, 5).flatmap(lambda k: st.tuples(st.just(k), series_pair(k=k, max_n=4 * k))))
def test_commutator_level_at_least_2k(kfg):
    k, (f, g) = kfg
    assert lvl(commutator(f, g)) >= 2 * k


@given(series_pair())
def test_level_of_product(fg):
    f, g = fg
    assert lvl(compose(f, g)) >= min(lvl(f), lvl(g))


@given(series(bound=1000))
def test_round_trip_text_and_json(f):
    assert parse_series(format_series(f)) == f
    assert series_from_json(series_to_json(f)) == f


def test_big_coefficients_stay_exact():
    f = TruncatedSeries(12, {2: 10**30, 5: -(10**40)})
    assert compose(f, inverse(f)).is_identity()


def test_compose_dense_accepts_generic_rings():
    from fractions import Fraction
    out = compose_dense([0, 1, Fraction(1, 2), 0], [0, 1, 0, Fraction(1, 3)])
    assert out == [0, 0, Fraction(1, 2), Fraction(1, 3)]
