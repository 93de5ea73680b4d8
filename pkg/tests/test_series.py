import random
from fractions import Fraction

import pytest

from curvelab.errors import InputError
from curvelab.series import (
    ChernPolynomial,
    TruncatedSeries,
    assemble_series,
    aut_count,
    exp_series,
    extract_universal,
    format_rational,
    log_series,
    parse_rational,
)

A1 = ChernPolynomial.linear(3, 2, 0, 1)


def test_rational_text_round_trip():
    assert format_rational(Fraction(7)) == "7"
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert parse_rational("9/2") == Fraction(9, 2)
    assert parse_rational("-4/6") == Fraction(-2, 3)
    assert parse_rational(" 5 ") == 5
    for bad in ["", "x", "1/0", "2/3/4"]:
        with pytest.raises(InputError):
            parse_rational(bad)


def test_polynomial_arithmetic():
    x = ChernPolynomial({(1, 0, 0, 0): 1})
    y = ChernPolynomial({(0, 1, 0, 0): 1})
    square = (x + y) * (x + y)
    assert square.coefficient((2, 0, 0, 0)) == 1
    assert square.coefficient((1, 1, 0, 0)) == 2
    assert square.total_degree() == 2
    assert (square - square).is_zero()
    assert x.scale(Fraction(1, 3)).coefficient((1, 0, 0, 0)) == Fraction(1, 3)


def test_polynomial_linearity_and_evaluation():
    assert A1.is_linear()
    assert not (A1 * A1).is_linear()
    assert not ChernPolynomial.constant(2).is_linear()
    assert ChernPolynomial.zero().is_linear()
    # plane quartic and (2,2) quadric curve classes
    assert A1.evaluate((16, -12, 9, 3)) == 27
    assert A1.evaluate((8, -8, 8, 4)) == 12
    with pytest.raises(InputError):
        A1.evaluate((1, 2, 3))


def test_polynomial_strings():
    assert A1.to_string() == "3*x + 2*y + t"
    assert ChernPolynomial.zero().to_string() == "0"
    assert ChernPolynomial.constant(Fraction(-1, 2)).to_string() == "-1/2"
    assert (A1 * A1).to_string().startswith("9*x^2")


def test_polynomial_json_round_trip():
    p = A1 * A1 + ChernPolynomial.constant(Fraction(5, 3))
    obj = p.to_json_obj()
    assert ChernPolynomial.from_json_obj(obj) == p
    with pytest.raises(InputError):
        ChernPolynomial.from_json_obj([["not-exponents"]])


def test_aut_count():
    assert aut_count(()) == 1
    assert aut_count(("A1",)) == 1
    assert aut_count(("A1", "A1")) == 2
    assert aut_count(("A1", "A1", "A2")) == 2
    assert aut_count(("A1",) * 4) == 24


def test_series_validation():
    with pytest.raises(InputError):
        TruncatedSeries({"A1": 1}, cap=-1)
    with pytest.raises(InputError):
        TruncatedSeries({"A1": 0})
    s = TruncatedSeries.one({"A1": 1}, cap=3)
    with pytest.raises(InputError):
        s.key_weight(("A9",))


def test_series_keys_are_multisets():
    w = {"A1": 1, "A2": 2}
    s = TruncatedSeries(w, 5, {("A2", "A1"): ChernPolynomial.constant(4)})
    assert s.coefficient(("A1", "A2")) == ChernPolynomial.constant(4)
    assert s.coefficient(("A2", "A1")) == ChernPolynomial.constant(4)


def test_series_drops_terms_beyond_cap():
    w = {"A1": 1}
    s = TruncatedSeries(w, 2, {("A1",) * 3: ChernPolynomial.constant(1)})
    assert s.coefficient(("A1",) * 3).is_zero()
    assert not s.coeffs


def test_series_multiplication():
    w = {"A1": 1, "A2": 2}
    one = TruncatedSeries.one(w, 4)
    a = one + TruncatedSeries(w, 4, {("A1",): ChernPolynomial.constant(1)})
    b = one + TruncatedSeries(w, 4, {("A2",): ChernPolynomial.constant(1)})
    prod = a * b
    assert prod.coefficient(()) == ChernPolynomial.constant(1)
    assert prod.coefficient(("A1",)) == ChernPolynomial.constant(1)
    assert prod.coefficient(("A1", "A2")) == ChernPolynomial.constant(1)
    assert prod.coefficient(("A1", "A1")).is_zero()
    assert one * prod == prod
    sq = a * a
    assert sq.coefficient(("A1", "A1")) == ChernPolynomial.constant(1)

    other_cap = TruncatedSeries.one(w, 5)
    with pytest.raises(InputError):
        a * other_cap


def _random_poly(rng, max_degree=2) -> ChernPolynomial:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        key = [0, 0, 0, 0]
        for _ in range(rng.randint(0, max_degree)):
            key[rng.randrange(4)] += 1
        terms[tuple(key)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return ChernPolynomial(terms)


def _random_positive_series(rng, weights, cap) -> TruncatedSeries:
    labels = sorted(weights)
    coeffs = {}
    for _ in range(6):
        key = tuple(sorted(rng.choice(labels) for _ in range(rng.randint(1, 3))))
        coeffs[key] = _random_poly(rng)
    return TruncatedSeries(weights, cap, coeffs)


def test_exp_log_round_trips_to_weight_six():
    rng = random.Random(2024)
    weights = {"A1": 1, "A2": 2, "E6": 3}
    one = TruncatedSeries.one(weights, 6)
    for _ in range(8):
        s = _random_positive_series(rng, weights, 6)
        assert log_series(exp_series(s)) == s
        assert exp_series(log_series(one + s)) == one + s


def test_log_turns_products_into_sums():
    rng = random.Random(99)
    weights = {"A1": 1, "A2": 2}
    one = TruncatedSeries.one(weights, 5)
    f = one + _random_positive_series(rng, weights, 5)
    g = one + _random_positive_series(rng, weights, 5)
    assert log_series(f * g) == log_series(f) + log_series(g)


def test_exp_log_preconditions():
    weights = {"A1": 1}
    with pytest.raises(InputError):
        exp_series(TruncatedSeries.one(weights, 4))
    with pytest.raises(InputError):
        log_series(TruncatedSeries.zero(weights, 4))


def test_assemble_single_label():
    series = assemble_series({("A1",): A1}, {"A1": 1}, cap=3)
    assert series.constant_coefficient() == ChernPolynomial.constant(1)
    assert series.coefficient(("A1",)) == A1
    # two nodes: a1^2/2, leading x^2 coefficient 9/2
    double = extract_universal(series, ("A1", "A1"))
    assert double == (A1 * A1).scale(Fraction(1, 2))
    assert double.coefficient((2, 0, 0, 0)) == Fraction(9, 2)


def test_assemble_cross_terms():
    a2 = ChernPolynomial.linear(0, 1, 5, -2)
    weights = {"A1": 1, "A2": 2}
    series = assemble_series({("A1",): A1, ("A2",): a2}, weights, cap=3)
    assert series.coefficient(("A1", "A2")) == A1 * a2
    assert series.coefficient(("A1", "A1", "A1")) == (A1 * A1 * A1).scale(
        Fraction(1, 6)
    )


def test_assemble_empty_table_is_one():
    series = assemble_series({}, {"A1": 1}, cap=4)
    assert series == TruncatedSeries.one({"A1": 1}, 4)


def test_assemble_rejects_nonlinear_entries():
    with pytest.raises(InputError):
        assemble_series({("A1",): A1 * A1}, {"A1": 1}, cap=3)
    with pytest.raises(InputError):
        assemble_series({("A1",): ChernPolynomial.constant(1)}, {"A1": 1}, cap=3)


def test_extract_universal_respects_cap():
    series = assemble_series({("A1",): A1}, {"A1": 1}, cap=2)
    with pytest.raises(InputError) as err:
        extract_universal(series, ("A1",) * 3)
    assert "truncation cap" in str(err.value)


def test_series_json_round_trip():
    rng = random.Random(5)
    weights = {"A1": 1, "A2": 2}
    s = TruncatedSeries.one(weights, 5) + _random_positive_series(rng, weights, 5)
    assert TruncatedSeries.from_json_obj(s.to_json_obj()) == s
    with pytest.raises(InputError):
        TruncatedSeries.from_json_obj({"cap": 3})


def test_min_positive_weight():
    weights = {"A1": 1, "A2": 2}
    assert TruncatedSeries.zero(weights, 4).min_positive_weight() == 5
    s = TruncatedSeries(weights, 4, {("A2",): ChernPolynomial.constant(1)})
    assert s.min_positive_weight() == 2
