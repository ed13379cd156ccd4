import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperfaces.combinat import Partition
from hyperfaces.exact import RationalPolynomial, X
from hyperfaces.records import ResultRecord, parse_rational, rational_str, render_polynomial
from hyperfaces.twoface import build_P

fractions = st.fractions(max_denominator=50).filter(lambda q: q != 0)


def test_rational_strings():
    assert rational_str(21) == "21/1"
    assert rational_str(Fraction(58, 6)) == "29/3"
    assert parse_rational("-4/6") == Fraction(-2, 3)


def test_record_for_33():
    tf = build_P(6, Partition(3, 3))
    rec = ResultRecord.from_polynomial(6, tf.beta, "closed-form", tf.poly, tf.genus_labels())
    d = json.loads(rec.to_json())
    assert d["schema"] == 1
    assert d["coefficients"] == [[2, "21/1"], [4, "9/1"]]
    assert d["genus"] == {"2": 1, "4": 0}
    assert ResultRecord.from_json(rec.to_json()) == rec


@given(st.dictionaries(st.integers(0, 12), fractions, max_size=6))
def test_round_trip(terms):
    poly = RationalPolynomial.from_terms(terms)
    rec = ResultRecord.from_polynomial(7, Partition(3, 4), "oracle", poly, flags=["x"])
    back = ResultRecord.from_json(rec.to_json())
    assert back == rec
    assert back.polynomial() == poly


def test_schema_guard():
    with pytest.raises(ValueError):
        ResultRecord.from_dict({"schema": 2})


def test_render_formats():
    p = 21 * X**2 + 9 * X**4
    assert render_polynomial(p, "plain") == "21*x^2 + 9*x^4"
    assert render_polynomial(p, "latex") == "21 x^2 + 9 x^4"
    assert render_polynomial(p, "csv") == "degree,coefficient\n2,21/1\n4,9/1"
    d = json.loads(render_polynomial(p, "json", n=6))
    assert d["schema"] == 1 and d["n"] == 6
    with pytest.raises(ValueError):
        render_polynomial(p, "svg")
