from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qary_cw.alphabet import (
    Sequence,
    add_mod,
    balancing_value,
    format_sequence,
    parse_sequence,
    seq,
    sub_mod,
    weight,
)


@pytest.mark.parametrize(
    "text,q,expected",
    [("2102", 3, 5), ("0000", 3, 0), ("2313113", 4, 14), ("", 5, 0)],
)
def test_weight(text, q, expected):
    assert weight(seq(text, q)) == expected


def test_add_mod_examples():
    assert str(add_mod(seq("2102", 3), seq("1100", 3))) == "0202"
    assert str(add_mod(seq("102", 3), seq("222", 3))) == "021"
    x = seq("3120", 4)
    assert add_mod(x, Sequence.zeros(4, 4)) == x


def test_sub_mod_examples():
    assert str(sub_mod(seq("3113", 4), seq("0033", 4))) == "3120"
    x = seq("210", 3)
    assert sub_mod(x, Sequence.zeros(3, 3)) == x


def test_mismatch_raises():
    with pytest.raises(ValueError, match="length"):
        add_mod(seq("12", 3), seq("1", 3))
    with pytest.raises(ValueError, match="alphabet"):
        sub_mod(seq("12", 3), seq("12", 4))


def test_symbol_range_enforced():
    with pytest.raises(ValueError):
        Sequence([0, 3], 3)
    with pytest.raises(ValueError):
        Sequence([-1], 3)
    with pytest.raises(ValueError):
        Sequence([], 1)


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("length", [0, 1, 2, 3, 4])
def test_add_sub_inverse_exhaustive(q, length):
    words = [Sequence(w, q) for w in product(range(q), repeat=length)]
    for a in words:
        for b in words:
            y = add_mod(a, b)
            assert all(0 <= s < q for s in y)
            assert sub_mod(y, b) == a


def test_balancing_value():
    assert balancing_value(4, 3) == 4
    assert balancing_value(6, 3) == 6
    assert balancing_value(0, 7) == 0
    assert balancing_value(7, 2) == Fraction(7, 2)
    assert isinstance(balancing_value(7, 2), Fraction)


@given(st.integers(0, 50), st.integers(2, 17))
def test_balancing_value_integrality(n, q):
    b = balancing_value(n, q)
    assert (b.denominator == 1) == (n * (q - 1) % 2 == 0)


def test_text_forms():
    assert parse_sequence("2102", 3).symbols == (2, 1, 0, 2)
    assert parse_sequence("11,0,3", 12).symbols == (11, 0, 3)
    assert format_sequence(Sequence([11, 0, 3], 12)) == "11,0,3"
    with pytest.raises(ValueError):
        parse_sequence("2132", 3)
    with pytest.raises(ValueError):
        parse_sequence("12,x", 16)


@given(st.integers(2, 20).flatmap(lambda q: st.tuples(st.just(q), st.lists(st.integers(0, q - 1), max_size=12))))
def test_text_roundtrip(case):
    q, symbols = case
    s = Sequence(symbols, q)
    assert parse_sequence(format_sequence(s), q) == s


def test_concatenation_and_slicing():
    c = seq("2", 4) + seq("31", 4) + seq("3113", 4)
    assert str(c) == "2313113"
    assert str(c[1:3]) == "31"
    assert c[0] == 2
