from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eqideal import GF, DomainError, PrimeField, QQ, field_from_name


def test_field_names():
    assert field_from_name("q") == QQ
    assert field_from_name("gf:5") == PrimeField(5)
    for bad in ["gf:4", "gf:1", "gf:x", "r"]:
        with pytest.raises(DomainError):
            field_from_name(bad)


def test_rationals_normalized():
    assert QQ.from_ratio(6, -4) == Fraction(-3, 2)
    with pytest.raises(DomainError):
        QQ.from_ratio(1, 0)


def test_gf_canonical_form():
    a = GF(-1, 7)
    assert a.v == 6 and str(a) == "6"
    assert GF(3, 7) / GF(3, 7) == GF(1, 7)
    with pytest.raises(ZeroDivisionError):
        GF(1, 7) / GF(0, 7)
    with pytest.raises(DomainError):
        GF(1, 7) + GF(1, 5)


@given(st.integers(), st.integers(), st.integers(1, 10**6))
def test_gf_axioms(a, b, c):
    p = 101
    x, y, z = GF(a, p), GF(b, p), GF(c, p)
    assert (x + y) * z == x * z + y * z
    assert x - x == GF(0, p)
    if c % p:
        assert (x / z) * z == x


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_axioms_exact(a, b, c):
    assert (a + b) - b == a
    assert (a * b) * c == a * (b * c)
