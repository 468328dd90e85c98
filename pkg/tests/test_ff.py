import pytest
from hypothesis import given, strategies as st

from gl2fix.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
)
from gl2fix.ff import element_order, fq_arith, frobenius, make_field, trace_to_prime
from strategies import elements, fields


def t_of(F):
    return F.gen


def test_default_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)


def test_field_validation():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])
    with pytest.raises(DegreeMismatch):
        make_field(3, 2, [1, 1])
    with pytest.raises(FieldTooLarge):
        make_field(2, 11)


def test_explicit_modulus_is_a_different_presentation():
    F = make_field(3, 2, [2, 1, 1])
    assert F != make_field(3, 2)
    assert F.gen * F.gen == F.gen * 2 + 1


def test_small_products():
    F4 = make_field(2, 2)
    assert t_of(F4) * t_of(F4) == t_of(F4) + 1
    F5 = make_field(5)
    assert F5(2).inverse() == F5(3)
    F9 = make_field(3, 2)
    assert t_of(F9) * t_of(F9) == F9(2)


def test_fq_arith_ops():
    F = make_field(3, 2)
    t = F.gen
    assert fq_arith(t, t, "add") == t * 2
    assert fq_arith(t, t, "sub") == F.zero
    assert fq_arith(t, 2, "pow") == F(2)
    assert fq_arith(t, None, "inv") * t == F.one
    assert fq_arith(t, None, "neg") + t == F.zero
    assert fq_arith(F.one, t, "div") == t.inverse()
    with pytest.raises(ValueError):
        fq_arith(t, t, "mod")


def test_division_by_zero():
    F = make_field(5)
    with pytest.raises(DivisionByZero):
        F(1) / F(0)
    with pytest.raises(DivisionByZero):
        F(0).inverse()


def test_cross_field_arithmetic_is_rejected():
    with pytest.raises(FieldMismatch):
        make_field(2, 2).gen + make_field(2, 3).gen


def test_trace():
    F4, F9 = make_field(2, 2), make_field(3, 2)
    assert trace_to_prime(F4.gen) == 1
    assert trace_to_prime(F4.zero) == 0
    assert trace_to_prime(F9.one) == 2


def test_element_order():
    F5, F4 = make_field(5), make_field(2, 2)
    assert element_order(F5(4)) == 2
    assert element_order(F4.gen) == 3
    assert element_order(F5(1)) == 1


def test_frobenius():
    F4 = make_field(2, 2)
    t = F4.gen
    assert frobenius(t, 0) == t
    assert frobenius(t, 1) == t + 1
    assert frobenius(t, 2) == t


def test_element_formatting():
    F = make_field(3, 2)
    assert str(F.element(0)) == "0"
    assert str(F.gen * 2 + 1) == "2*t+1"
    assert str(F.gen) == "t"


@given(fields.flatmap(lambda F: st.tuples(elements(F), elements(F), elements(F))))
def test_field_axioms(abc):
    a, b, c = abc
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == a.field.zero
    if a:
        assert a * a.inverse() == a.field.one


@given(fields.flatmap(lambda F: st.tuples(elements(F), elements(F))))
def test_frobenius_is_additive_and_multiplicative(ab):
    a, b = ab
    assert frobenius(a + b) == frobenius(a) + frobenius(b)
    assert frobenius(a * b) == frobenius(a) * frobenius(b)
    assert frobenius(a, a.field.k) == a


@given(fields.flatmap(lambda F: elements(F, nonzero=True)))
def test_order_divides_group_order(a):
    n = element_order(a)
    assert (a.field.q - 1) % n == 0
    assert a**n == a.field.one
