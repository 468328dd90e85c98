import pytest
from hypothesis import given, settings, strategies as st

from gl2fix.errors import ExprSyntaxError, SingularMatrix, ZeroSpan
from gl2fix.ff import make_field
from gl2fix.parse import (
    MAX_DEGREE,
    parse_element,
    parse_generators,
    parse_matrix,
    parse_modulus,
    parse_object,
    parse_poly,
    parse_subspace,
)
from gl2fix.poly import PolyFq
from strategies import elements, fields, matrices, polys

F9 = make_field(3, 2)


def test_poly_grammar_case():
    f = parse_object(F9, "poly", "x^2 + (t+1)*x + 2")
    assert f == PolyFq(F9, [2, 4, 1])
    assert str(f) == "x^2 + (t+1)*x + 2"


def test_whitespace_and_products():
    assert parse_poly(F9, " ( x + 1 ) * ( x - 1 ) ") == parse_poly(F9, "x^2-1")
    assert parse_poly(F9, "-x") == parse_poly(F9, "2*x")
    assert parse_poly(F9, "t*t") == parse_poly(F9, "2")


def test_matrices():
    A = parse_object(F9, "matrix", "[[1,1],[0,1]]")
    assert A.is_upper_unitriangular()
    with pytest.raises(SingularMatrix):
        parse_matrix(F9, "[[1,1],[1,1]]")
    gens = parse_generators(F9, "[[1,1],[0,1]] ; [[1,t],[0,1]]")
    assert len(gens) == 2 and str(gens[1]) == "[[1,t],[0,1]]"


def test_subspaces():
    S = parse_subspace(F9, "1, t, t+1")
    assert S.dim == 2 and str(S) == "1,t"
    with pytest.raises(ZeroSpan):
        parse_subspace(F9, "0")


def test_modulus_text():
    assert parse_modulus(3, "t^2 + 1") == [1, 0, 1]
    assert make_field(3, 2, parse_modulus(3, "t^2+1")) == F9


@pytest.mark.parametrize("text, position", [
    ("x^", 2), ("x ++ 1", 3), ("2t", 1), ("x + y", 4), ("(x + 1", 6), ("x $ 1", 2), ("", 0),
])
def test_syntax_errors_carry_positions(text, position):
    with pytest.raises(ExprSyntaxError) as err:
        parse_poly(F9, text)
    assert err.value.position == position
    assert f"at position {position}" in str(err.value)


def test_resource_limits():
    with pytest.raises(ExprSyntaxError):
        parse_poly(F9, f"x^{MAX_DEGREE + 1}")
    with pytest.raises(ExprSyntaxError):
        parse_poly(F9, "(" * 500 + "x" + ")" * 500)
    with pytest.raises(ExprSyntaxError):
        parse_poly(F9, "-" * 500 + "x")


def test_element_rejects_indeterminate():
    with pytest.raises(ExprSyntaxError):
        parse_element(F9, "x")


def test_unknown_kind():
    with pytest.raises(ValueError):
        parse_object(F9, "vector", "1")


@given(fields.flatmap(polys))
def test_poly_print_parse_identity(f):
    assert parse_poly(f.field, str(f)) == f


@given(fields.flatmap(elements))
def test_element_print_parse_identity(a):
    assert parse_element(a.field, str(a)) == a


@given(fields.flatmap(matrices))
def test_matrix_print_parse_identity(A):
    assert parse_matrix(A.field, str(A)) == A


@settings(max_examples=300)
@given(st.text(alphabet="xt0123456789+-*^()[], ;", max_size=30))
def test_fuzzed_polynomials_only_raise_syntax_errors(text):
    try:
        parse_poly(F9, text)
    except ExprSyntaxError:
        pass


@settings(max_examples=200)
@given(st.text(max_size=20))
def test_arbitrary_text_only_raises_syntax_errors(text):
    try:
        parse_element(F9, text)
    except ExprSyntaxError:
        pass
