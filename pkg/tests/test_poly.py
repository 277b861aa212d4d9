"""Sparse polynomial arithmetic, canonical text form, and JSON round-trips."""

import pytest
from hypothesis import given, strategies as st

from lahbell.exact_core import IntegralityError
from lahbell.poly import (
    SCALAR_X,
    Monomial,
    SparsePolynomial,
    Variable,
    const,
    term,
    var,
)


def test_variable_names_and_validation():
    assert Variable("x", 3).name == "x3"
    assert SCALAR_X.name == "x"
    assert Variable.from_name("b12") == Variable("b", 12)
    assert Variable.from_name("x") == SCALAR_X
    with pytest.raises(ValueError):
        Variable("q", 1)
    with pytest.raises(ValueError):
        Variable("x", 0)
    with pytest.raises(ValueError):
        Variable.from_name("x01")


def test_monomial_canonical_form():
    m = Monomial(((Variable("x", 2), 1), (Variable("x", 1), 2), (Variable("x", 3), 0)))
    assert str(m) == "x1^2*x2"
    assert m.degree == 3
    assert m.exponent(Variable("x", 3)) == 0
    assert Monomial().is_unit


def test_text_ordering_is_graded_then_lexicographic():
    p = var("x3") + 3 * var("x1") * var("x2") + var("x1") ** 3
    assert str(p) == "x1^3 + 3*x1*x2 + x3"
    q = 3 * var("x2") ** 2 + 4 * var("x1") * var("x3")
    assert str(q) == "4*x1*x3 + 3*x2^2"
    assert str(var("x1") + var("y1")) == "x1 + y1"
    assert str(var("a2") * var("b1")) == "a2*b1"


def test_text_signs_and_constants():
    assert str(term(1, x1=1) - term(2, x2=1)) == "x1 - 2*x2"
    assert str(-var("x1")) == "-x1"
    assert str(const(0)) == "0"
    assert str(const(-7)) == "-7"
    assert str((var("x1") + 1) ** 2) == "x1^2 + 2*x1 + 1"


def test_scalar_variable_renders_bare():
    x = var(SCALAR_X)
    assert str(x ** 2 + 6 * x + 6) == "x^2 + 6*x + 6"


def test_term_builder():
    assert term(3, a1=2, b2=1) == 3 * var("a1") ** 2 * var("b2")
    assert term(5) == const(5)


def test_zero_and_constant_behaviour():
    zero = var("x1") - var("x1")
    assert zero.is_zero
    assert zero == 0
    assert const(4) == 4
    assert const(4).as_int() == 4
    assert zero.as_int() == 0
    with pytest.raises(ValueError):
        var("x1").as_int()


def test_arithmetic_with_ints():
    p = var("x1")
    assert 1 + p == p + 1
    assert 1 - p == -(p - 1)
    assert 3 * p == p * 3
    assert p ** 0 == 1


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        var("x1") ** -1


def test_divide_exact():
    p = 4 * var("x1") + 6
    assert p.divide_exact(2) == 2 * var("x1") + 3
    with pytest.raises(IntegralityError):
        (3 * var("x1")).divide_exact(2)


def test_substitute_and_evaluate():
    p = var("x1") ** 2 + var("x2")
    assert p.substitute(Variable("x", 2), const(5)) == var("x1") ** 2 + 5
    swapped = p.substitute_all({Variable("x", 1): 2 * var("x1"), Variable("x", 2): var("x2")})
    assert swapped == 4 * var("x1") ** 2 + var("x2")
    assert p.evaluate({Variable("x", 1): 3, Variable("x", 2): 1}) == 10
    with pytest.raises(ValueError, match="x2"):
        p.evaluate({Variable("x", 1): 3})


def test_substitute_all_is_simultaneous():
    p = var("x1") * var("x2")
    swapped = p.substitute_all(
        {Variable("x", 1): var("x2"), Variable("x", 2): var("x1")}
    )
    assert swapped == p


def test_coefficient_lookup_and_terms():
    p = 2 * var("x1") * var("x2") - var("x2") ** 2
    pairs = list(p.terms())
    assert [c for _, c in pairs] == [2, -1]
    mono = pairs[0][0]
    assert p.coefficient(mono) == 2
    assert p.coefficient(Monomial()) == 0
    assert p.variables() == [Variable("x", 1), Variable("x", 2)]


def test_json_round_trip():
    p = 5 * var("x1") - 3 + var("b2") ** 2
    obj = p.to_json_obj()
    assert obj["terms"][0]["coeff"] == "1"
    assert SparsePolynomial.from_json_obj(obj) == p
    assert SparsePolynomial.from_json_obj(const(0).to_json_obj()) == 0


_vars = st.sampled_from([var("x1"), var("x2"), var("y1")])
_monos = st.lists(_vars, min_size=0, max_size=3).map(
    lambda vs: 1 if not vs else __import__("functools").reduce(lambda a, b: a * b, vs)
)
_polys = st.lists(
    st.tuples(st.integers(min_value=-5, max_value=5), _monos), min_size=0, max_size=4
).map(lambda pairs: sum((c * m for c, m in pairs), const(0)))


@given(_polys, _polys, _polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + const(0) == p
    assert p * const(1) == p
    assert p - p == 0


@given(_polys, st.integers(min_value=0, max_value=4))
def test_pow_matches_repeated_product(p, k):
    expected = const(1)
    for _ in range(k):
        expected = expected * p
    assert p ** k == expected
