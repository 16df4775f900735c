from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amalgam.errors import (
    ArityMismatch,
    BadCoefficient,
    FieldMismatch,
    ParseError,
    RingMismatch,
    UnknownVariable,
)
from amalgam.polyring import (
    DEGREVLEX,
    GF,
    LEX,
    QQ,
    Field,
    PolyRing,
    Polynomial,
    Scalar,
    block_order,
    field_ops,
    monomial_compare,
    parse_polynomial,
    render_polynomial,
)


# -- scalars ------------------------------------------------------------------


def test_gf7_division_example():
    assert field_ops(Scalar(3, GF(7)), Scalar(5, GF(7)), "div").value == 2


def test_gf7_wraparound():
    assert field_ops(Scalar(6, GF(7)), Scalar(1, GF(7)), "add").value == 0


def test_rational_product_in_lowest_terms():
    r = field_ops(Scalar(Fraction(1, 2), QQ), Scalar(Fraction(2, 3), QQ), "mul").value
    assert r == Fraction(1, 3) and r.denominator == 3


def test_field_mismatch_and_division_by_zero():
    with pytest.raises(FieldMismatch):
        field_ops(Scalar(1, GF(7)), Scalar(1, GF(5)), "add")
    with pytest.raises(ZeroDivisionError):
        field_ops(Scalar(1, GF(7)), Scalar(0, GF(7)), "div")


def test_canonical_representatives():
    F = GF(7)
    assert F(-5) == 2 and F(Fraction(1, 2)) == 4
    assert QQ(Fraction(4, -6)) == Fraction(-2, 3)
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


def test_field_parsing():
    assert Field.parse("GF(7)") == GF(7)
    assert Field.parse(" QQ ") == QQ
    for bad in ("GF(8)", "GF(1)", "R", "GF(x)"):
        with pytest.raises(ValueError):
            Field.parse(bad)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_field_axioms_exhaustive(p):
    F = GF(p)
    els = F.elements()
    for a, b in product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.sub(a, b), b) == a
        if b:
            assert F.mul(F.div(a, b), b) == a
    for a, b, c in product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    # every nonzero element has exactly one inverse (table check)
    for a in els[1:]:
        assert [b for b in els if F.mul(a, b) == 1] == [F.inv(a)]


# -- monomial orders ----------------------------------------------------------


def test_order_examples():
    assert monomial_compare(DEGREVLEX, (2, 0), (0, 1)) == 1
    assert monomial_compare(LEX, (1, 0), (0, 3)) == 1
    assert monomial_compare(DEGREVLEX, (0, 0), (0, 0)) == 0
    with pytest.raises(ArityMismatch):
        monomial_compare(DEGREVLEX, (1, 0), (1, 0, 0))


def test_degrevlex_tie_break_is_reverse_lex():
    # same degree: x*z < y^2 in degrevlex (x > y > z), the classic distinction from deglex
    assert monomial_compare(DEGREVLEX, (1, 0, 1), (0, 2, 0)) == -1
    assert monomial_compare(LEX, (1, 0, 1), (0, 2, 0)) == 1


def test_block_order_eliminates_first_block():
    B = block_order(1)
    # t * (anything) beats every monomial free of t
    assert monomial_compare(B, (1, 0, 0), (0, 5, 7)) == 1
    assert monomial_compare(B, (0, 2, 0), (0, 1, 1)) == 1


monos = st.tuples(*[st.integers(0, 4)] * 3)


@settings(max_examples=200, deadline=None)
@given(monos, monos, monos)
def test_order_axioms(a, b, c):
    for order in (DEGREVLEX, LEX, block_order(1), block_order(2)):
        ab = monomial_compare(order, a, b)
        assert ab == -monomial_compare(order, b, a)
        assert (ab == 0) == (a == b)
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert monomial_compare(order, ac, bc) == ab
        assert monomial_compare(order, (0, 0, 0), a) <= 0
        if ab <= 0 and monomial_compare(order, b, c) <= 0:
            assert monomial_compare(order, a, c) <= 0


# -- polynomials --------------------------------------------------------------


def test_difference_of_squares_over_qq():
    R = PolyRing(("x", "y"), QQ)
    x, y = R.gens()
    assert (x + y) * (x - y) == R.parse("x^2 - y^2")


def test_characteristic_two():
    R = PolyRing(("x",), GF(2))
    x = R.gen(0)
    assert (x + 1) * (x + 1) == R.parse("x^2 + 1")


def test_additive_inverse_and_ring_mismatch():
    R = PolyRing(("x", "y"), GF(7))
    f = R.parse("x^3 + 2*x*y - 5")
    assert (f + (R.zero - f)).is_zero()
    S = PolyRing(("x", "y"), GF(5))
    with pytest.raises(RingMismatch):
        f + S.parse("x")


def test_parse_examples():
    R = PolyRing(("x", "y"), GF(7))
    f = R.parse("x^3 + 2*x*y − 5")
    assert f.terms == {(3, 0): 1, (1, 1): 2, (0, 0): 2}
    g = R.parse("y - x^2")
    assert g.terms == {(0, 1): 1, (2, 0): 6}
    with pytest.raises(UnknownVariable) as exc:
        R.parse("x + z")
    assert exc.value.name == "z" and exc.value.column == 5


def test_parse_coefficient_forms():
    R = PolyRing(("x", "y"), QQ)
    assert R.parse("1/2*x - 3/4").terms == {(1, 0): Fraction(1, 2), (0, 0): Fraction(-3, 4)}
    assert R.parse("x*2*y").terms == {(1, 1): 2}
    assert R.parse("-x^2 + x^2").is_zero()
    S = PolyRing(("x",), GF(7))
    assert S.parse("1/2*x").terms == {(1,): 4}
    with pytest.raises(BadCoefficient):
        S.parse("1/7*x")
    with pytest.raises(BadCoefficient):
        R.parse("1/0")


@pytest.mark.parametrize("text,column", [("x +", 4), ("x ** 2", 4), ("2 x", 3), ("x^", 3),
                                         ("x $ y", 3), ("", 1)])
def test_parse_errors_carry_columns(text, column):
    R = PolyRing(("x", "y"), GF(7))
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text, R, line=4)
    assert exc.value.line == 4 and exc.value.column == column


def test_render_examples():
    R = PolyRing(("x", "y"), GF(7))
    assert render_polynomial(R.from_dict({(3, 0): 1, (1, 1): 2})) == "x^3 + 2*x*y"
    assert render_polynomial(R.zero) == "0"
    assert render_polynomial(R.constant(3)) == "3"
    assert str(R.parse("y - x^2")) == "-x^2 + y"
    Q = PolyRing(("x",), QQ)
    assert str(Q.parse("1/2*x - 1")) == "1/2*x - 1"


def test_total_degree_and_leading_terms():
    R = PolyRing(("x", "y"), GF(7))
    f = R.parse("x*y^2 + x^2 + y")
    assert f.total_degree() == 3
    assert f.leading_monomial(DEGREVLEX) == (1, 2)
    assert f.leading_monomial(LEX) == (2, 0)
    # equal degree: degrevlex prefers the smaller power of the last variable
    assert R.parse("x*y^2 + x^3").leading_monomial(DEGREVLEX) == (3, 0)


def polys(ring, max_terms=5, max_exp=3):
    F = ring.field
    coeff = st.integers(0, (F.p or 11) - 1)
    mono = st.tuples(*[st.integers(0, max_exp)] * ring.nvars)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(
        lambda d: ring.from_dict({m: F(c) for m, c in d.items()}))


R7 = PolyRing(("x", "y", "z"), GF(7))
RQ = PolyRing(("x", "y"), QQ)


@settings(max_examples=150, deadline=None)
@given(polys(R7), polys(R7), polys(R7))
def test_ring_axioms_gf7(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


@settings(max_examples=150, deadline=None)
@given(polys(R7))
def test_render_parse_round_trip_gf7(f):
    assert R7.parse(str(f)) == f


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                       st.fractions(max_denominator=20), max_size=5))
def test_render_parse_round_trip_qq(d):
    f = RQ.from_dict({m: QQ(c) for m, c in d.items()})
    assert RQ.parse(str(f)) == f


def test_canonical_form_drops_zero_terms():
    R = PolyRing(("x",), GF(3))
    f = R.from_dict({(1,): 3, (0,): 1})
    assert f.terms == {(0,): 1}
    assert R.from_dict({(2,): 0}).is_zero()
    assert R.from_dict({(2,): 1}) == Polynomial(R, {(2,): 1})


def test_substitute_and_change_ring():
    R = PolyRing(("x", "y"), GF(7))
    S = PolyRing(("t",), GF(7))
    t = S.gen(0)
    f = R.parse("x^2 - y")
    assert f.substitute([t, t * t], S).is_zero()
    big = PolyRing(("a", "x", "y"), GF(7))
    assert f.change_ring(big, [1, 2]) == big.parse("x^2 - y")
