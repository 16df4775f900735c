import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amalgam.algebra import AlgebraHom, ArtinianAlgebra, linear_kernel
from amalgam.errors import NotZeroDimensional, ResourceLimit, RingMismatch
from amalgam.groebner import (
    Ideal,
    Limits,
    buchberger,
    eliminate,
    ideal_intersection,
    ideal_sum,
    kernel_of_hom,
    minimal_basis,
    normal_form,
    standard_monomials,
)
from amalgam.instances import random_local_ideal
from amalgam.polyring import DEGREVLEX, GF, LEX, QQ, PolyRing, block_order, divides, mono_lcm

from oracles import sympy_gb


def gb_set(I, order=DEGREVLEX):
    return set(I.groebner(order).elements)


def ideal(R, *texts):
    return Ideal(R, [R.parse(t) for t in texts])


# -- examples -----------------------------------------------------------------


def test_normal_form_examples(Rxy):
    X = PolyRing(("x",), Rxy.field)
    assert normal_form(X.parse("x^3 + x + 1"), ideal(X, "x^2").groebner()) == X.parse("x + 1")
    gb = ideal(Rxy, "x^3", "y - x^2").groebner()
    assert normal_form(Rxy.parse("x*y"), gb).is_zero()
    assert normal_form(Rxy.parse("x^2 + x"), gb) == Rxy.parse("x + y")


def test_normal_form_ring_mismatch(Rxy):
    S = PolyRing(("x", "y"), GF(5))
    with pytest.raises(RingMismatch):
        normal_form(S.parse("x"), ideal(Rxy, "x").groebner())


def test_buchberger_examples(F7):
    R = PolyRing(("y", "x"), F7)  # lex with y > x
    gb = buchberger(ideal(R, "x^3", "y - x^2"), LEX)
    assert list(gb.elements) == [R.parse("y - x^2"), R.parse("x^3")]
    X = PolyRing(("x", "y"), F7)
    for order in (DEGREVLEX, LEX):
        assert list(buchberger(ideal(X, "x^2", "x^3"), order).elements) == [X.parse("x^2")]
    assert gb_set(ideal_sum(ideal(X, "x^2", "y"), ideal(X, "x^3", "y"))) == {X.parse("x^2"),
                                                                              X.parse("y")}


def test_standard_monomials_examples(Rxy):
    assert standard_monomials(ideal(Rxy, "x^3", "x*y", "y^2").groebner()) == [
        (0, 0), (0, 1), (1, 0), (2, 0)]
    X = PolyRing(("x",), Rxy.field)
    assert standard_monomials(ideal(X, "x - 1").groebner()) == [(0,)]
    with pytest.raises(NotZeroDimensional):
        standard_monomials(ideal(Rxy, "x^2").groebner())


def test_minimal_basis_examples(Rxy):
    assert list(minimal_basis(ideal(Rxy, "x^2", "x^3", "y")).generators) == [Rxy.parse("x^2"),
                                                                         Rxy.parse("y")]
    I = ideal(Rxy, "x^3", "y - x^2")
    assert list(minimal_basis(I).generators) == list(I.generators)
    assert list(minimal_basis(ideal(Rxy, "x", "x", "x")).generators) == [Rxy.parse("x")]


def test_sum_examples(Rxy):
    I1, I2 = ideal(Rxy, "x^3", "y - x^2"), ideal(Rxy, "x^3", "y")
    assert gb_set(ideal_sum(I1, I2)) == {Rxy.parse("x^2"), Rxy.parse("y")}
    assert gb_set(ideal_sum(I1, Ideal(Rxy, [Rxy.zero]))) == gb_set(I1)
    assert gb_set(ideal_sum(ideal(Rxy, "x"), ideal(Rxy, "y"))) == gb_set(ideal(Rxy, "x", "y"))


def test_intersection_examples(Rxy):
    I1, I2 = ideal(Rxy, "x^3", "y - x^2"), ideal(Rxy, "x^3", "y")
    assert gb_set(ideal_intersection(I1, I2)) == gb_set(ideal(Rxy, "x^3", "x*y", "y^2"))
    X = PolyRing(("x",), Rxy.field)
    assert gb_set(ideal_intersection(ideal(X, "x^2"), ideal(X, "x^3"))) == {X.parse("x^3")}
    K = ideal_intersection(ideal(Rxy, "x^2", "y"), ideal(Rxy, "x", "y^2"))
    assert gb_set(K) == gb_set(ideal(Rxy, "x^2", "x*y", "y^2"))
    assert len(standard_monomials(K.groebner())) == 2 + 2 - 1


def test_eliminate_examples(F7):
    R = PolyRing(("t", "x"), F7)
    out = eliminate(ideal(R, "t*x^2", "x^3 - t*x^3"), 1)
    assert [str(g) for g in out.generators] == ["x^3"]
    assert out.ring.variables == ("x",)
    S = PolyRing(("y", "x"), F7)
    assert eliminate(ideal(S, "y - x^2"), 1).is_zero()
    T = PolyRing(("x", "y"), F7)
    assert [str(g) for g in eliminate(ideal(T, "x - 1", "y - 1"), 1).generators] == ["y - 1"]


def test_kernel_examples(F7):
    T = PolyRing(("t",), F7)
    B3 = ArtinianAlgebra(T, ideal(T, "t^3"))
    B2 = ArtinianAlgebra(T, ideal(T, "t^2"))
    R = PolyRing(("x", "y"), F7)
    K = kernel_of_hom(AlgebraHom(R, B3, [T.parse("t"), T.parse("t^2")]))
    assert gb_set(K) == gb_set(ideal(R, "y - x^2", "x^3"))
    assert len(standard_monomials(K.groebner())) == 3
    X = PolyRing(("x",), F7)
    assert gb_set(kernel_of_hom(AlgebraHom(X, B2, [T.zero]))) == {X.parse("x")}
    assert gb_set(kernel_of_hom(AlgebraHom(X, B2, [T.parse("t")]))) == {X.parse("x^2")}


def test_resource_limit(Rxy):
    with pytest.raises(ResourceLimit):
        buchberger(ideal(Rxy, "x^5 - y", "y^5 - x"), DEGREVLEX, Limits(max_degree=4))
    with pytest.raises(ResourceLimit):
        buchberger(ideal(Rxy, "x^5 - y", "y^5 - x"), DEGREVLEX, Limits(max_basis=1))


# -- reduced-basis structure --------------------------------------------------


def is_reduced(gb):
    lms = gb.leading_monomials
    for g, lm in zip(gb.elements, lms):
        if g.leading_coefficient(gb.order) != 1:
            return False
        for m in g.terms:
            if any(divides(other, m) for other in lms if other is not lm):
                return False
    return True


def s_polys_reduce(gb):
    els, order = gb.elements, gb.order
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            f, g = els[i], els[j]
            a, b = f.leading_monomial(order), g.leading_monomial(order)
            L = mono_lcm(a, b)
            sp = (f.mul_monomial(tuple(x - y for x, y in zip(L, a)))
                  - g.mul_monomial(tuple(x - y for x, y in zip(L, b))))
            if not normal_form(sp, gb).is_zero():
                return False
    return True


def random_ideal(rng, ring, ngens=3, deg=3, terms=4):
    gens = []
    for _ in range(ngens):
        d = {}
        for _ in range(terms):
            e = [0] * ring.nvars
            for _ in range(rng.randint(0, deg)):
                e[rng.randrange(ring.nvars)] += 1
            d[tuple(e)] = ring.field(rng.randint(1, 6))
        gens.append(ring.from_dict(d))
    return Ideal(ring, gens)


@pytest.mark.parametrize("seed", range(40))
def test_reduced_gb_matches_sympy_gf7(seed):
    rng = random.Random(seed)
    n = 2 + seed % 2
    R = PolyRing(("x", "y", "z")[:n], GF(7))
    I = random_ideal(rng, R, ngens=2 + seed % 3, deg=3 if n == 2 else 2)
    for order in (DEGREVLEX, LEX):
        gb = buchberger(I, order)
        assert is_reduced(gb) and s_polys_reduce(gb)
        assert set(gb.elements) == set(sympy_gb(R, I.generators, order))


@pytest.mark.parametrize("seed", range(15))
def test_reduced_gb_matches_sympy_qq(seed):
    rng = random.Random(1000 + seed)
    R = PolyRing(("x", "y"), QQ)
    I = random_ideal(rng, R, ngens=2, deg=3)
    gb = buchberger(I, DEGREVLEX)
    assert set(gb.elements) == set(sympy_gb(R, I.generators, DEGREVLEX))


@pytest.mark.parametrize("seed", range(20))
def test_gb_unique_under_shuffle_and_recomputation(seed):
    rng = random.Random(seed)
    R = PolyRing(("x", "y", "z"), GF(7))
    I = random_local_ideal(rng, R, 8)
    gens = list(I.generators)
    rng.shuffle(gens)
    assert buchberger(I).elements == buchberger(Ideal(R, gens)).elements == buchberger(I).elements


@pytest.mark.parametrize("seed", range(30))
def test_colength_inclusion_exclusion_and_membership(seed):
    rng = random.Random(seed)
    R = PolyRing(("x", "y", "z")[: 1 + seed % 3], GF(7))
    I, J = random_local_ideal(rng, R, 8), random_local_ideal(rng, R, 8)
    K = ideal_intersection(I, J)
    gI, gJ = I.groebner(), J.groebner()
    for g in K.generators:
        assert normal_form(g, gI).is_zero() and normal_form(g, gJ).is_zero()
    n = lambda X: len(standard_monomials(X.groebner()))  # noqa: E731
    assert n(K) == n(I) + n(J) - n(ideal_sum(I, J))


@pytest.mark.parametrize("seed", range(20))
def test_minimal_basis_is_minimal(seed):
    rng = random.Random(seed)
    R = PolyRing(("x", "y"), GF(7))
    I = random_local_ideal(rng, R, 8)
    extra = Ideal(R, list(I.generators) + [g * R.gen(0) for g in I.generators])
    mb = minimal_basis(extra)
    assert mb.groebner().elements == I.groebner().elements
    for k in range(len(mb.generators)):
        rest = Ideal(R, list(mb.generators[:k]) + list(mb.generators[k + 1:]))
        assert rest.groebner().elements != mb.groebner().elements


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_normal_form_is_idempotent_and_sound(seed):
    rng = random.Random(seed)
    R = PolyRing(("x", "y"), GF(7))
    gb = random_local_ideal(rng, R, 8).groebner()
    f = random_ideal(rng, R, ngens=1, deg=5, terms=6).generators[0]
    r = normal_form(f, gb)
    assert normal_form(r, gb) == r
    assert normal_form(f - r, gb).is_zero()
    assert not any(divides(lm, m) for m in r.terms for lm in gb.leading_monomials)


@pytest.mark.parametrize("seed", range(25))
def test_graph_kernel_agrees_with_linear_kernel(seed):
    rng = random.Random(seed)
    R = PolyRing(("x", "y"), GF(7))
    A = ArtinianAlgebra(R, random_local_ideal(rng, R, 7))
    S = PolyRing(("s", "t"), GF(7))
    # sparse images so the elimination stays quick
    images = []
    for _ in range(2):
        v = A.zero_vector()
        for j in rng.sample(range(1, A.length), min(2, A.length - 1)) if A.length > 1 else []:
            v[j] = rng.randint(1, 6)
        images.append(A.element(v))
    h = AlgebraHom(S, A, images)
    assert kernel_of_hom(h).groebner().elements == linear_kernel(h).groebner().elements


def test_block_order_elimination_property(F7):
    R = PolyRing(("t", "x", "y"), F7)
    gb = buchberger(ideal(R, "t*x - 1", "t*y - x"), block_order(1))
    rest = [g for g in gb.elements if all(m[0] == 0 for m in g.terms)]
    assert set(rest) == {R.parse("x^2 - y")} or set(rest) == {R.parse("-x^2 + y").monic()}
