"""Random local zero-dimensional instances for property and acceptance tests.

A random instance starts from a random staircase (an order ideal of
exponent vectors) and applies a triangular change of coordinates
``x_i -> x_i + p_i(x_{i+1}, ..., x_n)``.  Such maps are invertible polynomial
automorphisms fixing the origin, so the perturbed ideal is still local at the
origin with the same length, while usually no longer monomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import AlgebraHom, ArtinianAlgebra, make_hom
from .groebner import Ideal, ideal_intersection, ideal_sum, kernel_of_hom
from .polyring import Field, Monomial, PolyRing, Polynomial, degrevlex_key
from .young import YoungDiagram, power_of_maximal_ideal


def random_staircase(rng: random.Random, nvars: int, size: int) -> YoungDiagram:
    """A random order ideal with ``size`` cells, grown one outer corner at a time."""
    cells = {(0,) * nvars}
    while len(cells) < size:
        corners = set()
        for c in cells:
            for i in range(nvars):
                e = c[:i] + (c[i] + 1,) + c[i + 1:]
                if e not in cells and all(
                        e[:j] + (e[j] - 1,) + e[j + 1:] in cells for j in range(nvars) if e[j]):
                    corners.add(e)
        cells.add(rng.choice(sorted(corners, key=degrevlex_key)))
    return YoungDiagram(frozenset(cells), nvars)


def random_monomial_ideal(rng: random.Random, ring: PolyRing, max_length: int) -> Ideal:
    Y = random_staircase(rng, ring.nvars, rng.randint(1, max_length))
    return Y.ideal(ring)


def _random_poly(rng: random.Random, ring: PolyRing, variables: List[int], degree: int,
                 density: float) -> Polynomial:
    F = ring.field
    terms = {}
    if not variables:
        return ring.zero
    for d in range(1, degree + 1):
        for m in _monomials_in(ring.nvars, variables, d):
            if rng.random() < density:
                c = F(rng.randint(1, max(2, (F.p or 5) - 1)))
                if c:
                    terms[m] = c
    return ring.from_dict(terms)


def _monomials_in(n: int, variables: List[int], d: int) -> List[Monomial]:
    out = []

    def rec(k, left, acc):
        if k == len(variables):
            if left == 0:
                e = [0] * n
                for v, a in zip(variables, acc):
                    e[v] = a
                out.append(tuple(e))
            return
        for a in range(left + 1):
            rec(k + 1, left - a, acc + [a])

    rec(0, d, [])
    return sorted(out, key=degrevlex_key)


def random_coordinate_change(rng: random.Random, ring: PolyRing, degree: int = 2,
                             density: float = 0.3) -> List[Polynomial]:
    """Images of the variables under a random triangular automorphism."""
    images = []
    perm = list(range(ring.nvars))
    rng.shuffle(perm)
    for k, i in enumerate(perm):
        later = perm[k + 1:]
        images.append((i, ring.gen(i) + _random_poly(rng, ring, later, degree, density)))
    images.sort()
    return [p for _, p in images]


def perturb(rng: random.Random, I: Ideal, degree: int = 2, density: float = 0.3) -> Ideal:
    ring = I.ring
    imgs = random_coordinate_change(rng, ring, degree, density)
    return Ideal(ring, [g.substitute(imgs, ring) for g in I.generators])


def random_local_ideal(rng: random.Random, ring: PolyRing, max_length: int,
                       monomial_probability: float = 0.25) -> Ideal:
    I = random_monomial_ideal(rng, ring, max_length)
    if rng.random() < monomial_probability:
        return I
    return perturb(rng, I)


@dataclass
class Instance:
    """Two canonical quotient maps ``k[x]/I_i -> k[x]/(I1 + I2)``."""

    ring: PolyRing
    I1: Ideal
    I2: Ideal
    A0: ArtinianAlgebra
    A1: ArtinianAlgebra
    A2: ArtinianAlgebra
    f1: AlgebraHom
    f2: AlgebraHom


def canonical_instance(ring: PolyRing, I1: Ideal, I2: Ideal) -> Instance:
    A1, A2 = ArtinianAlgebra(ring, I1), ArtinianAlgebra(ring, I2)
    A0 = ArtinianAlgebra(ring, ideal_sum(I1, I2))
    gens = ring.gens()
    return Instance(ring, I1, I2, A0, A1, A2, make_hom(A1, A0, gens), make_hom(A2, A0, gens))


def random_instance(rng: random.Random, field: Field, max_vars: int = 3, max_length: int = 10,
                    monomial: bool = False, nvars: Optional[int] = None) -> Instance:
    """Random pair of local ideals in one ring, both of length <= ``max_length``.

    Half the time both ideals share one coordinate change, so ``I1 + I2`` is
    usually a proper ideal with an interesting quotient.
    """
    n = nvars or rng.randint(1, max_vars)
    ring = PolyRing(("x", "y", "z")[:n] if n <= 3 else tuple(f"x{i}" for i in range(1, n + 1)),
                    field)
    J1 = random_monomial_ideal(rng, ring, max_length)
    J2 = random_monomial_ideal(rng, ring, max_length)
    if monomial:
        return canonical_instance(ring, J1, J2)
    mode = rng.random()
    if mode < 0.5:
        imgs = random_coordinate_change(rng, ring)
        I1 = Ideal(ring, [g.substitute(imgs, ring) for g in J1.generators])
        I2 = Ideal(ring, [g.substitute(imgs, ring) for g in J2.generators])
    elif mode < 0.8:
        I1, I2 = perturb(rng, J1), J2
    else:
        I1, I2 = perturb(rng, J1), perturb(rng, J2)
    return canonical_instance(ring, I1, I2)


def _through(f: AlgebraHom, iso: AlgebraHom, name=None) -> AlgebraHom:
    """``iso^{-1} o f`` for an isomorphism ``iso: B' -> f.target``."""
    from .linalg import solve

    B = iso.source
    M = iso.matrix()
    images = []
    for v in f.image_vectors:
        c = solve(B.field, M, v, B.length)
        images.append(B.element(c))
    return make_hom(f.source, B, images, name=name)


def represented_instance(inst: Instance) -> Instance:
    """Same maps, with A0 re-presented on one variable per non-unit basis element.

    The new presentation of A0 is far from minimal, so the joint presentation
    has to introduce extra relation variables.
    """
    from .algebra import Subalgebra, present_subalgebra

    A0 = inst.A0
    B, iso = present_subalgebra(Subalgebra(A0, [A0.monomial_vector(m) for m in A0.basis]), "u")
    return Instance(inst.ring, inst.I1, inst.I2, B, inst.A1, inst.A2,
                    _through(inst.f1, iso, "f1"), _through(inst.f2, iso, "f2"))


def restricted_instance(rng: random.Random, inst: Instance, generators: int = 1) -> Instance:
    """Replace A2 by the subalgebra generated by random elements of its maximal
    ideal; f2 restricted to it is usually not surjective."""
    from .algebra import present_subalgebra, subalgebra_generated

    A2 = inst.A2
    F = A2.field
    vecs = [[F.zero] + [F(rng.randrange(F.p or 5)) for _ in range(A2.length - 1)]
            for _ in range(generators)]
    S = subalgebra_generated(A2, vecs)
    B, emb = present_subalgebra(S, "v")
    f2 = make_hom(B, inst.A0, [inst.f2.apply(p) for p in emb.images], name="f2")
    return Instance(inst.ring, inst.I1, inst.I2, inst.A0, inst.A1, B, inst.f1, f2)


def deeper_instance(rng: random.Random, inst: Instance) -> Instance:
    """Canonical maps onto ``k[x]/J`` for ``J`` strictly larger than ``I1 + I2``
    when possible (one extra random element of the maximal ideal).  This is
    the situation of the standard example k[x]/(x^3) over k[x]/(x^2)."""
    A0 = inst.A0
    F = A0.field
    ring = inst.ring
    if A0.length == 1:
        return inst
    j = rng.randrange(1, A0.length)
    v = [F.zero] * A0.length
    v[j] = F.one
    for k in range(j + 1, A0.length):
        if rng.random() < 0.3:
            v[k] = F(rng.randrange(F.p or 5))
    J = ideal_sum(A0.ideal, Ideal(ring, [A0.element(v)]))
    B = ArtinianAlgebra(ring, J)
    gens = ring.gens()
    return Instance(ring, inst.I1, inst.I2, B, inst.A1, inst.A2,
                    make_hom(inst.A1, B, gens), make_hom(inst.A2, B, gens))


def random_mixed_instance(rng: random.Random, field: Field, max_vars: int = 3,
                          max_length: int = 10) -> Instance:
    """Canonical instances most of the time, with re-presented or restricted
    variants mixed in so every branch of the pipeline is exercised."""
    inst = random_instance(rng, field, max_vars, max_length)
    u = rng.random()
    if u < 0.15:
        return represented_instance(inst)
    if u < 0.3:
        return restricted_instance(rng, inst)
    if u < 0.55:
        return deeper_instance(rng, inst)
    return inst


def random_test_pair(rng: random.Random, f1: AlgebraHom, f2: AlgebraHom,
                     generators: int = 2) -> Tuple[AlgebraHom, AlgebraHom]:
    """A random compatible pair ``chi1: A_T -> A1``, ``chi2: A_T -> A2``.

    Each ``t_j`` goes to a random pair ``(a1, a2)`` with ``f1(a1) = f2(a2)``
    and no constant term, drawn from the pullback space.  ``A_T`` is ``k[t]``
    modulo a random ideal inside ``ker chi1 & ker chi2``, so both maps are
    well defined and A_T is usually bigger than their joint image.
    """
    from .algebra import pullback_oracle

    A1, A2 = f1.source, f2.source
    F = A1.field
    names = ("t",) if generators == 1 else tuple(f"t{i}" for i in range(1, generators + 1))
    T = PolyRing(names, F)
    P = pullback_oracle(f1, f2)
    n1 = A1.length
    im1, im2 = [], []
    for _ in range(generators):
        v = [F.zero] * (n1 + A2.length)
        for row in P.space.basis():
            c = F(rng.randrange(F.p or 5))
            if c:
                v = [F.add(a, F.mul(c, b)) for a, b in zip(v, row)]
        c0 = v[0]
        v[0] = F.sub(v[0], c0)
        v[n1] = F.sub(v[n1], c0)
        im1.append(A1.element(v[:n1]))
        im2.append(A2.element(v[n1:]))
    K = ideal_intersection(kernel_of_hom(AlgebraHom(T, A1, im1), method="linear"),
                           kernel_of_hom(AlgebraHom(T, A2, im2), method="linear"))
    e = rng.randint(1, 4)
    KT = ideal_intersection(K, power_of_maximal_ideal(T, e))
    AT = ArtinianAlgebra(T, KT)
    return make_hom(AT, A1, im1, name="chi1"), make_hom(AT, A2, im2, name="chi2")
