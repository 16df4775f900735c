"""Reference computations that share no code with the package's algorithms.

* SymPy's Groebner bases (modular and rational) for reduced bases;
* brute-force enumeration of all vectors over a tiny prime field for
  pullbacks, images and principal ideals;
* naive cell-set unions for Young diagrams.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy

from amalgam.polyring import LEX, DEGREVLEX, Polynomial, PolyRing


def sympy_gb(ring: PolyRing, generators, order=DEGREVLEX):
    """Reduced Groebner basis from SymPy, converted to package polynomials."""
    syms = sympy.symbols(ring.variables)
    if ring.nvars == 1:
        syms = (syms,) if not isinstance(syms, tuple) else syms
    exprs = []
    for g in generators:
        e = 0
        for m, c in g.terms.items():
            coeff = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else int(c)
            e += coeff * sympy.prod([s ** k for s, k in zip(syms, m)])
        exprs.append(e)
    kw = {"order": "grevlex" if order == DEGREVLEX else "lex"}
    if ring.field.p is not None:
        kw["modulus"] = ring.field.p
    G = sympy.groebner(exprs, *syms, **kw)
    out = []
    for g in G.exprs:
        P = sympy.Poly(g, *syms, **({"modulus": ring.field.p} if ring.field.p else {}))
        terms = {}
        for m, c in P.terms():
            if ring.field.p is not None:
                terms[tuple(m)] = ring.field(int(c))
            else:
                terms[tuple(m)] = ring.field(Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])))
        out.append(Polynomial(ring, terms).monic(order))
    return out


def all_vectors(p: int, n: int):
    return product(range(p), repeat=n)


def brute_pullback_size(f1, f2) -> int:
    """Number of pairs (a1, a2) with f1(a1) = f2(a2), by full enumeration."""
    p = f1.target.field.p
    images2 = {}
    for a2 in all_vectors(p, f2.source.length):
        key = tuple(f2.map_vector(list(a2)))
        images2[key] = images2.get(key, 0) + 1
    total = 0
    for a1 in all_vectors(p, f1.source.length):
        total += images2.get(tuple(f1.map_vector(list(a1))), 0)
    return total


def brute_image_size(h) -> int:
    p = h.target.field.p
    return len({tuple(h.map_vector(list(a))) for a in all_vectors(p, h.source.length)})


def span_size(A, vectors) -> int:
    p = A.field.p
    seen = set()
    for coeffs in all_vectors(p, len(vectors)):
        v = [0] * A.length
        for c, w in zip(coeffs, vectors):
            v = [(a + c * b) % p for a, b in zip(v, w)]
        seen.add(tuple(v))
    return len(seen)


def principal_ideal(A, a):
    """The set of all multiples a*b, by enumerating b."""
    p = A.field.p
    return frozenset(tuple(A.mul(list(a), list(b))) for b in all_vectors(p, A.length))


def maximal_principal_generators(A):
    """Generators a (in m) of principal ideals maximal among proper principal ideals."""
    p = A.field.p
    ideals = {}
    for a in all_vectors(p, A.length):
        if a[0] == 0 and any(a):
            ideals[a] = principal_ideal(A, a)
    distinct = set(ideals.values())
    maximal = {I for I in distinct if not any(I < J for J in distinct)}
    return [a for a, I in ideals.items() if I in maximal]


def naive_staircase(ideal_monomials, nvars, bound):
    """All exponent vectors below ``bound`` in each coordinate not divisible by a generator."""
    cells = set()
    for e in product(range(bound), repeat=nvars):
        if not any(all(a >= b for a, b in zip(e, g)) for g in ideal_monomials):
            cells.add(e)
    return cells


def lex_gb(ring, generators):
    return sympy_gb(ring, generators, LEX)


def rank_mod_p(rows, p: int) -> int:
    """Rank over GF(p) via SymPy's DomainMatrix."""
    from sympy import GF as SGF
    from sympy.polys.matrices import DomainMatrix

    rows = [list(r) for r in rows]
    if not rows:
        return 0
    K = SGF(p)
    return DomainMatrix([[K(int(x)) for x in r] for r in rows], (len(rows), len(rows[0])), K).rank()
