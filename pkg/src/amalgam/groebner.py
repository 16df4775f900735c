"""Ideals, Buchberger's algorithm and the ideal operations built on it.

The engine works on raw ``{exponent: coefficient}`` dicts and only wraps the
results into :class:`~amalgam.polyring.Polynomial` at the end.  Pairs are
pruned with the Gebauer-Moeller criteria and selected by the normal strategy
(smallest lcm degree first, ties by generator index), so every run on the
same input performs the same steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputError, NotZeroDimensional, ResourceLimit, RingMismatch
from .polyring import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    block_order,
    degrevlex_key,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
)


@dataclass
class Limits:
    """Caps that turn runaway Groebner computations into :class:`ResourceLimit`."""

    max_basis: int = 2000
    max_degree: int = 64


LIMITS = Limits()


def set_limits(max_basis: Optional[int] = None, max_degree: Optional[int] = None) -> None:
    if max_basis is not None:
        LIMITS.max_basis = max_basis
    if max_degree is not None:
        LIMITS.max_degree = max_degree


class Ideal:
    """An ideal given by generators; zero generators are dropped."""

    def __init__(self, ring: PolyRing, generators: Sequence[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} is not in {ring}")
            if g.terms:
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb: Dict[MonomialOrder, "GroebnerBasis"] = {}

    def groebner(self, order: MonomialOrder = DEGREVLEX) -> "GroebnerBasis":
        if order not in self._gb:
            self._gb[order] = buchberger(self, order)
        return self._gb[order]

    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self.groebner())

    def __contains__(self, f):
        return self.contains(f)

    def same_as(self, other: "Ideal") -> bool:
        """Equality of ideals, decided by reduced degrevlex bases."""
        return self.ring == other.ring and self.groebner().elements == other.groebner().elements

    def __add__(self, other):
        return ideal_sum(self, other)

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self}"


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by decreasing leading monomial."""

    def __init__(self, ideal: Ideal, order: MonomialOrder, elements: Sequence[Polynomial]):
        self.ideal = ideal
        self.ring = ideal.ring
        self.order = order
        self.elements: Tuple[Polynomial, ...] = tuple(elements)
        self.leading_monomials: Tuple[Monomial, ...] = tuple(
            g.leading_monomial(order) for g in self.elements)
        self._raw = [(lm, g.terms) for lm, g in zip(self.leading_monomials, self.elements)]
        self._std = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials)

    def is_zero_dimensional(self) -> bool:
        n = self.ring.nvars
        pure = set()
        for lm in self.leading_monomials:
            support = [i for i, d in enumerate(lm) if d]
            if len(support) == 1:
                pure.add(support[0])
            elif not support:
                return True
        return len(pure) == n

    def standard_monomials(self) -> List[Monomial]:
        return standard_monomials(self)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.elements) + "}"


# -- the engine ---------------------------------------------------------------


def _reduce(f: Dict, G, key, F, full: bool = True) -> Dict:
    """Remainder of ``f`` (consumed) on division by monic ``G = [(lm, terms)]``."""
    rem: Dict = {}
    p = F.p
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, g in G:
            if divides(lm, m):
                q = mono_div(m, lm)
                for e, a in g.items():
                    me = mono_mul(e, q)
                    if p is not None:
                        v = (f.get(me, 0) - c * a) % p
                    else:
                        v = f.get(me, 0) - c * a
                    if v:
                        f[me] = v
                    else:
                        del f[me]
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                return rem
    return rem


def _monic(f: Dict, key, F) -> Tuple[Monomial, Dict]:
    lm = max(f, key=key)
    inv = F.inv(f[lm])
    return lm, {m: F.mul(c, inv) for m, c in f.items()}


def _spoly(f, flm, g, glm, F) -> Dict:
    L = mono_lcm(flm, glm)
    qf, qg = mono_div(L, flm), mono_div(L, glm)
    out: Dict = {}
    for e, a in f.items():
        out[mono_mul(e, qf)] = a
    for e, a in g.items():
        me = mono_mul(e, qg)
        v = F.sub(out.get(me, F.zero), a)
        if v:
            out[me] = v
        else:
            out.pop(me, None)
    return out


def _disjoint(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def buchberger(ideal: Ideal, order: MonomialOrder = DEGREVLEX,
               limits: Optional[Limits] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` with respect to ``order``."""
    limits = limits or LIMITS
    ring = ideal.ring
    F = ring.field
    cache: Dict[Monomial, object] = {}

    def key(m):
        k = cache.get(m)
        if k is None:
            k = cache[m] = order.key(m)
        return k

    gens = [dict(g.terms) for g in ideal.generators]
    if not gens:
        return GroebnerBasis(ideal, order, [])

    if all(len(g) == 1 for g in gens):
        monos = sorted({next(iter(g)) for g in gens}, key=key)
        minimal = [m for i, m in enumerate(monos)
                   if not any(divides(o, m) for o in monos[:i])]
        elems = [Polynomial(ring, {m: F.one}) for m in sorted(minimal, key=key, reverse=True)]
        return GroebnerBasis(ideal, order, elems)

    polys: List[Tuple[Monomial, Dict]] = []
    active: List[int] = []
    pairs: List[Tuple[int, int, Monomial]] = []

    def update(h: int):
        nonlocal active, pairs
        hlm = polys[h][0]
        C = [(g, mono_lcm(polys[g][0], hlm)) for g in active]
        D = []
        while C:
            g1, L1 = C.pop(0)
            if (_disjoint(polys[g1][0], hlm)
                    or not any(divides(L2, L1) for _, L2 in C + D)):
                D.append((g1, L1))
        new_pairs = [(min(g, h), max(g, h), L) for g, L in D
                     if not _disjoint(polys[g][0], hlm)]
        survivors = []
        for (a, b, L) in pairs:
            if (divides(hlm, L)
                    and mono_lcm(polys[a][0], hlm) != L
                    and mono_lcm(polys[b][0], hlm) != L):
                continue
            survivors.append((a, b, L))
        pairs = survivors + new_pairs
        active = [g for g in active if not divides(hlm, polys[g][0])] + [h]

    def add(f: Dict):
        lm, mf = _monic(f, key, F)
        if sum(lm) > limits.max_degree:
            raise ResourceLimit(f"intermediate degree {sum(lm)} exceeds {limits.max_degree}")
        polys.append((lm, mf))
        if len(polys) > limits.max_basis:
            raise ResourceLimit(f"basis size exceeds {limits.max_basis}")
        update(len(polys) - 1)

    for g in gens:
        r = _reduce(dict(g), [polys[i] for i in active], key, F)
        if r:
            add(r)

    while pairs:
        best = min(range(len(pairs)), key=lambda t: (sum(pairs[t][2]), pairs[t][0], pairs[t][1]))
        a, b, L = pairs.pop(best)
        if sum(L) > limits.max_degree:
            raise ResourceLimit(f"S-pair degree {sum(L)} exceeds {limits.max_degree}")
        s = _spoly(polys[a][1], polys[a][0], polys[b][1], polys[b][0], F)
        r = _reduce(s, [polys[i] for i in active], key, F)
        if r:
            add(r)

    # minimal basis, then tail-reduce each element against the others
    basis = [polys[i] for i in active]
    basis = [(lm, g) for k, (lm, g) in enumerate(basis)
             if not any(divides(o, lm) and (o != lm or j < k) for j, (o, _) in enumerate(basis) if j != k)]
    reduced = []
    for k, (lm, g) in enumerate(basis):
        others = [basis[j] for j in range(len(basis)) if j != k]
        tail = dict(g)
        lc = tail.pop(lm)
        r = _reduce(tail, others, key, F)
        r[lm] = lc
        reduced.append(_monic(r, key, F))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return GroebnerBasis(ideal, order, [Polynomial(ring, g) for _, g in reduced])


# -- operations on bases ------------------------------------------------------


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if f.ring != gb.ring:
        raise RingMismatch(f"{f.ring} vs {gb.ring}")
    order = gb.order
    r = _reduce(dict(f.terms), gb._raw, order.key, f.ring.field)
    return Polynomial(f.ring, r)


def standard_monomials(gb: GroebnerBasis) -> List[Monomial]:
    """Monomials outside the leading ideal, in increasing degrevlex order."""
    if gb._std is not None:
        return list(gb._std)
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional(
            f"infinitely many standard monomials for the ideal {gb.ideal} in {gb.ring}")
    n = gb.ring.nvars
    lms = gb.leading_monomials
    if any(not any(lm) for lm in lms):
        gb._std = []
        return []
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                e = m[:i] + (m[i] + 1,) + m[i + 1:]
                if e in seen or any(divides(lm, e) for lm in lms):
                    continue
                seen.add(e)
                nxt.append(e)
        frontier = nxt
    gb._std = sorted(seen, key=degrevlex_key)
    return list(gb._std)


def minimal_basis(I: Ideal) -> Ideal:
    """Drop generators that lie in the ideal spanned by the remaining ones."""
    kept = list(I.generators)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and not normal_form(kept[i], Ideal(I.ring, others).groebner()):
            kept.pop(i)
        else:
            i += 1
    return Ideal(I.ring, kept)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return Ideal(I.ring, I.generators + J.generators)


def _fresh(names: Sequence[str], base: str) -> str:
    name = base
    while name in names:
        name = "_" + name
    return name


def eliminate(I: Ideal, count: int) -> Ideal:
    """``I`` intersected with the subring of the last ``nvars - count`` variables."""
    ring = I.ring
    if not 0 <= count <= ring.nvars:
        raise ValueError(f"cannot eliminate {count} of {ring.nvars} variables")
    sub = PolyRing(ring.variables[count:], ring.field)
    gb = buchberger(I, block_order(count))
    keep = []
    for g in gb.elements:
        if all(not any(m[:count]) for m in g.terms):
            keep.append(Polynomial(sub, {m[count:]: c for m, c in g.terms.items()}))
    return Ideal(sub, keep)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """``I`` meet ``J`` via t*I + (1 - t)*J and elimination of t."""
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    t_name = _fresh(ring.variables, "t")
    big = PolyRing((t_name,) + ring.variables, ring.field)
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [t * g.change_ring(big, shift) for g in I.generators]
    gens += [(1 - t) * g.change_ring(big, shift) for g in J.generators]
    out = eliminate(Ideal(big, gens), 1)
    return Ideal(ring, [Polynomial(ring, g.terms) for g in out.generators])


def graph_kernel(source: PolyRing, target_gb: GroebnerBasis,
                 images: Sequence[Polynomial], known: Sequence[Polynomial] = ()) -> Ideal:
    """Kernel of k[source] -> k[z]/J sending variable j to ``images[j]``.

    Works in k[z, x] with the ideal J + (x_j - images[j]) and eliminates z.
    ``known`` are source polynomials already known to lie in the kernel; adding
    them changes nothing in the answer but can keep the elimination small.
    """
    tring = target_gb.ring
    if len(images) != source.nvars:
        raise InputError(f"{len(images)} images for {source.nvars} variables")
    k = tring.nvars
    names = [f"{v}~t" for v in tring.variables]
    names += [_fresh(names, v) for v in source.variables]
    big = PolyRing(tuple(names), source.field)
    zpos = list(range(k))
    xpos = list(range(k, k + source.nvars))
    gens = [g.change_ring(big, zpos) for g in target_gb.elements]
    for j, img in enumerate(images):
        if img.ring != tring:
            raise RingMismatch(f"image {img} is not in {tring}")
        gens.append(big.gen(k + j) - img.change_ring(big, zpos))
    gens += [p.change_ring(big, xpos) for p in known]
    out = eliminate(Ideal(big, gens), k)
    return Ideal(source, [Polynomial(source, g.terms) for g in out.generators])


def _nilpotency_index(target, v) -> Optional[int]:
    """Least k with v^k = 0 in the algebra ``target``, or None if v is not nilpotent."""
    if v[0]:
        return None
    p, k = v, 1
    while any(p):
        if k > target.length:
            return None
        p = target.mul(p, v)
        k += 1
    return k


def kernel_of_hom(h, method: str = "graph") -> Ideal:
    """Kernel of an :class:`~amalgam.algebra.AlgebraHom`, pulled back to its source's
    polynomial ring (for an algebra source this is the kernel of the composite).

    Variables with nilpotent images contribute the pure power that kills them;
    this bounds every degree during elimination.  ``method="linear"`` instead
    enumerates monomials against the target's basis, which is much faster for
    dense images but relies on the target being finite-dimensional.
    """
    if method == "linear":
        from .algebra import linear_kernel

        return linear_kernel(h)
    if method != "graph":
        raise ValueError(f"unknown kernel method {method!r}")
    source_ring = h.source_ring
    known = []
    for j, v in enumerate(h.image_vectors):
        k = _nilpotency_index(h.target, v)
        if k is not None:
            e = [0] * source_ring.nvars
            e[j] = k
            known.append(source_ring.monomial(tuple(e)))
    return graph_kernel(source_ring, h.target.gb, h.images, known)
