"""Finite-dimensional quotient algebras and the maps between them.

An :class:`ArtinianAlgebra` is ``k[x]/I`` for a zero-dimensional ``I``; its
elements are handled as coordinate vectors over the standard-monomial basis.
Everything here past the construction of the Groebner basis is exact linear
algebra, which is what makes :func:`pullback_oracle` independent of the
Groebner-based pipeline in :mod:`amalgam.pushout`.
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    AmbientMismatch,
    IllDefined,
    InputError,
    NotClosed,
    RingMismatch,
    TargetMismatch,
)
from .groebner import GroebnerBasis, Ideal, kernel_of_hom, normal_form, standard_monomials
from .linalg import Subspace, nullspace, rank, solve, transpose
from .polyring import (
    DEGREVLEX,
    Monomial,
    PolyRing,
    Polynomial,
    degrevlex_key,
    divides,
)


class ArtinianAlgebra:
    """``ring / ideal`` with its reduced degrevlex basis and standard monomials."""

    def __init__(self, ring: PolyRing, ideal: Ideal, name: Optional[str] = None):
        if ideal.ring != ring:
            raise RingMismatch(f"ideal lives in {ideal.ring}, not {ring}")
        self.ring = ring
        self.ideal = ideal
        self.name = name
        self.gb: GroebnerBasis = ideal.groebner(DEGREVLEX)
        if self.gb.is_unit():
            raise InputError(f"the ideal {ideal} is the unit ideal (zero algebra)")
        self.basis: List[Monomial] = standard_monomials(self.gb)
        self.index: Dict[Monomial, int] = {m: i for i, m in enumerate(self.basis)}
        self.length = len(self.basis)
        self.field = ring.field
        self._table = None
        self._nf_cache: Dict[Monomial, list] = {}

    def __repr__(self):
        label = f"{self.name} = " if self.name else ""
        return f"<{label}{self.ring}/{self.ideal} length={self.length}>"

    def __eq__(self, other):
        if not isinstance(other, ArtinianAlgebra):
            return NotImplemented
        return self.ring == other.ring and self.gb.elements == other.gb.elements

    def __hash__(self):
        return hash((self.ring, self.gb.elements))

    # -- coordinates ----------------------------------------------------------
    @property
    def unit(self) -> list:
        v = [self.field.zero] * self.length
        v[0] = self.field.one
        return v

    def zero_vector(self) -> list:
        return [self.field.zero] * self.length

    def vector(self, f: Polynomial) -> list:
        """Coordinates of the normal form of ``f`` in the standard-monomial basis."""
        if f.ring != self.ring:
            raise RingMismatch(f"{f} is not in {self.ring}")
        r = normal_form(f, self.gb)
        v = self.zero_vector()
        for m, c in r.terms.items():
            v[self.index[m]] = c
        return v

    def monomial_vector(self, m: Monomial) -> list:
        v = self._nf_cache.get(m)
        if v is None:
            v = self._nf_cache[m] = self.vector(Polynomial(self.ring, {m: self.field.one}))
        return v

    def element(self, v: Sequence) -> Polynomial:
        return Polynomial(self.ring, {self.basis[i]: c for i, c in enumerate(v) if c})

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    # -- multiplication -------------------------------------------------------
    def structure_table(self):
        """``table[i][j]`` = sparse coordinates ``[(k, c)]`` of basis_i * basis_j."""
        if self._table is None:
            L = self.length
            table = [[None] * L for _ in range(L)]
            for i, a in enumerate(self.basis):
                for j in range(i, L):
                    b = self.basis[j]
                    prod = tuple(x + y for x, y in zip(a, b))
                    if prod in self.index:
                        entry = [(self.index[prod], self.field.one)]
                    else:
                        entry = [(k, c) for k, c in enumerate(self.monomial_vector(prod)) if c]
                    table[i][j] = table[j][i] = entry
            self._table = table
        return self._table

    def mul(self, u: Sequence, v: Sequence) -> list:
        F = self.field
        T = self.structure_table()
        out = [F.zero] * self.length
        vnz = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            Ti = T[i]
            for j, b in vnz:
                ab = a * b
                for k, c in Ti[j]:
                    out[k] += ab * c
        if F.p is not None:
            out = [x % F.p for x in out]
        return out

    def power(self, u: Sequence, n: int) -> list:
        result = self.unit
        for _ in range(n):
            result = self.mul(result, u)
        return result

    def mult_matrix(self, u: Sequence) -> List[list]:
        """Matrix (rows = coordinates) of multiplication by ``u``."""
        cols = [self.mul(u, self._basis_unit(j)) for j in range(self.length)]
        return transpose(cols)

    def _basis_unit(self, j):
        v = self.zero_vector()
        v[j] = self.field.one
        return v

    def variable_vectors(self) -> List[list]:
        return [self.vector(g) for g in self.ring.gens()]

    def constant_part(self, v: Sequence):
        return v[0]

    def maximal_ideal_space(self) -> Subspace:
        """Span of the non-unit standard monomials (the maximal ideal when local)."""
        return Subspace(self.field, self.length, [self._basis_unit(j) for j in range(1, self.length)])

    def is_local_at_origin(self) -> bool:
        return is_local_at_origin(self)


def make_algebra(ring: PolyRing, I: Ideal, name: Optional[str] = None) -> ArtinianAlgebra:
    return ArtinianAlgebra(ring, I, name)


def is_local_at_origin(A: ArtinianAlgebra) -> bool:
    """True iff every variable is nilpotent in ``A``."""
    for v in A.variable_vectors():
        if any(A.power(v, A.length)):
            return False
    return True


def element_vector(A: ArtinianAlgebra, f: Polynomial) -> list:
    return A.vector(f)


class DirectSum:
    """``left x right`` with componentwise operations; vectors are concatenated."""

    def __init__(self, left: ArtinianAlgebra, right: ArtinianAlgebra):
        if left.field != right.field:
            raise AmbientMismatch(f"{left.field} vs {right.field}")
        self.left = left
        self.right = right
        self.field = left.field
        self.length = left.length + right.length

    def __eq__(self, other):
        if not isinstance(other, DirectSum):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return hash((self.left, self.right))

    def __repr__(self):
        return f"<DirectSum {self.left!r} (+) {self.right!r}>"

    @property
    def unit(self) -> list:
        return self.left.unit + self.right.unit

    def split(self, v: Sequence) -> Tuple[list, list]:
        n = self.left.length
        return list(v[:n]), list(v[n:])

    def join(self, a: Sequence, b: Sequence) -> list:
        return list(a) + list(b)

    def mul(self, u: Sequence, v: Sequence) -> list:
        u1, u2 = self.split(u)
        v1, v2 = self.split(v)
        return self.left.mul(u1, v1) + self.right.mul(u2, v2)


Ambient = Union[ArtinianAlgebra, DirectSum]


# -- homomorphisms ------------------------------------------------------------


class AlgebraHom:
    """A unital homomorphism fixed by the images of the source's variables.

    ``source`` is an :class:`ArtinianAlgebra` or a free :class:`PolyRing`;
    ``images`` are normal forms in the target's ring, one per source variable.
    Construct through :func:`make_hom` to get the well-definedness check.
    """

    def __init__(self, source, target: ArtinianAlgebra, images: Sequence[Polynomial], name=None):
        self.source = source
        self.target = target
        self.name = name
        self.images: Tuple[Polynomial, ...] = tuple(target.normal_form(p) for p in images)
        self.image_vectors = [target.vector(p) for p in self.images]
        self._mono: Dict[Monomial, list] = {}

    @property
    def source_ring(self) -> PolyRing:
        return self.source if isinstance(self.source, PolyRing) else self.source.ring

    @property
    def is_free(self) -> bool:
        return isinstance(self.source, PolyRing)

    def __repr__(self):
        pairs = ", ".join(f"{v} -> {p}" for v, p in zip(self.source_ring.variables, self.images))
        return f"<AlgebraHom {self.name or ''} {{{pairs}}}>"

    def monomial_image(self, m: Monomial) -> list:
        v = self._mono.get(m)
        if v is not None:
            return v
        if not any(m):
            v = self.target.unit
        else:
            i = next(k for k, d in enumerate(m) if d)
            prev = m[:i] + (m[i] - 1,) + m[i + 1:]
            v = self.target.mul(self.monomial_image(prev), self.image_vectors[i])
        self._mono[m] = v
        return v

    def apply_vector(self, f: Polynomial) -> list:
        if f.ring != self.source_ring:
            raise RingMismatch(f"{f} is not in {self.source_ring}")
        F = self.target.field
        out = self.target.zero_vector()
        for m, c in f.terms.items():
            img = self.monomial_image(m)
            out = [F.add(a, F.mul(c, b)) if b else a for a, b in zip(out, img)]
        return out

    def apply(self, f: Polynomial) -> Polynomial:
        return self.target.element(self.apply_vector(f))

    def __call__(self, f: Polynomial) -> Polynomial:
        return self.apply(f)

    def map_vector(self, v: Sequence) -> list:
        """Image of a source element given in source coordinates."""
        if self.is_free:
            raise TypeError("a free source has no coordinate vectors")
        F = self.target.field
        out = self.target.zero_vector()
        for m, c in zip(self.source.basis, v):
            if c:
                img = self.monomial_image(m)
                out = [F.add(a, F.mul(c, b)) if b else a for a, b in zip(out, img)]
        return out

    def matrix(self) -> List[list]:
        """target.length x source.length matrix; column j = image of basis_j."""
        if self.is_free:
            raise TypeError("a free source has no finite matrix")
        return transpose([self.monomial_image(m) for m in self.source.basis])

    def is_surjective(self) -> bool:
        if self.is_free:
            return hom_image_subspace(self).dim == self.target.length
        return rank(self.target.field, self.matrix()) == self.target.length

    def compose(self, inner: "AlgebraHom") -> "AlgebraHom":
        """``self`` after ``inner``."""
        if inner.target != self.source:
            raise TargetMismatch("composition of non-matching homomorphisms")
        images = [self.apply(p) for p in inner.images]
        return AlgebraHom(inner.source, self.target, images)


def make_hom(source, target: ArtinianAlgebra, images: Sequence, name=None) -> AlgebraHom:
    """Build a homomorphism and check it respects every source relation."""
    src_ring = source if isinstance(source, PolyRing) else source.ring
    if len(images) != src_ring.nvars:
        raise InputError(
            f"{len(images)} images given for the {src_ring.nvars} variables of {src_ring}")
    images = [target.ring.parse(p) if isinstance(p, str) else p for p in images]
    for p in images:
        if p.ring != target.ring:
            raise RingMismatch(f"image {p} is not in {target.ring}")
    h = AlgebraHom(source, target, images, name)
    if not h.is_free:
        for g in source.ideal.generators:
            if any(h.apply_vector(g)):
                raise IllDefined(
                    f"relation {g} of the source does not map to zero", generator=g)
    return h


def identity_hom(A: ArtinianAlgebra) -> AlgebraHom:
    return AlgebraHom(A, A, A.ring.gens())


def homs_agree(h: AlgebraHom, g: AlgebraHom) -> bool:
    """Equality of two maps with the same source and target, on every basis element."""
    if h.target != g.target:
        return False
    if h.is_free or g.is_free:
        return h.images == g.images
    return all(h.monomial_image(m) == g.monomial_image(m) for m in h.source.basis)


# -- subalgebras --------------------------------------------------------------


class Subalgebra:
    """A unital subalgebra of an algebra or a direct sum, as a subspace.

    ``basis_vectors`` starts with the ambient unit; closure under
    multiplication is verified at construction.
    """

    def __init__(self, ambient: Ambient, vectors: Sequence[Sequence], verify: bool = True):
        self.ambient = ambient
        F = ambient.field
        self.space = Subspace(F, ambient.length, vectors)
        unit = ambient.unit
        if not self.space.contains(unit):
            raise NotClosed("a subalgebra must contain the unit")
        basis = [unit]
        span = Subspace(F, ambient.length, [unit])
        for row in self.space.rows:
            if not span.contains(row):
                basis.append(list(row))
                span = Subspace(F, ambient.length, basis)
        self.basis_vectors = basis
        self._sc = None
        if verify:
            self._check_closure()

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains(self, v: Sequence) -> bool:
        return self.space.contains(v)

    def __eq__(self, other):
        if not isinstance(other, Subalgebra):
            return NotImplemented
        return self.ambient == other.ambient and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"<Subalgebra dim={self.dim} of {self.ambient!r}>"

    def issubset(self, other: "Subalgebra") -> bool:
        return other.space.contains_space(self.space)

    def _check_closure(self):
        B = self.basis_vectors
        for i in range(1, len(B)):
            for j in range(i, len(B)):
                if not self.space.contains(self.ambient.mul(B[i], B[j])):
                    raise NotClosed("span is not closed under multiplication")

    def coordinates(self, v: Sequence) -> Optional[list]:
        """Coefficients of ``v`` in :attr:`basis_vectors`, or None."""
        return solve(self.ambient.field, transpose(self.basis_vectors), v, len(self.basis_vectors)) \
            if self.space.contains(v) else None

    @property
    def structure_constants(self) -> List[List[list]]:
        """``c[i][j]`` = coordinates of basis_i * basis_j."""
        if self._sc is None:
            B = self.basis_vectors
            self._sc = [[self.coordinates(self.ambient.mul(a, b)) for b in B] for a in B]
        return self._sc


def subalgebra_generated(ambient: Ambient, generators: Sequence[Sequence]) -> Subalgebra:
    """Smallest unital subalgebra containing ``generators``."""
    F = ambient.field
    vecs = [ambient.unit] + [list(g) for g in generators]
    space = Subspace(F, ambient.length, vecs)
    frontier = list(space.rows)
    while frontier:
        new = []
        for a in frontier:
            for b in list(space.rows):
                p = ambient.mul(a, b)
                if not space.contains(p):
                    space = Subspace(F, ambient.length, space.rows + [p])
                    new.append(p)
        frontier = new
    return Subalgebra(ambient, space.rows)


def hom_image_subspace(h: AlgebraHom) -> Subalgebra:
    if h.is_free:
        return subalgebra_generated(h.target, h.image_vectors)
    cols = [h.monomial_image(m) for m in h.source.basis]
    return Subalgebra(h.target, cols)


def subspace_intersection(U: Subalgebra, V: Subalgebra) -> Subalgebra:
    if U.ambient != V.ambient:
        raise AmbientMismatch("subalgebras of different ambients")
    return Subalgebra(U.ambient, U.space.intersection(V.space).rows)


def hom_preimage_subalgebra(h: AlgebraHom, S: Subalgebra) -> Subalgebra:
    """``{a in source : h(a) in S}``."""
    if S.ambient != h.target:
        raise AmbientMismatch("subalgebra does not live in the homomorphism's target")
    F = h.target.field
    M = h.matrix()
    B = S.basis_vectors
    n = h.source.length
    # columns: source basis images, then -S basis; kernel vectors give the preimage
    big = [list(row) + [F.neg(b[r]) for b in B] for r, row in enumerate(M)]
    vecs = [sol[:n] for sol in nullspace(F, big, n + len(B))]
    return Subalgebra(h.source, vecs)


def _short_names(prefix: str, count: int) -> Tuple[str, ...]:
    if count == 1:
        return (prefix,)
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def present_subalgebra(S: Subalgebra, prefix: str = "u") -> Tuple[ArtinianAlgebra, AlgebraHom]:
    """A quotient ``k[u]/K`` with an isomorphism onto ``S``.

    One variable per non-unit basis vector of ``S`` (taken from its echelon
    basis, so each has zero constant term); ``K`` is the kernel of the map
    ``k[u] -> ambient``, computed by graph elimination.
    """
    A = S.ambient
    if not isinstance(A, ArtinianAlgebra):
        raise AmbientMismatch("only subalgebras of a quotient algebra can be presented")
    F = A.field
    gens = [row for row, pc in zip(S.space.rows, S.space.pivots) if pc != 0]
    if len(gens) != S.dim - 1:
        raise NotClosed("subalgebra echelon basis does not split off the unit")
    ring = PolyRing(_short_names(prefix, len(gens)), F)
    images = [A.element(v) for v in gens]
    free = AlgebraHom(ring, A, images)
    K = kernel_of_hom(free)
    P = ArtinianAlgebra(ring, K)
    iso = make_hom(P, A, images)
    if P.length != S.dim or rank(F, iso.matrix()) != S.dim:
        raise NotClosed("presentation is not isomorphic to the subalgebra")
    img = Subspace(F, A.length, transpose(iso.matrix()))
    if img != S.space:
        raise NotClosed("presentation image differs from the subalgebra")
    for i, a in enumerate(P.basis):
        for b in P.basis[i:]:
            prod = tuple(x + y for x, y in zip(a, b))
            lhs = iso.map_vector(P.monomial_vector(prod))
            rhs = A.mul(iso.monomial_image(a), iso.monomial_image(b))
            if lhs != rhs:
                raise NotClosed("presentation map is not multiplicative")
    return P, iso


def pullback_oracle(f1: AlgebraHom, f2: AlgebraHom) -> Subalgebra:
    """``{(a1, a2) : f1(a1) = f2(a2)}`` inside ``A1 (+) A2``, by one nullspace."""
    if f1.target != f2.target:
        raise TargetMismatch("the two homomorphisms have different targets")
    F = f1.target.field
    M1, M2 = f1.matrix(), f2.matrix()
    big = [list(r1) + [F.neg(x) for x in r2] for r1, r2 in zip(M1, M2)]
    n = f1.source.length + f2.source.length
    vecs = nullspace(F, big, n)
    return Subalgebra(DirectSum(f1.source, f2.source), vecs)


def pair_image(ambient: DirectSum, g1: AlgebraHom, g2: AlgebraHom) -> Subspace:
    """Image of a common source under ``(g1, g2)`` inside ``ambient``."""
    F = ambient.field
    vecs = [g1.monomial_image(m) + g2.monomial_image(m) for m in g1.source.basis]
    return Subspace(F, ambient.length, vecs)


def linear_kernel(h: AlgebraHom) -> Ideal:
    """Kernel of ``k[x] -> target`` by enumerating monomials (Buchberger-Moeller).

    Pure linear algebra: monomials are visited in increasing degrevlex order,
    and every image that is linearly dependent on the images of earlier
    standard monomials yields a reduced Groebner basis element.  Used as an
    independent check on the elimination route of :func:`kernel_of_hom`.
    """
    ring = h.source_ring
    F = ring.field
    L = h.target.length
    n = ring.nvars
    echelon: List[Tuple[int, list, Dict[Monomial, object]]] = []
    std: List[Monomial] = []
    lms: List[Monomial] = []
    gb: List[Polynomial] = []
    start = (0,) * n
    heap = [(degrevlex_key(start), start)]
    seen = {start}
    while heap:
        _, m = heapq.heappop(heap)
        if any(divides(lm, m) for lm in lms):
            continue
        v = list(h.monomial_image(m))
        comb: Dict[Monomial, object] = {m: F.one}
        for pc, row, rcomb in echelon:
            c = v[pc]
            if c:
                v = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(v, row)]
                for mm, cc in rcomb.items():
                    val = F.sub(comb.get(mm, F.zero), F.mul(c, cc))
                    if val:
                        comb[mm] = val
                    else:
                        comb.pop(mm, None)
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            gb.append(Polynomial(ring, comb))
            lms.append(m)
            continue
        inv = F.inv(v[piv])
        v = [F.mul(inv, a) for a in v]
        comb = {mm: F.mul(inv, cc) for mm, cc in comb.items()}
        # keep the echelon reduced so later reductions stay single-pass
        new_echelon = []
        for pc, row, rcomb in echelon:
            c = row[piv]
            if c:
                row = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(row, v)]
                rc = dict(rcomb)
                for mm, cc in comb.items():
                    val = F.sub(rc.get(mm, F.zero), F.mul(c, cc))
                    if val:
                        rc[mm] = val
                    else:
                        rc.pop(mm, None)
                rcomb = rc
            new_echelon.append((pc, row, rcomb))
        new_echelon.append((piv, v, comb))
        echelon = new_echelon
        std.append(m)
        if len(std) > L:
            raise InputError("image is larger than the target")
        for i in range(n):
            e = m[:i] + (m[i] + 1,) + m[i + 1:]
            if e not in seen:
                seen.add(e)
                heapq.heappush(heap, (degrevlex_key(e), e))
    gb = [g.monic() for g in gb]
    gb.sort(key=lambda g: degrevlex_key(g.leading_monomial()), reverse=True)
    return Ideal(ring, gb)
