"""Fibred products of local Artinian algebras (amalgams of zero-dimensional schemes).

Given ``A1 --f1--> A0 <--f2-- A2`` the pipeline is

1. :func:`reduce_to_surjective` -- replace ``A0`` by ``im f1 & im f2`` and
   ``A_i`` by the preimages, so both maps become onto;
2. :func:`build_joint_representation` -- present all three algebras as
   quotients of one polynomial ring so that ``I0 = I1 + I2``;
3. :func:`easy_case` -- read off the product from the monomials of a
   fuzzy point ``k[x]/m^d`` and the relations among their images.

:func:`amalgamate` runs all three and checks the result against the
linear-algebra pullback from :func:`~amalgam.algebra.pullback_oracle`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    AlgebraHom,
    ArtinianAlgebra,
    DirectSum,
    Subalgebra,
    hom_image_subspace,
    hom_preimage_subalgebra,
    homs_agree,
    identity_hom,
    is_local_at_origin,
    make_hom,
    pair_image,
    present_subalgebra,
    pullback_oracle,
    subspace_intersection,
)
from .errors import (
    CertificateFailure,
    IllDefined,
    InputError,
    NotLocal,
    NotSurjective,
    SquareDoesNotCommute,
    TargetMismatch,
)
from .groebner import (
    Ideal,
    eliminate,
    ideal_intersection,
    ideal_sum,
    kernel_of_hom,
    minimal_basis,
    normal_form,
)
from .linalg import Subspace, nullspace, rank, solve, transpose
from .polyring import DEGREVLEX, Monomial, PolyRing, Polynomial, degrevlex_key

log = logging.getLogger(__name__)

# preimage search enumerates supports; beyond this length fall back to one solve
_SPARSE_SEARCH_LIMIT = 16


@dataclass
class SurjectiveData:
    a0p: ArtinianAlgebra
    a1p: ArtinianAlgebra
    a2p: ArtinianAlgebra
    f1p: AlgebraHom
    f2p: AlgebraHom
    embed0: AlgebraHom
    embed1: AlgebraHom
    embed2: AlgebraHom
    unchanged: bool


@dataclass
class GeneratorLift:
    g: List[Polynomial]
    g1lift: List[Polynomial]
    g2lift: List[Polynomial]
    extension1: List[Polynomial]
    extension2: List[Polynomial]

    @property
    def s(self) -> int:
        return len(self.g)

    @property
    def m(self) -> int:
        return self.s + len(self.extension1)

    @property
    def n(self) -> int:
        return self.m + len(self.extension2)


@dataclass
class JointPresentation:
    """Three surjections from one ring with ``ker h0 = ker h1 + ker h2``."""

    ring: PolyRing
    x_count: int
    h0: AlgebraHom
    h1: AlgebraHom
    h2: AlgebraHom
    f1: AlgebraHom
    f2: AlgebraHom
    kappa: List[Polynomial]
    I0: Ideal
    I1: Ideal
    I2: Ideal
    proposition1: bool
    lift: Optional[GeneratorLift] = None

    @property
    def r(self) -> int:
        return len(self.kappa)


@dataclass
class EasyCaseTrace:
    d: int
    d_paper: int
    M: List[Monomial]
    L: List[list]
    result_ideal: Ideal
    ring: PolyRing
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def d_used(self) -> int:
        return self.d

    @property
    def rank_L(self) -> int:
        return len(self.L)

    @property
    def F(self) -> ArtinianAlgebra:
        """The fuzzy point ``k[x]/m^d`` (built on demand)."""
        from .young import power_of_maximal_ideal

        return ArtinianAlgebra(self.ring, power_of_maximal_ideal(self.ring, self.d))

    def M_strings(self) -> List[str]:
        return [self.ring.monomial_str(m) for m in self.M]


@dataclass
class AmalgamResult:
    A: ArtinianAlgebra
    to_a1: AlgebraHom
    to_a2: AlgebraHom
    f1: AlgebraHom
    f2: AlgebraHom
    trace: EasyCaseTrace
    joint: JointPresentation
    surjective: SurjectiveData
    certificates: Dict[str, bool] = field(default_factory=dict)

    @property
    def ideal(self) -> Ideal:
        return self.trace.result_ideal

    @property
    def length(self) -> int:
        return self.A.length

    def image(self) -> Subspace:
        """Image of ``A`` in ``A1 (+) A2`` under the two projections."""
        return pair_image(DirectSum(self.f1.source, self.f2.source), self.to_a1, self.to_a2)


# -- helpers ------------------------------------------------------------------


def _names(prefix: str, count: int) -> Tuple[str, ...]:
    if count == 1:
        return (prefix,)
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def _require_local(*algebras: ArtinianAlgebra):
    for A in algebras:
        if not is_local_at_origin(A):
            raise NotLocal(f"{A!r} is not local at the origin")


def _square_space(A: ArtinianAlgebra) -> Subspace:
    """Span of products of pairs of non-unit basis monomials (m^2 for local A)."""
    T = A.structure_table()
    vecs = []
    for i in range(1, A.length):
        for j in range(i, A.length):
            if T[i][j]:
                v = A.zero_vector()
                for k, c in T[i][j]:
                    v[k] = c
                vecs.append(v)
    return Subspace(A.field, A.length, vecs)


def _basis_vector(A: ArtinianAlgebra, j: int) -> list:
    v = A.zero_vector()
    v[j] = A.field.one
    return v


def _sparse_preimage(f: AlgebraHom, target: Sequence) -> list:
    """Preimage of ``target`` with fewest terms; ties go to the degrevlex-least
    leading monomial, then to the first support in enumeration order."""
    F = f.target.field
    M = f.matrix()
    n = f.source.length
    if not any(target):
        return f.source.zero_vector()
    if n > _SPARSE_SEARCH_LIMIT:
        x = solve(F, M, target, n)
        if x is None:
            raise NotSurjective("element has no preimage")
        return x
    for k in range(1, n + 1):
        for hi in range(k - 1, n):
            for rest in combinations(range(hi), k - 1):
                support = list(rest) + [hi]
                sub = [[row[j] for j in support] for row in M]
                x = solve(F, sub, target, k)
                if x is not None:
                    full = f.source.zero_vector()
                    for j, c in zip(support, x):
                        full[j] = c
                    return full
    raise NotSurjective("element has no preimage")


# -- reduction to surjective maps ---------------------------------------------


def _induced(f: AlgebraHom, src: ArtinianAlgebra, e_src: AlgebraHom,
             dst: ArtinianAlgebra, e_dst: AlgebraHom) -> AlgebraHom:
    """The map src -> dst with e_dst o result = f o e_src."""
    F = dst.field
    Md = e_dst.matrix()
    images = []
    for v in e_src.image_vectors:
        w = f.map_vector(v)
        c = solve(F, Md, w, dst.length)
        if c is None:
            raise CertificateFailure("restricted map leaves the intersection of images")
        images.append(dst.element(c))
    return make_hom(src, dst, images)


def reduce_to_surjective(f1: AlgebraHom, f2: AlgebraHom) -> SurjectiveData:
    """Restrict to ``A'0 = im f1 & im f2`` and ``A'i = f_i^{-1}(A'0)``."""
    if f1.target != f2.target:
        raise TargetMismatch("f1 and f2 have different targets")
    A0, A1, A2 = f1.target, f1.source, f2.source
    if f1.is_surjective() and f2.is_surjective():
        return SurjectiveData(A0, A1, A2, f1, f2, identity_hom(A0), identity_hom(A1),
                              identity_hom(A2), unchanged=True)
    S0 = subspace_intersection(hom_image_subspace(f1), hom_image_subspace(f2))
    a0p, e0 = present_subalgebra(S0)
    a1p, e1 = present_subalgebra(hom_preimage_subalgebra(f1, S0))
    a2p, e2 = present_subalgebra(hom_preimage_subalgebra(f2, S0))
    f1p = _induced(f1, a1p, e1, a0p, e0)
    f2p = _induced(f2, a2p, e2, a0p, e0)
    for f, fp, e in ((f1, f1p, e1), (f2, f2p, e2)):
        if not fp.is_surjective():
            raise CertificateFailure("restricted map is not surjective")
        for m in fp.source.basis:
            lhs = f.map_vector(e.monomial_image(m))
            rhs = e0.map_vector(fp.monomial_image(m))
            if lhs != rhs:
                raise CertificateFailure("restriction square does not commute")
    return SurjectiveData(a0p, a1p, a2p, f1p, f2p, e0, e1, e2, unchanged=False)


# -- hard case ----------------------------------------------------------------


def choose_generators_a0(A0: ArtinianAlgebra) -> List[Polynomial]:
    """Standard monomials of ``A0`` whose classes form a basis of m/m^2.

    These generate the maximal principal ideals of the local algebra and are
    k-linearly independent; scanned in increasing degrevlex order.
    """
    if not is_local_at_origin(A0):
        raise NotLocal(f"{A0!r} is not local at the origin")
    span = _square_space(A0)
    chosen = []
    for j in range(1, A0.length):
        v = _basis_vector(A0, j)
        if not span.contains(v):
            chosen.append(A0.element(v))
            span = span.sum(Subspace(A0.field, A0.length, [v]))
    return chosen


def _lifts_and_extension(f: AlgebraHom, g_vectors: List[list]) -> Tuple[List[list], List[list]]:
    A = f.source
    lifts = [_sparse_preimage(f, g) for g in g_vectors]
    span = _square_space(A).sum(Subspace(A.field, A.length, lifts))
    if span.dim != _square_space(A).dim + len(lifts):
        raise CertificateFailure("lifted generators are dependent modulo m^2")
    ext = []
    for w in nullspace(A.field, f.matrix(), A.length):
        if span.dim == A.length - 1:
            break
        if not span.contains(w):
            ext.append(w)
            span = span.sum(Subspace(A.field, A.length, [w]))
    if span.dim != A.length - 1:
        raise CertificateFailure("lifts and kernel do not span the maximal ideal")
    return lifts, ext


def joint_from_homs(ring: PolyRing, h0: AlgebraHom, h1: AlgebraHom, h2: AlgebraHom,
                    f1: AlgebraHom, f2: AlgebraHom, x_count: Optional[int] = None,
                    kappa: Sequence[Polynomial] = (), lift: Optional[GeneratorLift] = None
                    ) -> JointPresentation:
    """Compute the three kernels and the ``I0 = I1 + I2`` certificate."""
    for h, A in ((h0, f1.target), (h1, f1.source), (h2, f2.source)):
        if h.target != A:
            raise TargetMismatch("presentation does not match the given homomorphisms")
        if not h.is_surjective():
            raise NotSurjective(f"presentation of {A!r} is not surjective")
    for j in range(ring.nvars):
        if (f1.map_vector(h1.image_vectors[j]) != h0.image_vectors[j]
                or f2.map_vector(h2.image_vectors[j]) != h0.image_vectors[j]):
            raise CertificateFailure(f"h0 != f_i o h_i on variable {ring.variables[j]}")
    I0, I1, I2 = kernel_of_hom(h0), kernel_of_hom(h1), kernel_of_hom(h2)
    prop1 = ideal_sum(I1, I2).groebner().elements == I0.groebner().elements
    return JointPresentation(ring, ring.nvars if x_count is None else x_count, h0, h1, h2,
                             f1, f2, list(kappa), I0, I1, I2, prop1, lift)


def shared_joint(f1: AlgebraHom, f2: AlgebraHom) -> JointPresentation:
    """Use the inputs' own common ring when f1, f2 are canonical quotient maps."""
    A0, A1, A2 = f1.target, f1.source, f2.source
    ring = A1.ring
    if not (A0.ring == ring and A2.ring == ring):
        raise InputError("shared representation needs one ring for A0, A1, A2")
    gens = ring.gens()
    for f in (f1, f2):
        if list(f.images) != [A0.normal_form(g) for g in gens]:
            raise InputError("shared representation needs identity variable images")
    hs = [AlgebraHom(ring, A, gens) for A in (A0, A1, A2)]
    joint = joint_from_homs(ring, hs[0], hs[1], hs[2], f1, f2)
    if not joint.proposition1:
        raise CertificateFailure("shared ring does not present A0 as the tensor product")
    return joint


def build_joint_representation(f1: AlgebraHom, f2: AlgebraHom, swap: bool = False,
                               redundant: int = 0) -> JointPresentation:
    """One ring ``k[x, y]`` with surjections h0, h1, h2 onto A0, A1, A2 and
    ``ker h0 = ker h1 + ker h2``.

    ``swap`` lists A2's extra generators before A1's; ``redundant`` appends
    that many superfluous variables (squares of earlier ones).  Both only
    change the presentation, never the resulting amalgam.
    """
    if f1.target != f2.target:
        raise TargetMismatch("f1 and f2 have different targets")
    A0, A1, A2 = f1.target, f1.source, f2.source
    _require_local(A0, A1, A2)
    if not (f1.is_surjective() and f2.is_surjective()):
        raise NotSurjective("build_joint_representation needs surjective maps")
    F = A0.field

    g = choose_generators_a0(A0)
    gv = [A0.vector(p) for p in g]
    l1, e1 = _lifts_and_extension(f1, gv)
    l2, e2 = _lifts_and_extension(f2, gv)
    lift = GeneratorLift(g, [A1.element(v) for v in l1], [A2.element(v) for v in l2],
                         [A1.element(v) for v in e1], [A2.element(v) for v in e2])

    zero0, zero1, zero2 = A0.zero_vector(), A1.zero_vector(), A2.zero_vector()
    triples = [(a, b, c) for a, b, c in zip(gv, l1, l2)]
    ext1 = [(zero0, w, zero2) for w in e1]
    ext2 = [(zero0, zero1, w) for w in e2]
    triples += (ext2 + ext1) if swap else (ext1 + ext2)
    for k in range(redundant):
        if not triples:
            break
        a, b, c = triples[k % len(triples)]
        triples.append((A0.mul(a, a), A1.mul(b, b), A2.mul(c, c)))

    n = len(triples)
    xring = PolyRing(_names("x", n), F)
    hx = [AlgebraHom(xring, A, [A.element(t[i]) for t in triples])
          for i, A in enumerate((A0, A1, A2))]

    K0 = kernel_of_hom(hx[0])
    base = ideal_sum(kernel_of_hom(hx[1]), kernel_of_hom(hx[2]))
    kappa = []
    for k in K0.groebner().elements:
        if normal_form(k, base.groebner()):
            kappa.append(k)
            base = ideal_sum(base, Ideal(xring, [k]))

    ring = PolyRing(_names("x", n) + _names("y", len(kappa)), F)
    pos = list(range(n))
    h0 = AlgebraHom(ring, A0, list(hx[0].images) + [A0.ring.zero] * len(kappa))
    h1 = AlgebraHom(ring, A1, list(hx[1].images) + [hx[1].apply(k) for k in kappa])
    h2 = AlgebraHom(ring, A2, list(hx[2].images) + [A2.ring.zero] * len(kappa))
    joint = joint_from_homs(ring, h0, h1, h2, f1, f2, x_count=n,
                            kappa=[k.change_ring(ring, pos) for k in kappa], lift=lift)
    if not joint.proposition1:
        raise CertificateFailure("GB(I0) != GB(I1 + I2) for the joint presentation")
    return joint


def verify_lemma1(joint: JointPresentation) -> bool:
    """The y-graph relations lie in ker h1, and eliminating y from ker h1
    recovers the kernel of the x-only presentation of A1."""
    ring, n, r = joint.ring, joint.x_count, joint.r
    graph = [ring.gen(n + l) - k for l, k in enumerate(joint.kappa)]
    gb1 = joint.I1.groebner()
    if any(normal_form(p, gb1) for p in graph):
        return False
    # reorder so the y's come first and can be eliminated
    swapped = PolyRing(ring.variables[n:] + ring.variables[:n], ring.field)
    perm = [r + i for i in range(n)] + list(range(r))
    I1s = Ideal(swapped, [p.change_ring(swapped, perm) for p in joint.I1.generators])
    elim = eliminate(I1s, r)
    xring = elim.ring
    hx = AlgebraHom(xring, joint.h1.target, joint.h1.images[:n])
    K1 = kernel_of_hom(hx)
    if elim.groebner().elements != K1.groebner().elements:
        return False
    Kp = ideal_sum(Ideal(ring, [p.change_ring(ring, list(range(n))) for p in K1.generators]),
                   Ideal(ring, graph))
    return ArtinianAlgebra(ring, Kp).length == joint.h1.target.length


# -- easy case ----------------------------------------------------------------


def minimal_basis_degree(joint: JointPresentation) -> int:
    """Largest total degree in minimal bases of I1 and I2."""
    d = 0
    for I in (joint.I1, joint.I2):
        mb = minimal_basis(Ideal(I.ring, I.groebner().elements))
        d = max([d] + [g.total_degree() for g in mb.generators])
    return d


def _nonzero_monomials(joint: JointPresentation) -> List[Monomial]:
    """Monomials with a nonzero image in A1 or A2; multiples of a monomial that
    dies in both die too, so the search prunes there."""
    n = joint.ring.nvars
    start = (0,) * n
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                e = m[:i] + (m[i] + 1,) + m[i + 1:]
                if e in found:
                    continue
                if any(joint.h1.monomial_image(e)) or any(joint.h2.monomial_image(e)):
                    found.add(e)
                    nxt.append(e)
        frontier = nxt
    return sorted(found, key=graded_key)


def graded_key(m: Monomial):
    """Ascending total degree, larger monomials first within a degree (1, x, y, x^2, ...)."""
    deg, rest = degrevlex_key(m)
    return deg, tuple(-r for r in rest)


def easy_case(joint: JointPresentation, certify: bool = True,
              strict: bool = True) -> Tuple[EasyCaseTrace, ArtinianAlgebra]:
    """The product ``<M>/<L>`` and its quotient presentation ``k[x,y]/(I1 & I2)``.

    ``d`` is one more than the largest degree of a monomial surviving in A1
    or A2, the least ``d`` with ``m^d`` inside ``I1 & I2``; the value read off
    minimal bases is kept alongside as ``d_paper``.
    """
    if not joint.proposition1:
        raise CertificateFailure("easy case needs I0 = I1 + I2")
    A1, A2 = joint.h1.target, joint.h2.target
    F = A1.field
    M = _nonzero_monomials(joint)
    d = 1 + max(sum(m) for m in M)
    d_paper = minimal_basis_degree(joint)
    cols = [joint.h1.monomial_image(m) + joint.h2.monomial_image(m) for m in M]
    L = nullspace(F, transpose(cols), len(M))
    result = ideal_intersection(joint.I1, joint.I2)
    A = ArtinianAlgebra(joint.ring, result)
    trace = EasyCaseTrace(d, d_paper, M, L, result, joint.ring)
    if certify:
        ambient_len = A1.length + A2.length
        span_M = Subspace(F, ambient_len, cols)
        img_A = Subspace(F, ambient_len, [joint.h1.monomial_image(m) + joint.h2.monomial_image(m)
                                          for m in A.basis])
        expected = A1.length + A2.length - joint.h0.target.length
        trace.checks["same_image"] = span_M == img_A
        trace.checks["dimension"] = len(M) - len(L) == expected == A.length
        if strict and not trace.checks["same_image"]:
            raise CertificateFailure("<M>/<L> and the intersection ideal disagree")
        if strict and not trace.checks["dimension"]:
            raise CertificateFailure(
                f"|M| - rank L = {len(M) - len(L)}, length A = {A.length}, expected {expected}")
    return trace, A


# -- the amalgam --------------------------------------------------------------


def amalgamate(f1: AlgebraHom, f2: AlgebraHom, certify: bool = True, swap: bool = False,
               redundant: int = 0, shared: bool = False, strict: bool = True) -> AmalgamResult:
    """Fibred product ``A1 x_A0 A2`` with its projections.

    ``shared=True`` skips the joint-presentation step and uses the inputs'
    common ring directly (only for canonical quotient maps).  With
    ``strict=False`` failed certificates are recorded instead of raised.
    """
    if f1.target != f2.target:
        raise TargetMismatch("f1 and f2 have different targets")
    sd = reduce_to_surjective(f1, f2)
    if shared:
        if not sd.unchanged:
            raise InputError("shared representation needs surjective inputs")
        joint = shared_joint(sd.f1p, sd.f2p)
    else:
        joint = build_joint_representation(sd.f1p, sd.f2p, swap=swap, redundant=redundant)
    trace, A = easy_case(joint, certify=certify, strict=strict)
    A1, A2 = f1.source, f2.source
    img1 = [sd.embed1.apply(p) for p in joint.h1.images]
    img2 = [sd.embed2.apply(p) for p in joint.h2.images]
    try:
        to_a1 = make_hom(A, A1, img1, name="to_a1")
        to_a2 = make_hom(A, A2, img2, name="to_a2")
    except IllDefined as exc:
        raise CertificateFailure(f"projection from the amalgam is ill-defined: {exc}") from None
    res = AmalgamResult(A, to_a1, to_a2, f1, f2, trace, joint, sd)
    res.certificates["proposition1"] = joint.proposition1
    if certify:
        res.certificates.update(certify_amalgam(res))
        failed = [k for k, ok in res.certificates.items() if not ok]
        if failed and strict:
            raise CertificateFailure("failed certificates: " + ", ".join(failed))
    return res


def certify_amalgam(res: AmalgamResult) -> Dict[str, bool]:
    """Commuting square, length identity and pullback match, as booleans."""
    A, f1, f2 = res.A, res.f1, res.f2
    sd = res.surjective
    out = {}
    out["commuting_square"] = all(
        f1.map_vector(res.to_a1.monomial_image(m)) == f2.map_vector(res.to_a2.monomial_image(m))
        for m in A.basis)
    out["length_identity"] = A.length == sd.a1p.length + sd.a2p.length - sd.a0p.length
    out["easy_case_agreement"] = bool(res.trace.checks) and all(res.trace.checks.values())
    pb = pullback_oracle(f1, f2)
    img = res.image()
    out["pullback_match"] = img.dim == A.length and img == pb.space
    return out


def universal_factorization(res: AmalgamResult, chi1: AlgebraHom, chi2: AlgebraHom) -> AlgebraHom:
    """The unique ``phi: A_T -> A`` with ``to_a1 o phi = chi1``, ``to_a2 o phi = chi2``."""
    f1, f2 = res.f1, res.f2
    if chi1.source != chi2.source or chi1.target != f1.source or chi2.target != f2.source:
        raise TargetMismatch("chi1, chi2 must share a source and land in A1, A2")
    AT = chi1.source
    for m in AT.basis:
        if f1.map_vector(chi1.monomial_image(m)) != f2.map_vector(chi2.monomial_image(m)):
            raise SquareDoesNotCommute(
                f"f1 o chi1 and f2 o chi2 differ on {AT.ring.monomial_str(m)}")
    A = res.A
    F = A.field
    cols = [res.to_a1.monomial_image(m) + res.to_a2.monomial_image(m) for m in A.basis]
    Mx = transpose(cols)
    images = []
    for v1, v2 in zip(chi1.image_vectors, chi2.image_vectors):
        c = solve(F, Mx, v1 + v2, A.length)
        if c is None:
            raise CertificateFailure("compatible pair is outside the image of the amalgam")
        images.append(A.element(c))
    phi = make_hom(AT, A, images, name="phi")
    for m in AT.basis:
        w = phi.monomial_image(m)
        if (res.to_a1.map_vector(w) != chi1.monomial_image(m)
                or res.to_a2.map_vector(w) != chi2.monomial_image(m)):
            raise CertificateFailure("factorization does not reproduce chi1, chi2")
    if rank(F, Mx) != A.length:
        raise CertificateFailure("amalgam does not embed into A1 (+) A2; phi is not unique")
    return phi


def combined_presentation(ja: JointPresentation, jb: JointPresentation) -> JointPresentation:
    """Both presentations side by side in ``k[vars_a, vars_b]``."""
    names_b = tuple(v + "'" for v in jb.ring.variables)
    ring = PolyRing(ja.ring.variables + names_b, ja.ring.field)
    hs = []
    for ha, hb in ((ja.h0, jb.h0), (ja.h1, jb.h1), (ja.h2, jb.h2)):
        hs.append(AlgebraHom(ring, ha.target, list(ha.images) + list(hb.images)))
    return joint_from_homs(ring, hs[0], hs[1], hs[2], ja.f1, ja.f2)


def representation_independence_check(f1: AlgebraHom, f2: AlgebraHom,
                                      joint_a: JointPresentation,
                                      joint_b: JointPresentation) -> bool:
    """Amalgams from ``joint_a``, ``joint_b`` and their combination agree.

    All three are compared as subspaces of ``A1 (+) A2`` and by length.
    """
    for j in (joint_a, joint_b):
        if not (homs_agree(j.f1, f1) and homs_agree(j.f2, f2)):
            raise InputError("joint presentation was built for different homomorphisms")
    joint_c = combined_presentation(joint_a, joint_b)
    if not joint_c.proposition1:
        log.info("combined presentation fails I0 = I1 + I2")
        return False
    ambient = DirectSum(f1.source, f2.source)
    images, lengths = [], []
    for j in (joint_a, joint_b, joint_c):
        _, A = easy_case(j)
        to1 = AlgebraHom(A, j.h1.target, j.h1.images)
        to2 = AlgebraHom(A, j.h2.target, j.h2.images)
        images.append(pair_image(ambient, to1, to2))
        lengths.append(A.length)
    return images[0] == images[1] == images[2] and lengths[0] == lengths[1] == lengths[2]
