"""Exact dense linear algebra over GF(p) or QQ.

Matrices are lists of rows, vectors are lists.  Everything is computed with
Gauss-Jordan elimination in the field's canonical representation, so results
are exact and deterministic (pivots are always the leftmost available column).
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .polyring import Field

Vector = List
Matrix = List[List]


def zeros(F: Field, n: int) -> Vector:
    return [F.zero] * n


def unit_vector(F: Field, n: int, i: int) -> Vector:
    v = [F.zero] * n
    v[i] = F.one
    return v


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def mat_vec(F: Field, M: Matrix, v: Sequence) -> Vector:
    out = []
    for row in M:
        s = F.zero
        for a, b in zip(row, v):
            if a and b:
                s = F.add(s, F.mul(a, b))
        out.append(s)
    return out


def mat_mul(F: Field, A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return [[_dot(F, row, col) for col in Bt] for row in A]


def _dot(F: Field, u, v):
    s = F.zero
    for a, b in zip(u, v):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


def vec_add(F: Field, u, v) -> Vector:
    return [F.add(a, b) for a, b in zip(u, v)]


def vec_sub(F: Field, u, v) -> Vector:
    return [F.sub(a, b) for a, b in zip(u, v)]


def vec_scale(F: Field, c, v) -> Vector:
    return [F.mul(c, a) for a in v]


def is_zero_vector(v) -> bool:
    return not any(v)


def rref(F: Field, M: Matrix, ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in M]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, a) for a in rows[r]]
        piv = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(a, F.mul(f, b)) if b else a for a, b in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(F: Field, M: Matrix) -> int:
    return len(rref(F, M)[1]) if M else 0


def nullspace(F: Field, M: Matrix, ncols: Optional[int] = None) -> Matrix:
    """Basis of {x : M x = 0}, one vector per free column (in column order)."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(F, M, ncols) if M else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [F.zero] * ncols
        x[free] = F.one
        for row, pc in zip(R, pivots):
            if row[free]:
                x[pc] = F.neg(row[free])
        basis.append(x)
    return basis


def solve(F: Field, M: Matrix, b: Sequence, ncols: Optional[int] = None) -> Optional[Vector]:
    """One solution of M x = b (free variables set to zero), or None."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(F, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


class Subspace:
    """A subspace of F^n kept as an RREF basis; supports membership and meets."""

    def __init__(self, F: Field, n: int, vectors: Sequence[Sequence] = ()):
        self.field = F
        self.n = n
        vecs = [list(v) for v in vectors if any(v)]
        self.rows, self.pivots = rref(F, vecs, n) if vecs else ([], [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> Matrix:
        return [list(r) for r in self.rows]

    def reduce(self, v: Sequence) -> Vector:
        F = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(v, row)]
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of ``v`` in terms of :meth:`basis`, or None if outside."""
        if not self.contains(v):
            return None
        return [v[pc] for pc in self.pivots]

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, tuple(tuple(r) for r in self.rows)))

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.n, self.rows + other.rows)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Solve sum a_i u_i = sum b_j v_j; the u-side combinations span the meet."""
        F = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace(F, self.n)
        U, V = self.rows, other.rows
        cols = [list(u) for u in U] + [[F.neg(a) for a in v] for v in V]
        M = transpose(cols)
        vecs = []
        for sol in nullspace(F, M, len(cols)):
            w = [F.zero] * self.n
            for a, u in zip(sol[: len(U)], U):
                if a:
                    w = [F.add(x, F.mul(a, y)) for x, y in zip(w, u)]
            vecs.append(w)
        return Subspace(F, self.n, vecs)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"
