"""Monomial ideals as staircases (Young diagrams) and their amalgams.

For monomial ideals the amalgam over ``I1 + I2`` is ``I1 & I2``, whose
staircase is the union of the two staircases.  This gives a closed-form
oracle independent of any Groebner machinery beyond reading off generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List

from .errors import NotMonomial, RingMismatch
from .groebner import Ideal, standard_monomials
from .polyring import Monomial, PolyRing, degrevlex_key, divides, monomials_up_to_degree


@dataclass(frozen=True)
class YoungDiagram:
    """A finite down-closed set of exponent vectors."""

    cells: FrozenSet[Monomial]
    dim: int

    @classmethod
    def of_ideal(cls, I: Ideal) -> "YoungDiagram":
        if not I.is_monomial():
            raise NotMonomial(f"{I} is not a monomial ideal")
        std = standard_monomials(I.groebner())
        return cls(frozenset(std), I.ring.nvars)

    def __len__(self):
        return len(self.cells)

    def __contains__(self, m):
        return m in self.cells

    def union(self, other: "YoungDiagram") -> "YoungDiagram":
        return YoungDiagram(self.cells | other.cells, self.dim)

    def intersection(self, other: "YoungDiagram") -> "YoungDiagram":
        return YoungDiagram(self.cells & other.cells, self.dim)

    def sorted_cells(self) -> List[Monomial]:
        return sorted(self.cells, key=degrevlex_key)

    def corners(self) -> List[Monomial]:
        """Minimal monomials outside the diagram: the ideal's minimal generators."""
        if not self.cells:
            return [(0,) * self.dim]
        out = set()
        for c in self.cells:
            for i in range(self.dim):
                e = c[:i] + (c[i] + 1,) + c[i + 1:]
                if e not in self.cells:
                    out.add(e)
        minimal = [m for m in out if not any(o != m and divides(o, m) for o in out)]
        return sorted(minimal, key=degrevlex_key, reverse=True)

    def ideal(self, ring: PolyRing) -> Ideal:
        if ring.nvars != self.dim:
            raise RingMismatch("diagram dimension does not match the ring")
        return Ideal(ring, [ring.monomial(m) for m in self.corners()])


def young_amalgam_oracle(I1: Ideal, I2: Ideal):
    """``(I1 & I2, staircase union)`` for monomial ideals in one ring."""
    if I1.ring != I2.ring:
        raise RingMismatch("ideals live in different rings")
    Y = YoungDiagram.of_ideal(I1).union(YoungDiagram.of_ideal(I2))
    return Y.ideal(I1.ring), Y


def power_of_maximal_ideal(ring: PolyRing, d: int) -> Ideal:
    """``(x_1, ..., x_n)^d``."""
    if d <= 0:
        return Ideal(ring, [ring.one])
    gens = [ring.monomial(m) for m in monomials_up_to_degree(ring.nvars, d) if sum(m) == d]
    return Ideal(ring, gens)


def render_young(Y: YoungDiagram, ring: PolyRing = None) -> str:
    """ASCII picture: in two variables rows go from the highest power of the
    second variable down, one ``#`` per cell; one variable is a single row;
    three or more fall back to a list of exponent vectors."""
    if Y.dim == 1:
        return "#" * len(Y.cells)
    if Y.dim == 2:
        if not Y.cells:
            return ""
        top = max(c[1] for c in Y.cells)
        rows = []
        for j in range(top, -1, -1):
            width = sum(1 for c in Y.cells if c[1] == j)
            rows.append("#" * width)
        return "\n".join(rows)
    return "\n".join(str(c) for c in Y.sorted_cells())


__all__ = ["YoungDiagram", "young_amalgam_oracle", "power_of_maximal_ideal", "render_young"]
