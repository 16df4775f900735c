import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from amalgam.algebra import ArtinianAlgebra, make_hom  # noqa: E402
from amalgam.groebner import Ideal  # noqa: E402
from amalgam.polyring import GF, PolyRing  # noqa: E402

PROBLEMS = os.path.join(os.path.dirname(os.path.dirname(__file__)), "problems")
ACCEPTANCE_LINES = []


@pytest.fixture
def F7():
    return GF(7)


@pytest.fixture
def Rxy(F7):
    return PolyRing(("x", "y"), F7)


@pytest.fixture
def example2(Rxy):
    """k[x,y]/(x^3, y - x^2) and k[x,y]/(x^3, y) over k[x,y]/(x^2, y)."""
    P = Rxy.parse
    A1 = ArtinianAlgebra(Rxy, Ideal(Rxy, [P("x^3"), P("y - x^2")]), "A1")
    A2 = ArtinianAlgebra(Rxy, Ideal(Rxy, [P("x^3"), P("y")]), "A2")
    A0 = ArtinianAlgebra(Rxy, Ideal(Rxy, [P("x^3"), P("y - x^2"), P("y")]), "A0")
    gens = Rxy.gens()
    return make_hom(A1, A0, gens), make_hom(A2, A0, gens)


@pytest.fixture
def example2_univariate(F7):
    X = PolyRing(("x",), F7)
    A1 = ArtinianAlgebra(X, Ideal(X, [X.parse("x^3")]), "A1")
    A2 = ArtinianAlgebra(X, Ideal(X, [X.parse("x^3")]), "A2")
    A0 = ArtinianAlgebra(X, Ideal(X, [X.parse("x^2")]), "A0")
    return make_hom(A1, A0, ["x"]), make_hom(A2, A0, ["x"])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
