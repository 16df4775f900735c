"""Exact coefficients, monomial orders and sparse multivariate polynomials.

Coefficients live either in a prime field GF(p) (held as ints in ``[0, p)``)
or in the rationals (held as :class:`fractions.Fraction`).  A polynomial is a
mapping from exponent tuples to nonzero coefficients; zero coefficients are
dropped eagerly so that equality of polynomials is equality of mappings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    ArityMismatch,
    BadCoefficient,
    FieldMismatch,
    ParseError,
    RingMismatch,
    UnknownVariable,
)

Monomial = Tuple[int, ...]

LT, EQ, GT = -1, 0, 1

_VAR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p`` is set, the rationals when ``p`` is None."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"GF({self.p}): modulus must be a prime below 2^31")

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("QQ", "Q", "rationals"):
            return cls(None)
        m = re.fullmatch(r"(?:GF|F)\(\s*(\d+)\s*\)", text)
        if m is None:
            raise ValueError(f"unknown field {text!r}; expected GF(p) or QQ")
        return cls(int(m.group(1)))

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, value):
        """Coerce an int or Fraction into canonical form."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes in {self}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in " + str(self))
        if self.p is not None:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self) -> List[int]:
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return list(range(self.p))

    def signed(self, a):
        """Symmetric representative, used only for display."""
        if self.p is not None and a > self.p // 2:
            return a - self.p
        return a


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    """A field element bundled with its field; arithmetic checks fields agree."""

    value: object
    field: Field

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    def _check(self, other):
        if not isinstance(other, Scalar):
            return Scalar(other, self.field)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        return field_ops(self, self._check(other), "add")

    def __sub__(self, other):
        return field_ops(self, self._check(other), "sub")

    def __mul__(self, other):
        return field_ops(self, self._check(other), "mul")

    def __truediv__(self, other):
        return field_ops(self, self._check(other), "div")

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return str(self.value)


def field_ops(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    F = a.field
    if op == "add":
        v = F.add(a.value, b.value)
    elif op == "sub":
        v = F.sub(a.value, b.value)
    elif op == "mul":
        v = F.mul(a.value, b.value)
    elif op == "div":
        v = F.div(a.value, b.value)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return Scalar(v, F)


# -- monomials and orders -----------------------------------------------------


def degrevlex_key(e: Sequence[int]):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """``degrevlex``, ``lex`` or ``block`` (eliminating the first ``elim`` variables)."""

    kind: str = "degrevlex"
    elim: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, e: Monomial):
        if self.kind == "degrevlex":
            return degrevlex_key(e)
        if self.kind == "lex":
            return e
        k = self.elim
        return (degrevlex_key(e[:k]), degrevlex_key(e[k:]))

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ArityMismatch(f"monomials of length {len(a)} and {len(b)}")
        ka, kb = self.key(a), self.key(b)
        return LT if ka < kb else GT if ka > kb else EQ

    def __str__(self):
        return f"block({self.elim})" if self.kind == "block" else self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(elim: int) -> MonomialOrder:
    return MonomialOrder("block", elim)


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    return order.compare(a, b)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_up_to_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree <= ``degree``, in increasing degrevlex order."""
    out = []

    def rec(prefix, left, remaining):
        if remaining == 1:
            for d in range(left + 1):
                out.append(prefix + (d,))
            return
        for d in range(left + 1):
            rec(prefix + (d,), left - d, remaining - 1)

    if nvars == 0:
        yield ()
        return
    rec((), degree, nvars)
    yield from sorted(out, key=degrevlex_key)


# -- rings and polynomials ----------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    variables: Tuple[str, ...]
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if any(not v for v in self.variables):
            raise ValueError("variable names must be nonempty")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}]"

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.unit_monomial(): self.field(c)})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> List["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.index(name))

    def monomial(self, e: Sequence[int], c=1) -> "Polynomial":
        if len(e) != self.nvars:
            raise ArityMismatch(f"exponent vector {tuple(e)} in a ring with {self.nvars} variables")
        return Polynomial(self, {tuple(e): self.field(c)})

    def from_dict(self, terms: Dict[Monomial, object]) -> "Polynomial":
        F = self.field
        return Polynomial(self, {tuple(m): F(c) for m, c in terms.items() if F(c)})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def monomial_str(self, e: Monomial) -> str:
        parts = []
        for name, d in zip(self.variables, e):
            if d == 1:
                parts.append(name)
            elif d > 1:
                parts.append(f"{name}^{d}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients.

    Instances are treated as immutable.  Construction trusts that the caller
    already dropped zero coefficients; use :meth:`PolyRing.from_dict` when in
    doubt.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, object]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, Scalar):
            if other.field != self.ring.field:
                raise FieldMismatch(f"{self.ring.field} vs {other.field}")
            return self.ring.constant(other.value)
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        g = self._coerce(other)
        F = self.ring.field
        t = dict(self.terms)
        for m, c in g.terms.items():
            v = F.add(t.get(m, F.zero), c)
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        g = self._coerce(other)
        F = self.ring.field
        t: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in g.terms.items():
                m = mono_mul(m1, m2)
                v = F.add(t.get(m, F.zero), F.mul(c1, c2))
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c) if not isinstance(c, Scalar) else c.value
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: F.mul(a, c) for m, a in self.terms.items()})

    def mul_monomial(self, e: Monomial, c=None) -> "Polynomial":
        F = self.ring.field
        if c is None:
            return Polynomial(self.ring, {mono_mul(m, e): a for m, a in self.terms.items()})
        return Polynomial(self.ring, {mono_mul(m, e): F.mul(a, c) for m, a in self.terms.items()})

    # -- structure ----------------------------------------------------------
    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient(order)))

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> List[Tuple[Monomial, object]]:
        """Terms in decreasing order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coefficient(self):
        return self.terms.get(self.ring.unit_monomial(), self.ring.field.zero)

    def support_variables(self) -> List[int]:
        used = set()
        for m in self.terms:
            used.update(i for i, d in enumerate(m) if d)
        return sorted(used)

    def substitute(self, images: Sequence["Polynomial"], target: Optional[PolyRing] = None) -> "Polynomial":
        """Replace the i-th variable by ``images[i]`` (all in ``target``)."""
        if len(images) != self.ring.nvars:
            raise ArityMismatch(f"{len(images)} images for {self.ring.nvars} variables")
        if target is None:
            target = images[0].ring if images else self.ring
        result = target.zero
        powers: Dict[Tuple[int, int], Polynomial] = {}
        for m, c in self.terms.items():
            t = target.constant(c)
            for i, d in enumerate(m):
                if d:
                    key = (i, d)
                    if key not in powers:
                        powers[key] = images[i] ** d
                    t = t * powers[key]
            result = result + t
        return result

    def change_ring(self, ring: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Embed into ``ring``, sending variable i to variable ``positions[i]``."""
        t = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, d in enumerate(m):
                e[positions[i]] += d
            t[tuple(e)] = ring.field(c)
        return Polynomial(ring, t)

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({render_polynomial(self)!r})"


# -- text syntax --------------------------------------------------------------


def _fmt_coeff(F: Field, c) -> str:
    if F.p is not None:
        return str(F.signed(c))
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_polynomial(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    """Render with terms in decreasing ``order``; inverse of :func:`parse_polynomial`."""
    if not f.terms:
        return "0"
    F = f.ring.field
    out = []
    for m, c in f.sorted_terms(order):
        s = _fmt_coeff(F, c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = f.ring.monomial_str(m)
        if mono == "1":
            body = s
        elif s == "1":
            body = mono
        else:
            body = f"{s}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str, line: int, col0: int):
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = col0 + m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), col))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*^/":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            tokens.append((ch, ch, col))
        pos = m.end()
    tokens.append(("end", None, col0 + len(text)))
    return tokens


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``.

    Grammar: signed terms joined by ``+``/``-``; a term is a ``*``-separated
    product of integer or ``a/b`` coefficients and powers ``var`` / ``var^k``.
    ``line`` and ``column`` locate ``text`` inside a larger file for errors.
    """
    F = ring.field
    toks = _tokenize(text, line, column)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None):
        nonlocal i
        tok = toks[i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", line, tok[2])
        i += 1
        return tok

    def coefficient(num_tok):
        num = num_tok[1]
        if peek()[0] == "/":
            take("/")
            den_tok = take("num")
            den = den_tok[1]
            if den == 0:
                raise BadCoefficient(f"zero denominator in {num}/0", line, den_tok[2])
            try:
                return F(Fraction(num, den))
            except ZeroDivisionError:
                raise BadCoefficient(
                    f"{num}/{den} is not defined in {F}", line, den_tok[2]) from None
        return F(num)

    def term():
        coeff = F.one
        exps = [0] * ring.nvars
        while True:
            tok = peek()
            if tok[0] == "num":
                take()
                coeff = F.mul(coeff, coefficient(tok))
            elif tok[0] == "name":
                take()
                try:
                    idx = ring.index(tok[1])
                except UnknownVariable:
                    raise UnknownVariable(tok[1], line, tok[2]) from None
                power = 1
                if peek()[0] == "^":
                    take("^")
                    power = take("num")[1]
                exps[idx] += power
            else:
                what = "end of input" if tok[0] == "end" else repr(tok[1])
                raise ParseError(f"expected a coefficient or variable, found {what}", line, tok[2])
            if peek()[0] == "*":
                take("*")
                continue
            return tuple(exps), coeff

    terms: Dict[Monomial, object] = {}
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take()[0] == "-" else 1
    while True:
        m, c = term()
        if sign < 0:
            c = F.neg(c)
        v = F.add(terms.get(m, F.zero), c)
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', found {tok[1]!r}", line, tok[2])
        sign = -1 if take()[0] == "-" else 1
    return Polynomial(ring, terms)


def valid_variable_name(name: str) -> bool:
    return bool(_VAR_NAME.match(name))
