"""Problem files: a small line-oriented format for rings, ideals, algebras and maps.

::

    field GF(7)            # or: field QQ
    ring x y
    ideal I1 = x^3, y - x^2
    ideal I2 = x^3, y
    algebra A1 = ring / I1
    algebra A2 = ring / I2
    algebra A0 = ring / I1 + I2
    hom f1 : A1 -> A0 { x -> x, y -> y }
    hom f2 : A2 -> A0 { x -> x, y -> y }
    task amalgam f1 f2

``ring x y`` declares the ring named ``ring``; further rings may be named
with ``ring S = t u``.  Ideals are read in the most recently declared ring.
Everything after ``#`` on a line is a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraHom, ArtinianAlgebra, make_hom
from .errors import (
    IllDefined,
    InputError,
    NotZeroDimensional,
    ParseError,
    RingMismatch,
    TargetMismatch,
    UnresolvedName,
)
from .groebner import Ideal, ideal_sum
from .polyring import Field, PolyRing, parse_polynomial, valid_variable_name

TASKS = ("amalgam", "groebner", "intersect", "verify", "young")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")


@dataclass
class ProblemFile:
    field: Field
    rings: Dict[str, PolyRing] = field(default_factory=dict)
    ideals: Dict[str, Ideal] = field(default_factory=dict)
    algebras: Dict[str, ArtinianAlgebra] = field(default_factory=dict)
    homs: Dict[str, AlgebraHom] = field(default_factory=dict)
    task: Optional[str] = None
    task_args: Tuple[str, ...] = ()
    text: str = ""

    def hom_pair(self) -> Tuple[AlgebraHom, AlgebraHom]:
        """The two maps to amalgamate: the task's, or the only two declared."""
        if self.task in ("amalgam", "verify"):
            return self.homs[self.task_args[0]], self.homs[self.task_args[1]]
        if len(self.homs) == 2:
            a, b = self.homs.values()
            return a, b
        raise InputError("no amalgam task and not exactly two homs declared")

    def ideal_pair(self) -> Tuple[Ideal, Ideal]:
        if self.task in ("intersect", "young"):
            return self.ideals[self.task_args[0]], self.ideals[self.task_args[1]]
        f1, f2 = self.hom_pair()
        return f1.source.ideal, f2.source.ideal


class _Line:
    """Cursor over one line with 1-based columns for diagnostics."""

    def __init__(self, text: str, number: int):
        self.text = text
        self.number = number
        self.pos = 0

    def col(self, pos=None) -> int:
        return (self.pos if pos is None else pos) + 1

    def error(self, message: str, pos=None) -> ParseError:
        return ParseError(message, self.number, self.col(pos))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def word(self, what: str = "a name") -> Tuple[str, int]:
        self.skip_ws()
        m = re.compile(r"[A-Za-z][A-Za-z0-9_]*").match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group(0), m.start()

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            found = self.text[self.pos:self.pos + len(literal)] or "end of line"
            raise self.error(f"expected {literal!r}, found {found!r}")
        self.pos += len(literal)

    def rest(self) -> Tuple[str, int]:
        self.skip_ws()
        start = self.pos
        self.pos = len(self.text)
        return self.text[start:].rstrip(), start

    def end(self):
        if not self.at_end():
            raise self.error(f"unexpected text {self.text[self.pos:]!r}")


def _split_top(text: str, sep: str, offset: int) -> List[Tuple[str, int]]:
    """Split on ``sep``, returning (piece, start column offset) pairs."""
    out, start = [], 0
    for i, ch in enumerate(text):
        if ch == sep:
            out.append((text[start:i], offset + start))
            start = i + 1
    out.append((text[start:], offset + start))
    return out


def _strip_piece(piece: str, pos: int) -> Tuple[str, int]:
    lead = len(piece) - len(piece.lstrip())
    return piece.strip(), pos + lead


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.field: Optional[Field] = None
        self.rings: Dict[str, PolyRing] = {}
        self.current_ring: Optional[str] = None
        self.ideals: Dict[str, Ideal] = {}
        self.algebras: Dict[str, ArtinianAlgebra] = {}
        self.homs: Dict[str, AlgebraHom] = {}
        self.task: Optional[Tuple[str, Tuple[str, ...]]] = None
        self.seen: Dict[str, str] = {}

    def declare(self, ln: _Line, name: str, pos: int, kind: str):
        if name in self.seen:
            raise ln.error(f"{name!r} is already declared as {self.seen[name]}", pos)
        self.seen[name] = kind

    def lookup(self, ln: _Line, table: Dict, name: str, pos: int, kind: str):
        if name not in table:
            if name in self.seen:
                raise UnresolvedName(
                    f"{name!r} is a {self.seen[name]}, expected {kind} "
                    f"(line {ln.number}, column {pos + 1})")
            raise UnresolvedName(f"undeclared {kind} {name!r} (line {ln.number}, column {pos + 1})")
        return table[name]

    def parse(self) -> ProblemFile:
        lines = self.text.splitlines()
        any_decl = False
        for number, raw in enumerate(lines, start=1):
            body = raw.split("#", 1)[0]
            if not body.strip():
                continue
            any_decl = True
            ln = _Line(body, number)
            kw, pos = ln.word("a keyword")
            handler = getattr(self, f"_{kw}", None)
            if handler is None or kw not in ("field", "ring", "ideal", "algebra", "hom", "task"):
                raise ln.error(f"unknown keyword {kw!r}", pos)
            if kw != "field" and self.field is None:
                raise ln.error("the first declaration must be 'field'", pos)
            handler(ln)
        if not any_decl:
            raise ParseError("empty problem file", 1, 1)
        pf = ProblemFile(self.field, self.rings, self.ideals, self.algebras, self.homs, text=self.text)
        if self.task is not None:
            pf.task, pf.task_args = self.task
        return pf

    # -- declarations -----------------------------------------------------

    def _field(self, ln: _Line):
        if self.field is not None:
            raise ln.error("field declared twice", 0)
        spec, pos = ln.rest()
        try:
            self.field = Field.parse(spec)
        except (ValueError, InputError) as exc:
            raise ln.error(f"bad field {spec!r}: {exc}", pos) from None

    def _ring(self, ln: _Line):
        save = ln.pos
        name, npos = "ring", ln.pos
        first, fpos = ln.word("a variable or ring name")
        ln.skip_ws()
        if ln.pos < len(ln.text) and ln.text[ln.pos] == "=":
            name, npos = first, fpos
            ln.pos += 1
        else:
            ln.pos = save
        variables = []
        while not ln.at_end():
            v, vpos = ln.word("a variable name")
            if not valid_variable_name(v):
                raise ln.error(f"bad variable name {v!r}", vpos)
            if v in variables:
                raise ln.error(f"variable {v!r} repeated", vpos)
            variables.append(v)
        if not variables:
            raise ln.error("ring needs at least one variable")
        self.declare(ln, name, npos, "ring")
        self.rings[name] = PolyRing(tuple(variables), self.field)
        self.current_ring = name

    def _ideal(self, ln: _Line):
        if self.current_ring is None:
            raise ln.error("ideal declared before any ring", 0)
        name, pos = ln.word("an ideal name")
        ln.expect("=")
        text, start = ln.rest()
        if not text:
            raise ln.error("ideal needs at least one generator")
        ring = self.rings[self.current_ring]
        gens = []
        for piece, ppos in _split_top(text, ",", start):
            piece, ppos = _strip_piece(piece, ppos)
            if not piece:
                raise ln.error("empty generator", ppos)
            gens.append(parse_polynomial(piece, ring, ln.number, ppos + 1))
        self.declare(ln, name, pos, "ideal")
        self.ideals[name] = Ideal(ring, gens)

    def _algebra(self, ln: _Line):
        name, pos = ln.word("an algebra name")
        ln.expect("=")
        rname, rpos = ln.word("a ring name")
        ring = self.lookup(ln, self.rings, rname, rpos, "ring")
        ln.expect("/")
        text, start = ln.rest()
        ideal = None
        for piece, ppos in _split_top(text, "+", start):
            piece, ppos = _strip_piece(piece, ppos)
            if not _NAME.match(piece):
                raise ln.error("expected an ideal name", ppos)
            I = self.lookup(ln, self.ideals, piece, ppos, "ideal")
            if I.ring != ring:
                raise RingMismatch(
                    f"ideal {piece!r} is not in ring {rname!r} (line {ln.number}, column {ppos + 1})")
            ideal = I if ideal is None else ideal_sum(ideal, I)
        self.declare(ln, name, pos, "algebra")
        try:
            self.algebras[name] = ArtinianAlgebra(ring, ideal, name)
        except NotZeroDimensional as exc:
            raise NotZeroDimensional(f"algebra {name!r}: {exc} (line {ln.number})") from None
        except InputError as exc:
            raise type(exc)(f"algebra {name!r}: {exc} (line {ln.number})") from None

    def _hom(self, ln: _Line):
        name, pos = ln.word("a hom name")
        ln.expect(":")
        sname, spos = ln.word("a source algebra")
        ln.expect("->")
        tname, tpos = ln.word("a target algebra")
        src = self.lookup(ln, self.algebras, sname, spos, "algebra")
        tgt = self.lookup(ln, self.algebras, tname, tpos, "algebra")
        ln.expect("{")
        ln.skip_ws()
        close = ln.text.rfind("}")
        if close < ln.pos:
            raise ln.error("missing '}'", len(ln.text))
        inner, start = ln.text[ln.pos:close], ln.pos
        ln.pos = close + 1
        ln.end()
        images: Dict[str, object] = {}
        for piece, ppos in _split_top(inner, ",", start):
            piece, ppos = _strip_piece(piece, ppos)
            if not piece:
                continue
            if "->" not in piece:
                raise ln.error("expected 'variable -> expression'", ppos)
            var, expr = piece.split("->", 1)
            var = var.strip()
            if var not in src.ring.variables:
                raise ln.error(f"{var!r} is not a variable of {sname!r}", ppos)
            if var in images:
                raise ln.error(f"image of {var!r} given twice", ppos)
            epos = ppos + piece.index("->") + 2
            expr_s, epos = _strip_piece(expr, epos)
            images[var] = parse_polynomial(expr_s, tgt.ring, ln.number, epos + 1)
        missing = [v for v in src.ring.variables if v not in images]
        if missing:
            raise ln.error(f"no image for variable(s) {', '.join(missing)}", close)
        self.declare(ln, name, pos, "hom")
        try:
            self.homs[name] = make_hom(src, tgt, [images[v] for v in src.ring.variables], name)
        except IllDefined as exc:
            raise IllDefined(f"hom {name!r} is ill-defined: {exc} (line {ln.number})",
                             exc.generator) from None

    def _task(self, ln: _Line):
        if self.task is not None:
            raise ln.error("only one task per file", 0)
        kind, kpos = ln.word("a task kind")
        if kind not in TASKS:
            raise ln.error(f"unknown task {kind!r} (expected one of {', '.join(TASKS)})", kpos)
        args = []
        while not ln.at_end():
            args.append(ln.word("a name"))
        if kind in ("amalgam", "verify"):
            if len(args) != 2:
                raise ln.error(f"task {kind} needs two homs")
            f1, f2 = (self.lookup(ln, self.homs, a, p, "hom") for a, p in args)
            if f1.target != f2.target:
                raise TargetMismatch(
                    f"homs {args[0][0]!r} and {args[1][0]!r} have different targets (line {ln.number})")
        elif kind in ("intersect", "young"):
            if len(args) != 2:
                raise ln.error(f"task {kind} needs two ideals")
            I, J = (self.lookup(ln, self.ideals, a, p, "ideal") for a, p in args)
            if I.ring != J.ring:
                raise RingMismatch(f"ideals of task {kind} live in different rings (line {ln.number})")
        else:
            if not args:
                raise ln.error("task groebner needs at least one ideal")
            for a, p in args:
                self.lookup(ln, self.ideals, a, p, "ideal")
        self.task = (kind, tuple(a for a, _ in args))


def parse_problem_file(text: str) -> ProblemFile:
    """Parse and fully resolve a problem file; every hom is checked on load."""
    return _Parser(text).parse()
