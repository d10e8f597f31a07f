"""Boundary-set expressions: grammar, parser and decidable membership oracle.

Expressions describe subsets A of the boundary hyperplane L_n ≅ R^(n-1);
points are given by their first n-1 coordinates.  Grammar, with ``rat``
being ``integer [ "/" positive-integer ]`` and coordinate arity n-1:

    expr      := term { "|" term }
    term      := factor { "&" factor }
    factor    := "!" factor | "(" expr ")" | primitive
    primitive := "empty" | "all" | "rationals" | "lattice" | "cantor"
               | "bernstein" | "point(" coords ")"
               | "finite{" coords { ";" coords } "}"
               | "cball(" coords ";" rat ")" | "oball(" coords ";" rat ")"

Membership is three-valued.  Only rational points are representable, so
``rationals`` answers In for every representable point; the uncountable
picture is handled by class-level inference in :mod:`niemytzki.descriptive`.
``bernstein`` is purely symbolic and always answers Unknown: Bernstein sets
are non-constructive, only their class-level facts are usable.  ``cantor``
is the middle-thirds set embedded as C × {0}^(n-2), decided exactly on the
eventually periodic ternary expansion of the rational first coordinate.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .geometry import DimensionMismatch, rat_to_str


class Membership(Enum):
    IN = "in"
    OUT = "out"
    UNKNOWN = "unknown"

    def __invert__(self) -> "Membership":
        if self is Membership.IN:
            return Membership.OUT
        if self is Membership.OUT:
            return Membership.IN
        return Membership.UNKNOWN

    def __and__(self, other: "Membership") -> "Membership":
        if Membership.OUT in (self, other):
            return Membership.OUT
        if self is Membership.IN and other is Membership.IN:
            return Membership.IN
        return Membership.UNKNOWN

    def __or__(self, other: "Membership") -> "Membership":
        if Membership.IN in (self, other):
            return Membership.IN
        if self is Membership.OUT and other is Membership.OUT:
            return Membership.OUT
        return Membership.UNKNOWN


IN = Membership.IN
OUT = Membership.OUT
UNKNOWN = Membership.UNKNOWN


# --- abstract syntax ---------------------------------------------------------

class SetExpr:
    """Base class of boundary-set expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(SetExpr):
    pass


@dataclass(frozen=True)
class All(SetExpr):
    pass


@dataclass(frozen=True)
class Rationals(SetExpr):
    pass


@dataclass(frozen=True)
class Lattice(SetExpr):
    """The integer lattice Z^(n-1)."""


@dataclass(frozen=True)
class Cantor(SetExpr):
    """The middle-thirds Cantor set embedded as C × {0}^(n-2)."""


@dataclass(frozen=True)
class Bernstein(SetExpr):
    """Symbolic Bernstein set: membership of individual points is unknowable."""


@dataclass(frozen=True)
class SinglePoint(SetExpr):
    coords: tuple[Fraction, ...]


@dataclass(frozen=True)
class FiniteSet(SetExpr):
    points: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ClosedBall(SetExpr):
    center: tuple[Fraction, ...]
    radius: Fraction


@dataclass(frozen=True)
class OpenBall(SetExpr):
    center: tuple[Fraction, ...]
    radius: Fraction


@dataclass(frozen=True)
class Complement(SetExpr):
    body: SetExpr


@dataclass(frozen=True)
class Union(SetExpr):
    members: tuple[SetExpr, ...]


@dataclass(frozen=True)
class Inter(SetExpr):
    members: tuple[SetExpr, ...]


def normalize(e: SetExpr) -> SetExpr:
    """Structural normal form: no double complements, no complemented
    constants, flattened and deduplicated unions/intersections."""
    if isinstance(e, Complement):
        body = normalize(e.body)
        if isinstance(body, Complement):
            return body.body
        if isinstance(body, All):
            return Empty()
        if isinstance(body, Empty):
            return All()
        return Complement(body)
    if isinstance(e, (Union, Inter)):
        kind = type(e)
        flat: list[SetExpr] = []
        for m in e.members:
            nm = normalize(m)
            if isinstance(nm, kind):
                flat.extend(nm.members)
            else:
                flat.append(nm)
        if not flat:
            raise ValueError("unions and intersections need at least one member")
        seen: list[SetExpr] = []
        for m in flat:
            if m not in seen:
                seen.append(m)
        if len(seen) == 1:
            return seen[0]
        return kind(tuple(seen))
    return e


def arity(e: SetExpr) -> Optional[int]:
    """Coordinate arity carried by the expression, None if purely symbolic."""
    if isinstance(e, SinglePoint):
        return len(e.coords)
    if isinstance(e, FiniteSet):
        return len(e.points[0]) if e.points else None
    if isinstance(e, (ClosedBall, OpenBall)):
        return len(e.center)
    if isinstance(e, Complement):
        return arity(e.body)
    if isinstance(e, (Union, Inter)):
        for m in e.members:
            a = arity(m)
            if a is not None:
                return a
    return None


# --- printing ----------------------------------------------------------------

def _coords_text(coords: Sequence[Fraction]) -> str:
    return ",".join(rat_to_str(c) for c in coords)


def to_text(e: SetExpr) -> str:
    """Canonical text form; parse(to_text(e), n) == e for normalized e."""
    if isinstance(e, Empty):
        return "empty"
    if isinstance(e, All):
        return "all"
    if isinstance(e, Rationals):
        return "rationals"
    if isinstance(e, Lattice):
        return "lattice"
    if isinstance(e, Cantor):
        return "cantor"
    if isinstance(e, Bernstein):
        return "bernstein"
    if isinstance(e, SinglePoint):
        return f"point({_coords_text(e.coords)})"
    if isinstance(e, FiniteSet):
        return "finite{" + ";".join(_coords_text(p) for p in e.points) + "}"
    if isinstance(e, ClosedBall):
        return f"cball({_coords_text(e.center)};{rat_to_str(e.radius)})"
    if isinstance(e, OpenBall):
        return f"oball({_coords_text(e.center)};{rat_to_str(e.radius)})"
    if isinstance(e, Complement):
        body = to_text(e.body)
        if isinstance(e.body, (Union, Inter)):
            return f"!({body})"
        return f"!{body}"
    if isinstance(e, Union):
        return " | ".join(to_text(m) for m in e.members)
    if isinstance(e, Inter):
        parts = []
        for m in e.members:
            t = to_text(m)
            parts.append(f"({t})" if isinstance(m, Union) else t)
        return " & ".join(parts)
    raise TypeError(f"not a set expression: {e!r}")


# --- parsing -----------------------------------------------------------------

class ParseError(ValueError):
    """Syntax or arity error, with the byte offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


_TOKEN_RE = re.compile(r"(?P<num>-?\d+)|(?P<name>[a-z]+)|(?P<sym>[|&!(){};,/])")
_WS_RE = re.compile(r"\s*")

_PLAIN_PRIMITIVES = {
    "empty": Empty,
    "all": All,
    "rationals": Rationals,
    "lattice": Lattice,
    "cantor": Cantor,
    "bernstein": Bernstein,
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        pos = _WS_RE.match(text, pos).end()
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, dimension: int):
        self.tokens = _tokenize(text)
        self.length = len(text)
        self.i = 0
        self.want = dimension - 1

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self, expect: str | None = None):
        tok = self._peek()
        if tok is None:
            raise ParseError(
                f"unexpected end of input" + (f", expected {expect!r}" if expect else ""),
                self.length,
            )
        if expect is not None and tok[1] != expect:
            raise ParseError(f"expected {expect!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> SetExpr:
        e = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])
        return normalize(e)

    def expr(self) -> SetExpr:
        terms = [self.term()]
        while (tok := self._peek()) and tok[1] == "|":
            self._next()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Union(tuple(terms))

    def term(self) -> SetExpr:
        factors = [self.factor()]
        while (tok := self._peek()) and tok[1] == "&":
            self._next()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Inter(tuple(factors))

    def factor(self) -> SetExpr:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.length)
        if tok[1] == "!":
            self._next()
            return Complement(self.factor())
        if tok[1] == "(":
            self._next()
            inner = self.expr()
            self._next(")")
            return inner
        return self.primitive()

    def primitive(self) -> SetExpr:
        kind, name, pos = self._next()
        if kind != "name":
            raise ParseError(f"expected a primitive, found {name!r}", pos)
        if name in _PLAIN_PRIMITIVES:
            return _PLAIN_PRIMITIVES[name]()
        if name == "point":
            self._next("(")
            coords = self.coords()
            self._next(")")
            return SinglePoint(coords)
        if name == "finite":
            self._next("{")
            points = [self.coords()]
            while (tok := self._peek()) and tok[1] == ";":
                self._next()
                points.append(self.coords())
            self._next("}")
            return FiniteSet(tuple(points))
        if name in ("cball", "oball"):
            self._next("(")
            center = self.coords()
            self._next(";")
            rpos = self._peek()[2] if self._peek() else self.length
            radius = self.rational()
            self._next(")")
            if radius <= 0:
                raise ParseError("radius must be positive", rpos)
            return (ClosedBall if name == "cball" else OpenBall)(center, radius)
        raise ParseError(f"unknown primitive {name!r}", pos)

    def coords(self) -> tuple[Fraction, ...]:
        start = self._peek()[2] if self._peek() else self.length
        values = [self.rational()]
        while (tok := self._peek()) and tok[1] == ",":
            self._next()
            values.append(self.rational())
        if len(values) != self.want:
            raise ParseError(
                f"expected {self.want} coordinate(s) for this dimension, got {len(values)}",
                start,
            )
        return tuple(values)

    def rational(self) -> Fraction:
        kind, text, pos = self._next()
        if kind != "num":
            raise ParseError(f"expected a rational, found {text!r}", pos)
        num = int(text)
        if (tok := self._peek()) and tok[1] == "/":
            self._next()
            dkind, dtext, dpos = self._next()
            if dkind != "num":
                raise ParseError(f"expected a denominator, found {dtext!r}", dpos)
            den = int(dtext)
            if den <= 0:
                raise ParseError("denominator must be a positive integer", dpos)
            return Fraction(num, den)
        return Fraction(num)


def parse(text: str, dimension: int = 2) -> SetExpr:
    """Parse a boundary-set expression for a session of the given dimension.

    Raises :class:`ParseError` with a byte offset on syntax errors and on
    coordinate groups whose arity differs from dimension - 1.
    """
    if dimension < 2:
        raise ValueError("dimension must be at least 2")
    return _Parser(text, dimension).parse()


# --- membership --------------------------------------------------------------

def _sq(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum(((a - b) * (a - b) for a, b in zip(p, q)), Fraction(0))


def in_cantor(x: Fraction) -> bool:
    """Exact middle-thirds membership for a rational in [0, 1].

    x lies in C iff some ternary expansion of x uses only digits {0, 2}.  The
    digit-0 and digit-2 branches cover the disjoint intervals [0, 1/3] and
    [2/3, 1], so at most one of them is ever playable: the walk
    m -> 3m or 3m - 2q on the numerator (denominator q fixed) is
    deterministic, dies inside the middle gap, and x is in C iff it revisits
    a state.
    """
    if x < 0 or x > 1:
        return False
    q = x.denominator
    m = x.numerator
    seen = set()
    while m not in seen:
        seen.add(m)
        t = 3 * m
        if t <= q:
            m = t
        elif t >= 2 * q:
            m = t - 2 * q
        else:
            return False
    return True


def member(e: SetExpr, p: Sequence[Fraction]) -> Membership:
    """Three-valued membership of a boundary point (n-1 rational coordinates)."""
    p = tuple(p)
    if isinstance(e, Empty):
        return OUT
    if isinstance(e, All):
        return IN
    if isinstance(e, Rationals):
        return IN  # every representable point has rational coordinates
    if isinstance(e, Lattice):
        return IN if all(c.denominator == 1 for c in p) else OUT
    if isinstance(e, Cantor):
        if not p:
            raise DimensionMismatch("cantor needs at least one coordinate")
        rest_zero = all(c == 0 for c in p[1:])
        return IN if rest_zero and in_cantor(p[0]) else OUT
    if isinstance(e, Bernstein):
        return UNKNOWN
    if isinstance(e, SinglePoint):
        if len(e.coords) != len(p):
            raise DimensionMismatch("point arity differs from the query point")
        return IN if e.coords == p else OUT
    if isinstance(e, FiniteSet):
        for pt in e.points:
            if len(pt) != len(p):
                raise DimensionMismatch("point arity differs from the query point")
        return IN if p in e.points else OUT
    if isinstance(e, ClosedBall):
        if len(e.center) != len(p):
            raise DimensionMismatch("ball arity differs from the query point")
        return IN if _sq(p, e.center) <= e.radius * e.radius else OUT
    if isinstance(e, OpenBall):
        if len(e.center) != len(p):
            raise DimensionMismatch("ball arity differs from the query point")
        return IN if _sq(p, e.center) < e.radius * e.radius else OUT
    if isinstance(e, Complement):
        return ~member(e.body, p)
    if isinstance(e, Union):
        out = OUT
        for m in e.members:
            out = out | member(m, p)
        return out
    if isinstance(e, Inter):
        out = IN
        for m in e.members:
            out = out & member(m, p)
        return out
    raise TypeError(f"not a set expression: {e!r}")


# --- witness search ----------------------------------------------------------

_CANTOR_SAMPLES = (
    Fraction(0), Fraction(1), Fraction(1, 3), Fraction(2, 3),
    Fraction(1, 4), Fraction(3, 4), Fraction(1, 9), Fraction(2, 9),
    Fraction(7, 9), Fraction(8, 9),
)

_PROBE_VALUES = (
    Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
    Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(1, 3), Fraction(5),
)


def structural_candidates(e: SetExpr, m: int) -> list[tuple[Fraction, ...]]:
    """Deterministic candidate points harvested from the expression tree."""
    acc: list[tuple[Fraction, ...]] = []

    def pad(first: Fraction) -> tuple[Fraction, ...]:
        return (first,) + (Fraction(0),) * (m - 1)

    def axis(center: tuple[Fraction, ...], i: int, offset: Fraction):
        return center[:i] + (center[i] + offset,) + center[i + 1:]

    def walk(node: SetExpr):
        if isinstance(node, SinglePoint):
            acc.append(node.coords)
        elif isinstance(node, FiniteSet):
            acc.extend(node.points)
        elif isinstance(node, (ClosedBall, OpenBall)):
            acc.append(node.center)
            half = node.radius / 2
            for i in range(len(node.center)):
                acc.append(axis(node.center, i, half))
                acc.append(axis(node.center, i, -half))
            if isinstance(node, ClosedBall):
                acc.append(axis(node.center, 0, node.radius))
        elif isinstance(node, Cantor):
            acc.extend(pad(c) for c in _CANTOR_SAMPLES)
        elif isinstance(node, Lattice):
            acc.extend((pad(Fraction(0)), pad(Fraction(1)), pad(Fraction(-1))))
            acc.append((Fraction(1),) * m)
        elif isinstance(node, (Rationals, All)):
            acc.append(pad(Fraction(0)))
            acc.append(pad(Fraction(1, 2)))
        elif isinstance(node, Complement):
            walk(node.body)
        elif isinstance(node, (Union, Inter)):
            for child in node.members:
                walk(child)

    walk(e)
    deduped: list[tuple[Fraction, ...]] = []
    for cand in acc:
        if len(cand) == m and cand not in deduped:
            deduped.append(cand)
    return deduped


def _probe_points(m: int) -> list[tuple[Fraction, ...]]:
    probes = []
    for v in _PROBE_VALUES:
        probes.append((v,) + (Fraction(0),) * (m - 1))
    for v in (Fraction(1), Fraction(-1), Fraction(1, 2)):
        probes.append((v,) * m)
    if m > 1:
        for v in (Fraction(1), Fraction(2)):
            probes.append((Fraction(0),) * (m - 1) + (v,))
    return probes


def find_witness(
    e: SetExpr, budget: int = 1000, seed: int = 0, dimension: int | None = None
) -> Optional[tuple[Fraction, ...]]:
    """Search for a point with membership In: structural candidates first,
    then seeded random rationals.  Absence of a witness proves nothing."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    m = (dimension - 1) if dimension is not None else (arity(e) or 1)
    rng = random.Random(seed)

    def randoms() -> Iterator[tuple[Fraction, ...]]:
        while True:
            yield tuple(
                Fraction(rng.randint(-300, 300), rng.randint(1, 100)) for _ in range(m)
            )

    pool = itertools.chain(structural_candidates(e, m), _probe_points(m), randoms())
    for cand in itertools.islice(pool, budget):
        if member(e, cand) is IN:
            return cand
    return None


# --- random expressions (seeded corpora) --------------------------------------

def random_expr(rng: random.Random, dimension: int = 2, max_depth: int = 4) -> SetExpr:
    """Seeded random normalized expression, for corpora and property suites."""
    m = dimension - 1

    def coords() -> tuple[Fraction, ...]:
        return tuple(Fraction(rng.randint(-8, 8), rng.randint(1, 8)) for _ in range(m))

    def radius() -> Fraction:
        return Fraction(rng.randint(1, 8), rng.randint(1, 8))

    def prim() -> SetExpr:
        roll = rng.randint(0, 9)
        if roll == 0:
            return Empty()
        if roll == 1:
            return All()
        if roll == 2:
            return Rationals()
        if roll == 3:
            return Lattice()
        if roll == 4:
            return Cantor()
        if roll == 5:
            return Bernstein()
        if roll == 6:
            return SinglePoint(coords())
        if roll == 7:
            return FiniteSet(tuple(coords() for _ in range(rng.randint(1, 3))))
        if roll == 8:
            return ClosedBall(coords(), radius())
        return OpenBall(coords(), radius())

    def build(depth: int) -> SetExpr:
        if depth <= 0:
            return prim()
        roll = rng.randint(0, 5)
        if roll <= 2:
            return prim()
        if roll == 3:
            return Complement(build(depth - 1))
        members = tuple(build(depth - 1) for _ in range(rng.randint(2, 3)))
        return Union(members) if roll == 4 else Inter(members)

    return normalize(build(max_depth))
