"""Sound three-valued inference of descriptive-set classes of boundary sets.

Flags are about the set A in the Euclidean space L_n ≅ R^m (m = n-1 >= 1):
countability, closed/open, G_delta/F_sigma, compactness, whether A contains
a closed uncountable subset, and whether A is all of L_n or empty.  The flag
"contains a closed uncountable subset" is the pivot of the Lindelöf
characterization; it is evaluated on the complement of A by the theorem
layer.

The engine applies primitive axioms bottom-up, combines them over the
boolean connectives, and then closes the flag record under a fixed list of
implications valid in R^m, e.g.:

  * closed or open  => both G_delta and F_sigma,
  * countable       => F_sigma and no closed uncountable subset,
  * co-countable    => G_delta (the complement, countable, is F_sigma),
  * closed+bounded <=> compact (Heine-Borel),
  * uncountable G_delta => contains a closed uncountable subset (the
    perfect-set property of uncountable G_delta sets, a trusted axiom),
  * a Bernstein set and its complement contain no uncountable compacta and
    are neither G_delta nor F_sigma (trusted axioms).

True/False answers are sound claims; Unknown is the fallback — the engine
never guesses.  A contradiction between rules raises SoundnessError and
signals an implementation bug, never a property of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .geometry import DimensionMismatch
from .setdsl import (
    All,
    Bernstein,
    Cantor,
    ClosedBall,
    Complement,
    Empty,
    FiniteSet,
    IN,
    Inter,
    Lattice,
    OpenBall,
    Rationals,
    SetExpr,
    SinglePoint,
    Union,
    arity,
    find_witness,
    member,
    normalize,
    structural_candidates,
)
from .trivalent import FALSE, TRUE, UNKNOWN, Verdict

T, F, U = TRUE, FALSE, UNKNOWN

PUBLIC_FLAGS = (
    "countable",
    "co_countable",
    "closed",
    "open",
    "g_delta",
    "f_sigma",
    "compact",
    "contains_closed_uncountable",
    "equals_all",
    "equals_empty",
)

_ALL_FLAGS = PUBLIC_FLAGS + ("bounded",)


class SoundnessError(RuntimeError):
    """Two rules produced contradictory flags: an engine bug, never an input."""


@dataclass(frozen=True)
class DescClass:
    """Three-valued descriptive-class record of a boundary set."""

    countable: Verdict
    co_countable: Verdict
    closed: Verdict
    open: Verdict
    g_delta: Verdict
    f_sigma: Verdict
    compact: Verdict
    contains_closed_uncountable: Verdict
    equals_all: Verdict
    equals_empty: Verdict

    def to_json(self) -> dict[str, str]:
        return {name: getattr(self, name).value for name in PUBLIC_FLAGS}


# --- primitive axioms ---------------------------------------------------------
# Order of flags: countable, co_countable, closed, open, g_delta, f_sigma,
# compact, contains_closed_uncountable, equals_all, equals_empty, bounded.

def _row(ct, cc, cl, op, gd, fs, cp, cu, ea, ee, bd) -> dict[str, Verdict]:
    return dict(zip(_ALL_FLAGS, (ct, cc, cl, op, gd, fs, cp, cu, ea, ee, bd)))


_PRIMITIVE_AXIOMS = {
    Empty: _row(T, F, T, T, T, T, T, F, F, T, T),
    All: _row(F, T, T, T, T, T, F, T, T, F, F),
    # Q^m is countable and dense; it is F_sigma but not G_delta (Baire
    # category, trusted axiom), hence neither closed nor open.
    Rationals: _row(T, F, F, F, F, T, F, F, F, F, F),
    Lattice: _row(T, F, T, F, T, T, F, F, F, F, F),
    Cantor: _row(F, F, T, F, T, T, T, T, F, F, T),
    # Bernstein sets and their complements meet every uncountable compactum
    # yet contain none, so they are neither G_delta nor F_sigma, neither
    # closed nor open, and hold no closed uncountable subset.
    Bernstein: _row(F, F, F, F, F, F, F, F, F, F, F),
}


def _point_axioms() -> dict[str, Verdict]:
    return _row(T, F, T, F, T, T, T, F, F, F, T)


def _ball_axioms(closed_ball: bool) -> dict[str, Verdict]:
    if closed_ball:
        return _row(F, F, T, F, T, T, T, T, F, F, T)
    return _row(F, F, F, T, T, T, F, T, F, F, T)


# --- implication closure -------------------------------------------------------

_IMPLICATIONS: list[tuple[dict[str, Verdict], dict[str, Verdict]]] = [
    ({"closed": T}, {"g_delta": T, "f_sigma": T}),
    ({"open": T}, {"g_delta": T, "f_sigma": T}),
    ({"countable": T}, {"f_sigma": T, "contains_closed_uncountable": F,
                        "co_countable": F, "equals_all": F}),
    ({"co_countable": T}, {"g_delta": T, "countable": F, "equals_empty": F}),
    ({"contains_closed_uncountable": T}, {"countable": F, "equals_empty": F}),
    ({"closed": T, "countable": F}, {"contains_closed_uncountable": T}),
    ({"g_delta": T, "countable": F}, {"contains_closed_uncountable": T}),
    ({"closed": T, "contains_closed_uncountable": F}, {"countable": T}),
    ({"g_delta": T, "contains_closed_uncountable": F}, {"countable": T}),
    ({"closed": T, "bounded": T}, {"compact": T}),
    ({"closed": F}, {"compact": F}),
    ({"bounded": F}, {"compact": F}),
    ({"compact": T}, {"closed": T, "bounded": T}),
    ({"bounded": T}, {"equals_all": F}),
    ({"equals_empty": T}, {"countable": T, "closed": T, "open": T, "compact": T,
                           "bounded": T, "equals_all": F,
                           "contains_closed_uncountable": F}),
    ({"equals_all": T}, {"co_countable": T, "closed": T, "open": T,
                         "countable": F, "bounded": F, "equals_empty": F,
                         "contains_closed_uncountable": T}),
    ({"f_sigma": F}, {"closed": F, "open": F, "countable": F, "compact": F,
                      "equals_empty": F, "equals_all": F}),
    ({"g_delta": F}, {"closed": F, "open": F, "co_countable": F,
                      "equals_empty": F, "equals_all": F}),
]


def _close(flags: dict[str, Verdict], context: SetExpr) -> dict[str, Verdict]:
    changed = True
    while changed:
        changed = False
        for premises, conclusions in _IMPLICATIONS:
            if any(flags[name] is not want for name, want in premises.items()):
                continue
            for name, want in conclusions.items():
                have = flags[name]
                if have is U:
                    flags[name] = want
                    changed = True
                elif have is not want:
                    raise SoundnessError(
                        f"contradiction on {name} for {context!r}: "
                        f"{have.value} vs {want.value}"
                    )
    return flags


# --- combinators ---------------------------------------------------------------

def _all_true(verdicts) -> Verdict:
    return T if all(v is T for v in verdicts) else U


def _any_true(verdicts) -> Verdict:
    return T if any(v is T for v in verdicts) else U


def _any_false(verdicts) -> Verdict:
    return F if any(v is F for v in verdicts) else U


def _kleene_and(verdicts) -> Verdict:
    vs = list(verdicts)
    if any(v is F for v in vs):
        return F
    if all(v is T for v in vs):
        return T
    return U


def _union_flags(parts: list[dict[str, Verdict]]) -> dict[str, Verdict]:
    def col(name):
        return [p[name] for p in parts]

    return {
        "countable": _kleene_and(col("countable")),
        "co_countable": _any_true(col("co_countable")),
        "closed": _all_true(col("closed")),
        "open": _all_true(col("open")),
        "g_delta": _all_true(col("g_delta")),
        "f_sigma": _all_true(col("f_sigma")),
        "compact": _all_true(col("compact")),
        "contains_closed_uncountable": _any_true(col("contains_closed_uncountable")),
        "equals_all": _any_true(col("equals_all")),
        "equals_empty": _kleene_and(col("equals_empty")),
        "bounded": _kleene_and(col("bounded")),
    }


def _inter_flags(parts: list[dict[str, Verdict]]) -> dict[str, Verdict]:
    def col(name):
        return [p[name] for p in parts]

    return {
        "countable": _any_true(col("countable")),
        "co_countable": _kleene_and(col("co_countable")),
        "closed": _all_true(col("closed")),
        "open": _all_true(col("open")),
        "g_delta": _all_true(col("g_delta")),
        "f_sigma": _all_true(col("f_sigma")),
        "compact": _all_true(col("compact")),
        "contains_closed_uncountable": _any_false(col("contains_closed_uncountable")),
        "equals_all": _kleene_and(col("equals_all")),
        "equals_empty": _any_true(col("equals_empty")),
        "bounded": _any_true(col("bounded")),
    }


_SWAP_PAIRS = (
    ("countable", "co_countable"),
    ("co_countable", "countable"),
    ("closed", "open"),
    ("open", "closed"),
    ("g_delta", "f_sigma"),
    ("f_sigma", "g_delta"),
    ("equals_all", "equals_empty"),
    ("equals_empty", "equals_all"),
)


def _swap(inner: dict[str, Verdict]) -> dict[str, Verdict]:
    """Flags of the complement that follow directly from flags of the set."""
    out = {dst: inner[src] for dst, src in _SWAP_PAIRS}
    out["compact"] = U
    out["contains_closed_uncountable"] = U
    if inner["bounded"] is T:
        out["bounded"] = F  # the complement contains the exterior of a ball
    elif inner["equals_all"] is T:
        out["bounded"] = T  # the complement is empty
    else:
        out["bounded"] = U
    return out


def _merge(flags: dict[str, Verdict], update: dict[str, Verdict], context: SetExpr) -> bool:
    changed = False
    for name, want in update.items():
        if want is U:
            continue
        have = flags[name]
        if have is U:
            flags[name] = want
            changed = True
        elif have is not want:
            raise SoundnessError(
                f"contradiction on {name} for {context!r}: {have.value} vs {want.value}"
            )
    return changed


# --- closed-ball witness search -------------------------------------------------

_ONE_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)


def _interval_misses_cantor(lo: Fraction, hi: Fraction, depth: int = 0) -> bool:
    """Sound test that the closed interval [lo, hi] avoids the Cantor set."""
    if hi < 0 or lo > 1:
        return True
    if lo > _ONE_THIRD and hi < _TWO_THIRDS:
        return True
    if depth > 64:
        return False
    if hi <= _ONE_THIRD:
        return _interval_misses_cantor(3 * lo, 3 * hi, depth + 1)
    if lo >= _TWO_THIRDS:
        return _interval_misses_cantor(3 * lo - 2, 3 * hi - 2, depth + 1)
    return False


def _sq(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum(((a - b) * (a - b) for a, b in zip(p, q)), Fraction(0))


def _ball_inside(e: SetExpr, c: tuple[Fraction, ...], r: Fraction) -> bool:
    """Sound test that the closed ball B[c, r] is contained in the set."""
    if isinstance(e, All):
        return True
    if isinstance(e, (Empty, Rationals, Lattice, Cantor, Bernstein,
                      SinglePoint, FiniteSet)):
        return False  # none of these contains a ball of positive radius
    if isinstance(e, ClosedBall):
        return r <= e.radius and _sq(c, e.center) <= (e.radius - r) ** 2
    if isinstance(e, OpenBall):
        return r < e.radius and _sq(c, e.center) < (e.radius - r) ** 2
    if isinstance(e, Complement):
        return _ball_disjoint(e.body, c, r)
    if isinstance(e, Union):
        return any(_ball_inside(m, c, r) for m in e.members)
    if isinstance(e, Inter):
        return all(_ball_inside(m, c, r) for m in e.members)
    return False


def _ball_disjoint(e: SetExpr, c: tuple[Fraction, ...], r: Fraction) -> bool:
    """Sound test that the closed ball B[c, r] misses the set."""
    if isinstance(e, Empty):
        return True
    if isinstance(e, (All, Rationals, Bernstein)):
        # rationals are dense; a Bernstein set meets every closed ball
        # (a ball is an uncountable compactum)
        return False
    if isinstance(e, SinglePoint):
        return _sq(e.coords, c) > r * r
    if isinstance(e, FiniteSet):
        return all(_sq(pt, c) > r * r for pt in e.points)
    if isinstance(e, Lattice):
        # disjoint if along some axis the interval [c_i - r, c_i + r]
        # contains no integer
        return any(
            math.ceil(ci - r) > math.floor(ci + r) for ci in c
        )
    if isinstance(e, Cantor):
        if _interval_misses_cantor(c[0] - r, c[0] + r):
            return True
        return any(ci - r > 0 or ci + r < 0 for ci in c[1:])
    if isinstance(e, ClosedBall):
        return _sq(c, e.center) > (r + e.radius) ** 2
    if isinstance(e, OpenBall):
        return _sq(c, e.center) >= (r + e.radius) ** 2
    if isinstance(e, Complement):
        return _ball_inside(e.body, c, r)
    if isinstance(e, Union):
        return all(_ball_disjoint(m, c, r) for m in e.members)
    if isinstance(e, Inter):
        return any(_ball_disjoint(m, c, r) for m in e.members)
    return False


def _candidate_balls(e: SetExpr, m: int) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    cands: list[tuple[tuple[Fraction, ...], Fraction]] = []

    def axis(center, i, offset):
        return center[:i] + (center[i] + offset,) + center[i + 1:]

    def from_ball(center, radius):
        cands.append((center, radius / 2))
        cands.append((center, radius / 4))
        for i in range(len(center)):
            for frac in (Fraction(3, 4), Fraction(1, 2), Fraction(-3, 4), Fraction(-1, 2)):
                cands.append((axis(center, i, frac * radius), radius / 8))

    def walk(node):
        if isinstance(node, (ClosedBall, OpenBall)):
            from_ball(node.center, node.radius)
        elif isinstance(node, Complement):
            walk(node.body)
        elif isinstance(node, (Union, Inter)):
            for child in node.members:
                walk(child)

    walk(e)
    zeros = (Fraction(0),) * m
    halves = (Fraction(1, 2),) * m
    cands.extend(
        [
            (zeros, Fraction(1)),
            (zeros, Fraction(1, 2)),
            (halves, Fraction(1, 4)),
            (halves, Fraction(1, 16)),
            ((Fraction(5, 2),) + (Fraction(1, 2),) * (m - 1), Fraction(1, 4)),
            ((Fraction(-5, 2),) + (Fraction(1, 2),) * (m - 1), Fraction(1, 4)),
        ]
    )
    deduped = []
    for cand in cands:
        if cand not in deduped:
            deduped.append(cand)
    return deduped


_BALL_SEARCH_BUDGET = 1000


@lru_cache(maxsize=None)
def _closed_ball_witness(e: SetExpr, m: int) -> bool:
    for center, radius in _candidate_balls(e, m)[:_BALL_SEARCH_BUDGET]:
        if _ball_inside(e, center, radius):
            return True
    return False


# --- inference -----------------------------------------------------------------

def _combine_node(e: SetExpr) -> dict[str, Verdict]:
    """Flags of a complement-free node from axioms and its children's records."""
    if isinstance(e, (SinglePoint, FiniteSet)):
        return _point_axioms()
    if isinstance(e, ClosedBall):
        return _ball_axioms(closed_ball=True)
    if isinstance(e, OpenBall):
        return _ball_axioms(closed_ball=False)
    if type(e) in _PRIMITIVE_AXIOMS:
        return dict(_PRIMITIVE_AXIOMS[type(e)])
    if isinstance(e, Union):
        return _union_flags([dict(_flags(m)) for m in e.members])
    if isinstance(e, Inter):
        return _inter_flags([dict(_flags(m)) for m in e.members])
    raise TypeError(f"not a combinable set expression: {e!r}")


def _point_witness(e: SetExpr, m: int) -> bool:
    return any(member(e, cand) is IN for cand in structural_candidates(e, m))


@lru_cache(maxsize=None)
def _pair_flags(key: SetExpr) -> tuple[dict[str, Verdict], dict[str, Verdict]]:
    """Joint records of a complement-free expression and of its complement.

    The two sides are closed together: anything either side learns (through
    its own rules, the ball-witness search, or a membership witness) flows
    to the other through the swap, so the engine answers symmetrically about
    a set and its complement.
    """
    ckey = normalize(Complement(key))
    a = _close(_combine_node(key), key)
    if isinstance(key, Bernstein):
        # the complement of a Bernstein set is again a Bernstein set
        b = dict(_PRIMITIVE_AXIOMS[Bernstein])
    elif isinstance(ckey, Complement):
        b = _swap(a)
    else:
        b = _combine_node(ckey)  # complement of all/empty is a primitive again
    b = _close(b, ckey)

    m = arity(key) or 1
    changed = True
    while changed:
        changed = False
        if _merge(a, _swap(b), key):
            a = _close(a, key)
            changed = True
        if _merge(b, _swap(a), ckey):
            b = _close(b, ckey)
            changed = True
        for flags, expr in ((a, key), (b, ckey)):
            if flags["contains_closed_uncountable"] is U and _closed_ball_witness(expr, m):
                flags["contains_closed_uncountable"] = T
                _close(flags, expr)
                changed = True
            if flags["equals_empty"] is U and _point_witness(expr, m):
                flags["equals_empty"] = F
                _close(flags, expr)
                changed = True
    return a, b


def _flags(e: SetExpr) -> dict[str, Verdict]:
    if isinstance(e, Complement):
        return _pair_flags(e.body)[1]
    return _pair_flags(e)[0]


def infer(e: SetExpr) -> DescClass:
    """Descriptive-class record of a normalized boundary-set expression."""
    flags = _flags(normalize(e))
    return DescClass(**{name: flags[name] for name in PUBLIC_FLAGS})


def contains_closed_uncountable(e: SetExpr) -> Verdict:
    """Whether the set contains a closed (in L_n) uncountable subset.

    Exposed separately because the Lindelöf characterization applies it to
    the complement of the boundary set.
    """
    return infer(e).contains_closed_uncountable


# --- subset and the topology poset ----------------------------------------------

def _point_list(e: SetExpr) -> Optional[tuple[tuple[Fraction, ...], ...]]:
    if isinstance(e, SinglePoint):
        return (e.coords,)
    if isinstance(e, FiniteSet):
        return e.points
    return None


def _structural_subset(a: SetExpr, b: SetExpr) -> bool:
    """Sound (never falsely True) structural subset test."""
    if a == b or isinstance(a, Empty) or isinstance(b, All):
        return True
    if isinstance(b, Union) and any(_structural_subset(a, m) for m in b.members):
        return True
    if isinstance(a, Union) and all(_structural_subset(m, b) for m in a.members):
        return True
    if isinstance(a, Inter) and any(_structural_subset(m, b) for m in a.members):
        return True
    if isinstance(b, Inter) and all(_structural_subset(a, m) for m in b.members):
        return True
    if isinstance(a, Complement) and isinstance(b, Complement):
        return _structural_subset(b.body, a.body)
    pts = _point_list(a)
    if pts is not None:
        try:
            return all(member(b, p) is IN for p in pts)
        except DimensionMismatch:  # pragma: no cover
            return False
    if isinstance(a, Lattice) and isinstance(b, Rationals):
        return True
    if isinstance(a, Cantor) and isinstance(b, (ClosedBall, OpenBall)):
        m = len(b.center)
        corners = [
            (Fraction(0),) + (Fraction(0),) * (m - 1),
            (Fraction(1),) + (Fraction(0),) * (m - 1),
        ]
        # the Cantor box is the segment between the corners; balls are convex
        if isinstance(b, ClosedBall):
            return all(_sq(corner, b.center) <= b.radius ** 2 for corner in corners)
        return all(_sq(corner, b.center) < b.radius ** 2 for corner in corners)
    if isinstance(a, (ClosedBall, OpenBall)) and isinstance(b, (ClosedBall, OpenBall)):
        strict = isinstance(a, ClosedBall) and isinstance(b, OpenBall)
        if strict:
            return a.radius < b.radius and _sq(a.center, b.center) < (b.radius - a.radius) ** 2
        return a.radius <= b.radius and _sq(a.center, b.center) <= (b.radius - a.radius) ** 2
    return False


def subset(e1: SetExpr, e2: SetExpr, budget: int = 1000, seed: int = 0) -> Verdict:
    """Three-valued subset test: structural rules prove True, a witness in
    e1 \\ e2 proves False, otherwise Unknown."""
    e1, e2 = normalize(e1), normalize(e2)
    if _structural_subset(e1, e2):
        return T
    dim = None
    a = arity(e1) or arity(e2)
    if a is not None:
        dim = a + 1
    gap = normalize(Inter((e1, Complement(e2))))
    if find_witness(gap, budget=budget, seed=seed, dimension=dim) is not None:
        return F
    return U


class TopologyOrder(Enum):
    FINER = "finer"
    COARSER = "coarser"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"
    UNKNOWN = "unknown"


def compare_topologies(eA: SetExpr, eB: SetExpr, budget: int = 1000, seed: int = 0) -> TopologyOrder:
    """Order of tau(A) versus tau(B): A ⊆ B iff tau(A) ⊇ tau(B).

    FINER means tau(A) ⊇ tau(B) is established (EQUAL when both inclusions
    are); whether the inclusion is strict may be open.
    """
    fwd = subset(eA, eB, budget=budget, seed=seed)
    rev = subset(eB, eA, budget=budget, seed=seed)
    if fwd is T and rev is T:
        return TopologyOrder.EQUAL
    if fwd is T:
        return TopologyOrder.FINER
    if rev is T:
        return TopologyOrder.COARSER
    if fwd is F and rev is F:
        return TopologyOrder.INCOMPARABLE
    return TopologyOrder.UNKNOWN
