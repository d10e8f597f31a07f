"""Local bases, refinement and convergence for the tangent-ball topologies.

A boundary set A ⊆ L_n induces the topology tau(A) on X_n:

  * interior points keep Euclidean balls B(a, eps) with 0 < eps < a_n,
  * boundary points in A keep Euclidean half-balls B(a, eps) ∩ X_n,
  * boundary points outside A receive tangent balls {a} ∪ B(a(eps), eps).

tau(L_n) is the Euclidean topology and tau(∅) the classical tangent-ball
(Niemytzki) topology; the constructors below normalize those two cases so
``euclidean(n) == modified(all, n)`` and ``niemytzki(n) == modified(empty, n)``.

Convergence is decided only for the two closed-form sequence families, with
machine-checkable certificates: an exact index bound when the sequence
converges, and a blocking neighborhood plus per-term isolating radii when a
boundary-sphere sequence is discrete.  Arbitrary finite prefixes only yield
inconclusive verdicts — "for every eps, eventually inside" is undecidable
for a black-box sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geometry import (
    BallSpec,
    DimensionMismatch,
    Point,
    RatLike,
    in_ball,
    in_tangent_ball,
    inner_ball_radius,
    rat,
    rat_to_str,
    tangent_gauge,
    translate,
)
from .setdsl import IN, OUT, All, Empty, SetExpr, member, normalize, to_text


class UndecidableMembership(RuntimeError):
    """The boundary-set oracle answered Unknown where a decision was needed."""


@dataclass(frozen=True)
class TopologySpec:
    """One of the topologies tau(A) on X_n, A given as a set expression."""

    dimension: int
    boundary_set: SetExpr

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError("dimension must be at least 2")
        object.__setattr__(self, "boundary_set", normalize(self.boundary_set))

    @staticmethod
    def euclidean(dimension: int) -> "TopologySpec":
        return TopologySpec(dimension, All())

    @staticmethod
    def niemytzki(dimension: int) -> "TopologySpec":
        return TopologySpec(dimension, Empty())

    @staticmethod
    def modified(boundary_set: SetExpr, dimension: int) -> "TopologySpec":
        return TopologySpec(dimension, boundary_set)

    @property
    def kind(self) -> str:
        if self.boundary_set == All():
            return "euclidean"
        if self.boundary_set == Empty():
            return "niemytzki"
        return "modified"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dimension": self.dimension,
            "boundary_set": to_text(self.boundary_set),
        }


# --- basic open sets ------------------------------------------------------------

@dataclass(frozen=True)
class BasicOpen:
    center: Point
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", rat(self.radius))
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    kind = "basic-open"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "center": self.center.to_json(),
            "radius": rat_to_str(self.radius),
        }


@dataclass(frozen=True)
class InteriorBall(BasicOpen):
    """B(center, radius) with radius < center_n, so the ball stays in P_n."""

    kind = "interior-ball"

    def __post_init__(self):
        super().__post_init__()
        if self.center.is_boundary:
            raise ValueError("interior balls are centered at interior points")
        if self.radius >= self.center.coords[-1]:
            raise ValueError("interior ball must stay inside the open half-space")


@dataclass(frozen=True)
class HalfBall(BasicOpen):
    """B(center, radius) ∩ X_n for a boundary center."""

    kind = "half-ball"

    def __post_init__(self):
        super().__post_init__()
        if not self.center.is_boundary:
            raise ValueError("half balls are centered on the boundary hyperplane")


@dataclass(frozen=True)
class TangentBall(BasicOpen):
    """{center} ∪ B(center(radius), radius) for a boundary center."""

    kind = "tangent-ball"

    def __post_init__(self):
        super().__post_init__()
        if not self.center.is_boundary:
            raise ValueError("tangent balls are centered on the boundary hyperplane")

    def equivalent_ball(self) -> BallSpec:
        """The Euclidean ball B(a(eps), eps) whose union with {a} is this set."""
        lifted = self.center.coords[:-1] + (self.radius,)
        return BallSpec(Point(lifted), self.radius)


def contains(b: BasicOpen, x: Point) -> bool:
    """Exact membership of a point of X_n in a basic open set."""
    if b.center.dimension != x.dimension:
        raise DimensionMismatch("basic open and point live in different dimensions")
    if isinstance(b, TangentBall):
        return in_tangent_ball(x, b.center, b.radius)
    return in_ball(x, BallSpec(b.center, b.radius))


def local_base_element(topo: TopologySpec, p: Point, eps: RatLike) -> BasicOpen:
    """The basic tau(A)-open of size eps at p.

    Interior points get B(p, min(eps, p_n/2)): the clamp keeps the element
    inside the open half-space while the operation stays total in eps.
    Boundary points get a half ball when p is in A and a tangent ball when it
    is not; an Unknown membership (Bernstein boundary sets) aborts with
    UndecidableMembership.
    """
    eps = rat(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if p.dimension != topo.dimension:
        raise DimensionMismatch("point dimension differs from the topology's")
    if not p.is_boundary:
        return InteriorBall(p, min(eps, p.coords[-1] / 2))
    verdict = member(topo.boundary_set, p.boundary_coords())
    if verdict is IN:
        return HalfBall(p, eps)
    if verdict is OUT:
        return TangentBall(p, eps)
    raise UndecidableMembership(
        f"membership of {p.to_json()} in {to_text(topo.boundary_set)} is unknown"
    )


def _interior_margin(b: BasicOpen, x: Point) -> Fraction:
    ball = b.equivalent_ball() if isinstance(b, TangentBall) else BallSpec(b.center, b.radius)
    return inner_ball_radius(x, ball)


def _boundary_margin(b: HalfBall, x: Point) -> Fraction:
    if b.center == x:
        return b.radius
    return inner_ball_radius(x, BallSpec(b.center, b.radius))


def refine(b1: BasicOpen, b2: BasicOpen, x: Point) -> BasicOpen:
    """A basic open containing x and contained in b1 ∩ b2.

    Interior x: an interior ball around x whose radius is the smaller of the
    two rational containment margins (for a tangent container the margin is
    taken against its equivalent Euclidean ball).  Boundary x: tangent balls
    in play must be centered at x — a tangent ball contains no other boundary
    point — and the result is the tangent or half ball at x of the largest
    radius that still fits; a tangent ball of parameter d sits inside
    B(x, 2d), which gives the halving against half-ball containers.
    """
    for b in (b1, b2):
        if not contains(b, x):
            raise ValueError("refine needs a point lying in both basic opens")
    if not x.is_boundary:
        radius = min(_interior_margin(b1, x), _interior_margin(b2, x), x.coords[-1] / 2)
        return InteriorBall(x, radius)
    tangents = [b for b in (b1, b2) if isinstance(b, TangentBall)]
    halves = [b for b in (b1, b2) if isinstance(b, HalfBall)]
    if len(tangents) + len(halves) != 2:
        raise ValueError("a boundary point lies in no interior ball")
    for t in tangents:
        # two tangent balls at distinct boundary points cannot share a
        # boundary point; reaching this with t.center != x is a logic bug
        assert t.center == x, "tangent ball containing a foreign boundary point"
    if tangents:
        constraints = [t.radius for t in tangents]
        constraints += [_boundary_margin(h, x) / 2 for h in halves]
        return TangentBall(x, min(constraints))
    return HalfBall(x, min(_boundary_margin(h, x) for h in halves))


# --- closed-form sequence families ------------------------------------------------

@dataclass(frozen=True)
class SequenceFamily:
    pass


@dataclass(frozen=True)
class Vertical(SequenceFamily):
    """x_k = a + (0, ..., 0, height/k): descends to the anchor along the normal."""

    anchor: Point
    height: Fraction

    def __post_init__(self):
        object.__setattr__(self, "height", rat(self.height))
        if not self.anchor.is_boundary:
            raise ValueError("the anchor must lie on the boundary hyperplane")
        if self.height <= 0:
            raise ValueError("height must be positive")

    def term(self, k: int) -> Point:
        if k < 1:
            raise ValueError("terms are indexed from 1")
        offset = (0,) * (self.anchor.dimension - 1) + (self.height / k,)
        return translate(self.anchor, offset)

    def to_json(self) -> dict:
        return {
            "family": "vertical",
            "anchor": self.anchor.to_json(),
            "height": rat_to_str(self.height),
        }


@dataclass(frozen=True)
class TangentCircle(SequenceFamily):
    """Rational points marching to the anchor along the tangent-ball sphere.

    x_k = (a_1 + 2*eps*k/(k^2+1), a_2, ..., a_{n-1}, 2*eps/(k^2+1)): the
    tangent half-angle parameterization, so every term satisfies the gauge
    equality tangent_gauge = 2*eps*x_n exactly and converges to the anchor
    in the Euclidean sense.
    """

    anchor: Point
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", rat(self.eps))
        if not self.anchor.is_boundary:
            raise ValueError("the anchor must lie on the boundary hyperplane")
        if self.eps <= 0:
            raise ValueError("eps must be positive")

    def term(self, k: int) -> Point:
        if k < 1:
            raise ValueError("terms are indexed from 1")
        den = k * k + 1
        offset = (
            (2 * self.eps * k / den,)
            + (0,) * (self.anchor.dimension - 2)
            + (2 * self.eps / den,)
        )
        return translate(self.anchor, offset)

    def to_json(self) -> dict:
        return {
            "family": "tangent-circle",
            "anchor": self.anchor.to_json(),
            "eps": rat_to_str(self.eps),
        }


@dataclass(frozen=True)
class FiniteList(SequenceFamily):
    points: tuple[Point, ...]

    def to_json(self) -> dict:
        return {"family": "finite-list", "points": [p.to_json() for p in self.points]}


# --- convergence certificates -----------------------------------------------------

@dataclass(frozen=True)
class IndexBound:
    """Exact membership threshold for the eps-neighborhood of the anchor.

    form "linear":    x_k in N(a, eps)  iff  k > coefficient / eps
    form "quadratic": x_k in N(a, eps)  iff  k^2 + 1 > coefficient / eps^2
    """

    form: str
    coefficient: Fraction
    description: str

    def holds(self, k: int, eps: Fraction) -> bool:
        if self.form == "linear":
            return k > self.coefficient / eps
        if self.form == "quadratic":
            return Fraction(k * k + 1) > self.coefficient / (eps * eps)
        raise ValueError(f"unknown index-bound form {self.form!r}")

    def to_json(self) -> dict:
        return {
            "kind": "index-bound",
            "form": self.form,
            "coefficient": rat_to_str(self.coefficient),
            "description": self.description,
        }


@dataclass(frozen=True)
class BlockingNeighborhood:
    """A basic open around the limit containing no term of the sequence."""

    neighborhood: BasicOpen

    def to_json(self) -> dict:
        return {"kind": "blocking-neighborhood", "neighborhood": self.neighborhood.to_json()}


@dataclass(frozen=True)
class DiscretenessRadii:
    """Per-term isolating interior balls: each excludes every other term and
    the anchor, witnessing discreteness of the prefix."""

    entries: tuple[tuple[Point, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "kind": "discreteness-radii",
            "entries": [
                {"point": p.to_json(), "radius": rat_to_str(r)} for p, r in self.entries
            ],
        }


@dataclass(frozen=True)
class ConvergenceVerdict:
    converges: Optional[bool]  # None: inconclusive (finite prefixes only)
    certificates: tuple = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "converges": "inconclusive" if self.converges is None else self.converges,
            "certificates": [c.to_json() for c in self.certificates],
        }


def _isolating_radii(
    fam: TangentCircle, prefix: int
) -> tuple[tuple[Point, Fraction], ...]:
    from .geometry import sq_dist  # local import to keep module top uncluttered

    terms = [fam.term(k) for k in range(1, prefix + 1)]
    entries = []
    for i, p in enumerate(terms):
        others = [q for j, q in enumerate(terms) if j != i] + [fam.anchor]
        gap = min(sq_dist(p, q) for q in others)
        # any radius with radius^2 <= gap works; min(1, gap) does, exactly
        radius = min(Fraction(1), gap, p.coords[-1] / 2)
        entries.append((p, radius))
    return tuple(entries)


def decide_convergence(
    fam: SequenceFamily, topo: TopologySpec, limit: Point, prefix: int = 100
) -> ConvergenceVerdict:
    """Convergence of a closed-form family to its anchor under tau(A).

    Vertical families converge under every topology; the index bound is
    k > h/eps for half-ball neighborhoods and k > h/(2 eps) for tangent
    balls.  Tangent-circle families converge exactly when the anchor keeps
    Euclidean neighborhoods; otherwise the tangent ball of the family's own
    parameter blocks every term and the prefix is certified discrete.
    """
    if isinstance(fam, FiniteList):
        return ConvergenceVerdict(None, ())
    if limit != fam.anchor:
        raise ValueError("the limit must be the family's anchor")
    if fam.anchor.dimension != topo.dimension:
        raise DimensionMismatch("family dimension differs from the topology's")
    verdict = member(topo.boundary_set, fam.anchor.boundary_coords())
    if verdict not in (IN, OUT):
        raise UndecidableMembership(
            f"membership of the anchor in {to_text(topo.boundary_set)} is unknown"
        )
    euclidean_at_anchor = verdict is IN

    if isinstance(fam, Vertical):
        if euclidean_at_anchor:
            bound = IndexBound(
                "linear",
                fam.height,
                "inside the half ball B(a, eps) once k > height/eps",
            )
        else:
            bound = IndexBound(
                "linear",
                fam.height / 2,
                "inside the tangent ball of parameter eps once k > height/(2*eps)",
            )
        return ConvergenceVerdict(True, (bound,))

    if isinstance(fam, TangentCircle):
        if euclidean_at_anchor:
            bound = IndexBound(
                "quadratic",
                4 * fam.eps * fam.eps,
                "inside B(a, eps) once k^2 + 1 > 4*eps_0^2/eps^2 "
                "(eps_0 the family parameter)",
            )
            return ConvergenceVerdict(True, (bound,))
        blocking = BlockingNeighborhood(TangentBall(fam.anchor, fam.eps))
        radii = DiscretenessRadii(_isolating_radii(fam, prefix))
        return ConvergenceVerdict(False, (blocking, radii))

    raise TypeError(f"not a sequence family: {fam!r}")


_DEFAULT_DELTAS = (
    Fraction(2),
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2, 7),
)


def certificate_failures(
    verdict: ConvergenceVerdict,
    fam: SequenceFamily,
    topo: TopologySpec,
    prefix: int = 100,
    deltas: tuple[Fraction, ...] = _DEFAULT_DELTAS,
) -> list[str]:
    """Re-verify every certificate on the first ``prefix`` terms.

    Index bounds are exact iff-thresholds, so both directions are checked.
    Returns human-readable failure messages; an empty list means verified.
    """
    failures: list[str] = []
    if isinstance(fam, FiniteList):
        return failures
    terms = [fam.term(k) for k in range(1, prefix + 1)]
    for cert in verdict.certificates:
        if isinstance(cert, IndexBound):
            for delta in deltas:
                base = local_base_element(topo, fam.anchor, delta)
                for k, term in enumerate(terms, start=1):
                    if contains(base, term) != cert.holds(k, delta):
                        failures.append(
                            f"index bound disagrees at k={k}, eps={delta}"
                        )
        elif isinstance(cert, BlockingNeighborhood):
            for k, term in enumerate(terms, start=1):
                if contains(cert.neighborhood, term):
                    failures.append(f"blocking neighborhood admits term k={k}")
            if isinstance(fam, TangentCircle):
                for k, term in enumerate(terms, start=1):
                    gauge = tangent_gauge(term, fam.anchor)
                    if gauge != 2 * fam.eps * term.coords[-1]:
                        failures.append(f"gauge equality fails at k={k}")
        elif isinstance(cert, DiscretenessRadii):
            listed = [p for p, _ in cert.entries]
            for i, (p, radius) in enumerate(cert.entries):
                ball = InteriorBall(p, radius)
                for j, q in enumerate(listed):
                    if j != i and contains(ball, q):
                        failures.append(
                            f"isolating ball of term {i + 1} admits term {j + 1}"
                        )
                if contains(ball, fam.anchor):
                    failures.append(f"isolating ball of term {i + 1} admits the anchor")
        else:
            failures.append(f"unknown certificate {cert!r}")
    return failures
