"""Vector algebra of Minkowski 3-space R^3_1.

The flat metric is g = dx1^2 + dx2^2 - dx3^2: the third coordinate carries
the minus sign.  A vector is spacelike when g(v,v) > 0 or v = 0, timelike
when g(v,v) < 0, and null when g(v,v) = 0 with v != 0.  All operations here
are pure functions; values are immutable and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import GeometryError

# Relative half-width of the band around g(v,v) = 0 classified as null.
# Scaled by the squared Euclidean magnitude so classification is stable for
# vectors of any size.
EPS_CAUSAL = 1e-9


class NotTimelikeError(GeometryError):
    """Operation requires timelike arguments."""

    code = "not-timelike"


class NullInputError(GeometryError):
    """Null (or zero) vector where a non-null one is required."""

    code = "null-input"


class OppositeTimeconesError(GeometryError):
    """Timelike pair lies in opposite time-conics; no hyperbolic angle exists."""

    code = "opposite-timecones"


class DegenerateSpanError(GeometryError):
    """Spacelike pair spans a degenerate plane (contains a null direction)."""

    code = "degenerate-span"


class CausalCharacter(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    NULL = "null"


@dataclass(frozen=True, slots=True)
class LVec3:
    """3-vector carrying (+,+,-) inner-product semantics.

    Components must be finite; NaN/Inf are rejected at construction so they
    can never leak into downstream algebra.
    """

    x1: float
    x2: float
    x3: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))
        object.__setattr__(self, "x3", float(self.x3))
        if not (math.isfinite(self.x1) and math.isfinite(self.x2) and math.isfinite(self.x3)):
            raise ValueError(f"non-finite vector component: ({self.x1}, {self.x2}, {self.x3})")

    def __add__(self, other: "LVec3") -> "LVec3":
        return LVec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "LVec3") -> "LVec3":
        return LVec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "LVec3":
        return LVec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, s: float) -> "LVec3":
        return LVec3(self.x1 * s, self.x2 * s, self.x3 * s)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)


def metric(v: LVec3, w: LVec3) -> float:
    """Indefinite inner product v1*w1 + v2*w2 - v3*w3."""
    return v.x1 * w.x1 + v.x2 * w.x2 - v.x3 * w.x3


def norm(v: LVec3) -> float:
    """sqrt(|g(v,v)|); zero exactly on null vectors."""
    return math.sqrt(abs(metric(v, v)))


def euclid_sq(v: LVec3) -> float:
    """Squared Euclidean magnitude, used only for scale-aware tolerances."""
    return v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3


def lorentz_cross(v: LVec3, w: LVec3) -> LVec3:
    """Lorentzian product, orthogonal (in g) to both arguments.

    Components: (v3*w2 - v2*w3, v1*w3 - v3*w1, v1*w2 - v2*w1).
    """
    return LVec3(
        v.x3 * w.x2 - v.x2 * w.x3,
        v.x1 * w.x3 - v.x3 * w.x1,
        v.x1 * w.x2 - v.x2 * w.x1,
    )


def det3(a: LVec3, b: LVec3, c: LVec3) -> float:
    """Plain 3x3 component determinant with rows (a, b, c); no metric weight."""
    return (
        a.x1 * (b.x2 * c.x3 - b.x3 * c.x2)
        - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1)
        + a.x3 * (b.x1 * c.x2 - b.x2 * c.x1)
    )


def causal_character(v: LVec3, eps: float = EPS_CAUSAL) -> CausalCharacter:
    """Classify v as spacelike, timelike, or null.

    The zero vector is spacelike by definition.  Otherwise |g(v,v)| within
    eps * max(1, |v|_euclid^2) of zero reads as null.
    """
    if v.x1 == 0.0 and v.x2 == 0.0 and v.x3 == 0.0:
        return CausalCharacter.SPACELIKE
    q = metric(v, v)
    if abs(q) <= eps * max(1.0, euclid_sq(v)):
        return CausalCharacter.NULL
    return CausalCharacter.SPACELIKE if q > 0.0 else CausalCharacter.TIMELIKE


def same_timecone(v: LVec3, w: LVec3, eps: float = EPS_CAUSAL) -> bool:
    """True when two timelike vectors lie in the same time-conic."""
    if causal_character(v, eps) is not CausalCharacter.TIMELIKE:
        raise NotTimelikeError(f"first argument is not timelike: {v.as_tuple()}")
    if causal_character(w, eps) is not CausalCharacter.TIMELIKE:
        raise NotTimelikeError(f"second argument is not timelike: {w.as_tuple()}")
    return metric(v, w) < 0.0


class AngleKind(Enum):
    TIMELIKE_TIMELIKE = "timelike-timelike"
    SPACELIKE_SPACELIKE_EUCLIDEAN = "spacelike-spacelike-euclidean"
    SPACELIKE_SPACELIKE_HYPERBOLIC = "spacelike-spacelike-hyperbolic"
    SPACELIKE_TIMELIKE = "spacelike-timelike"


@dataclass(frozen=True)
class AngleResult:
    theta: float
    kind: AngleKind


def angle_between(v: LVec3, w: LVec3, eps: float = EPS_CAUSAL) -> AngleResult:
    """Angle between two non-null vectors, dispatching on causal characters.

    Both timelike (same conic): theta = arcosh(-g / (|v||w|)).
    Both spacelike, spacelike span: theta = arccos(g / (|v||w|)) in [0, pi].
    Both spacelike, timelike span:  theta = arcosh(|g| / (|v||w|)).
    Mixed:                          theta = arsinh(|g| / (|v||w|)).

    The span of a spacelike pair is classified by the sign of the Gram
    determinant g(v,v)g(w,w) - g(v,w)^2.  The hyperbolic branches use |g| so
    a unique theta >= 0 exists for either sign of g.
    """
    cv = causal_character(v, eps)
    cw = causal_character(w, eps)
    if cv is CausalCharacter.NULL or norm(v) == 0.0:
        raise NullInputError(f"first argument is null or zero: {v.as_tuple()}")
    if cw is CausalCharacter.NULL or norm(w) == 0.0:
        raise NullInputError(f"second argument is null or zero: {w.as_tuple()}")

    g = metric(v, w)
    denom = norm(v) * norm(w)

    if cv is CausalCharacter.TIMELIKE and cw is CausalCharacter.TIMELIKE:
        if g >= 0.0:
            raise OppositeTimeconesError("timelike pair lies in opposite time-conics")
        return AngleResult(math.acosh(max(1.0, -g / denom)), AngleKind.TIMELIKE_TIMELIKE)

    if cv is CausalCharacter.SPACELIKE and cw is CausalCharacter.SPACELIKE:
        gram = metric(v, v) * metric(w, w) - g * g
        if abs(gram) <= eps * max(1.0, euclid_sq(v) * euclid_sq(w)):
            raise DegenerateSpanError("spacelike pair spans a degenerate plane")
        if gram > 0.0:
            ratio = min(1.0, max(-1.0, g / denom))
            return AngleResult(math.acos(ratio), AngleKind.SPACELIKE_SPACELIKE_EUCLIDEAN)
        return AngleResult(
            math.acosh(max(1.0, abs(g) / denom)), AngleKind.SPACELIKE_SPACELIKE_HYPERBOLIC
        )

    return AngleResult(math.asinh(abs(g) / denom), AngleKind.SPACELIKE_TIMELIKE)
