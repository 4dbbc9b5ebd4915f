"""Parametric curves and the orthonormal director frame {e, n, xi}.

Along a non-null director curve with non-null derivative the frame is

    e  = director, normalized pointwise,
    n  = e' / ||e'||            (kappa = ||e'||),
    xi = (e ^ e') / ||e ^ e'||  (Lorentzian product),

and exactly one frame vector is timelike.  The torsion is read off the
shared relation xi' = tau n as tau = g(xi', n) / g(n, n), which holds in all
three causal frame types and lets the metric factor absorb the signature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DefinitionError, GeometryError
from .expr import CurveSpec, DomainError, eval_dual2
from .lorentz import (
    EPS_CAUSAL,
    CausalCharacter,
    LVec3,
    causal_character,
    euclid_sq,
    lorentz_cross,
    metric,
)


class OutOfDomainError(GeometryError):
    code = "out-of-domain"


class NullTangentError(GeometryError):
    """Director derivative is null; outside the three causal frame types."""

    code = "null-tangent"


class CylindricalDirectorError(GeometryError):
    """Director is not turning (e' ~ 0 or e ^ e' ~ 0)."""

    code = "cylindrical-director"


class NullDirectorError(GeometryError):
    """Director vector itself is null (or zero); it cannot be normalized."""

    code = "null-director"


class FrameType(Enum):
    SPACE_TIME_SPACE = "SpaceTimeSpace"
    TIME_SPACE_SPACE = "TimeSpaceSpace"
    SPACE_SPACE_TIME = "SpaceSpaceTime"


_FRAME_TYPES = {
    (CausalCharacter.SPACELIKE, CausalCharacter.TIMELIKE, CausalCharacter.SPACELIKE): FrameType.SPACE_TIME_SPACE,
    (CausalCharacter.TIMELIKE, CausalCharacter.SPACELIKE, CausalCharacter.SPACELIKE): FrameType.TIME_SPACE_SPACE,
    (CausalCharacter.SPACELIKE, CausalCharacter.SPACELIKE, CausalCharacter.TIMELIKE): FrameType.SPACE_SPACE_TIME,
}


@dataclass(frozen=True)
class ParamCurve:
    """A curve u -> (x1(u), x2(u), x3(u)) on a closed parameter interval."""

    spec: CurveSpec
    domain: tuple[float, float]

    def __post_init__(self) -> None:
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise DefinitionError(f"invalid parameter interval {self.domain}")
        # the spec must at least be evaluable at the midpoint
        mid = 0.5 * (lo + hi)
        try:
            eval_point(self, mid)
        except (DomainError, ValueError) as exc:
            raise DefinitionError(f"curve not evaluable at domain midpoint: {exc}") from exc


def _check_domain(curve: ParamCurve, u: float) -> None:
    lo, hi = curve.domain
    slack = 1e-9 * max(1.0, abs(lo), abs(hi))
    if u < lo - slack or u > hi + slack:
        raise OutOfDomainError(f"u={u!r} outside [{lo!r}, {hi!r}]")


def eval_point(curve: ParamCurve, u: float) -> LVec3:
    """Component-wise evaluation at u."""
    _check_domain(curve, u)
    c1, c2, c3 = curve.spec.components
    from .expr import evaluate

    return LVec3(evaluate(c1, u), evaluate(c2, u), evaluate(c3, u))


def derivatives(curve: ParamCurve, u: float) -> tuple[LVec3, LVec3, LVec3]:
    """(point, first derivative, second derivative) at u, all exact."""
    _check_domain(curve, u)
    d = [eval_dual2(c, u) for c in curve.spec.components]
    point = LVec3(d[0].value, d[1].value, d[2].value)
    d1 = LVec3(d[0].d1, d[1].d1, d[2].d1)
    d2 = LVec3(d[0].d2, d[1].d2, d[2].d2)
    return point, d1, d2


def causal_character_at(curve: ParamCurve, u: float, eps: float = EPS_CAUSAL) -> CausalCharacter:
    """Causal character of the velocity vector at u."""
    _, d1, _ = derivatives(curve, u)
    return causal_character(d1, eps)


class UnitDirectorJet(NamedTuple):
    """Normalized director with exact derivatives and the original norm."""

    e: LVec3
    e_d1: LVec3
    e_d2: LVec3
    norm: float  # ||gamma(u)|| before normalization
    norm_d1: float
    renormalized: bool  # True when |norm - 1| exceeded 1e-9 at this u


def unit_director_jet(curve: ParamCurve, u: float) -> UnitDirectorJet:
    """Jet of e = gamma/||gamma|| via the quotient rule on exact derivatives.

    Applying the quotient uniformly keeps already-unit directors bit-stable
    (their norm derivative cancels to rounding noise) while extending the
    frame construction to arbitrary non-null directors.
    """
    g0, g1, g2 = derivatives(curve, u)
    q = metric(g0, g0)
    if abs(q) <= EPS_CAUSAL * max(1.0, euclid_sq(g0)):
        raise NullDirectorError(f"director is null or zero at u={u!r}")
    s = 1.0 if q > 0.0 else -1.0
    m = math.sqrt(s * q)
    m1 = s * metric(g0, g1) / m
    m2 = (s * (metric(g1, g1) + metric(g0, g2)) - m1 * m1) / m
    inv = 1.0 / m
    e = g0 * inv
    e_d1 = g1 * inv - g0 * (m1 * inv * inv)
    e_d2 = (
        g2 * inv
        - g1 * (2.0 * m1 * inv * inv)
        - g0 * (m2 * inv * inv)
        + g0 * (2.0 * m1 * m1 * inv * inv * inv)
    )
    return UnitDirectorJet(e, e_d1, e_d2, m, m1, abs(m - 1.0) > 1e-9)


@dataclass(frozen=True)
class DirectorFrame:
    """Orthonormal frame along a director curve at one parameter value."""

    e: LVec3
    n: LVec3
    xi: LVec3
    kappa: float
    tau: float
    frame_type: FrameType
    renormalized: bool = False


def director_frame(director: ParamCurve, u: float) -> DirectorFrame:
    """Build {e, n, xi} with curvature and torsion at u.

    Raises :class:`CylindricalDirectorError` when the director is not
    turning and :class:`NullTangentError` when e' is null (no orthonormal
    frame of the three supported causal types exists there).
    """
    jet = unit_director_jet(director, u)
    e, e1, e2 = jet.e, jet.e_d1, jet.e_d2

    if euclid_sq(e1) <= 1e-24:
        raise CylindricalDirectorError(f"director derivative vanishes at u={u!r}")
    d = metric(e1, e1)
    if abs(d) <= EPS_CAUSAL * max(1.0, euclid_sq(e1)):
        raise NullTangentError(f"director derivative is null at u={u!r}")
    kappa = math.sqrt(abs(d))
    n = e1 * (1.0 / kappa)

    c = lorentz_cross(e, e1)
    if euclid_sq(c) <= 1e-24:
        raise CylindricalDirectorError(f"e ^ e' vanishes at u={u!r}")
    qc = metric(c, c)
    sc = 1.0 if qc > 0.0 else -1.0
    mc = math.sqrt(sc * qc)
    xi = c * (1.0 / mc)

    # xi' from the quotient rule; c' = e ^ e'' since e' ^ e' = 0
    c1 = lorentz_cross(e, e2)
    mc1 = sc * metric(c, c1) / mc
    xi1 = c1 * (1.0 / mc) - c * (mc1 / (mc * mc))
    tau = metric(xi1, n) / metric(n, n)

    pattern = (causal_character(e), causal_character(n), causal_character(xi))
    frame_type = _FRAME_TYPES.get(pattern)
    if frame_type is None:
        raise GeometryError(f"frame has unrecognized causal pattern {pattern} at u={u!r}")
    return DirectorFrame(e, n, xi, kappa, tau, frame_type, jet.renormalized)
