"""Ruled surfaces phi(u, v) = alpha(u) + v * gamma(u) in Lorentz 3-space.

Covers evaluation, exact partials, the non-cylindrical test, the striction
curve and its reparametrization, the striction angle, the unit normal, the
distribution parameter (drall), and the three-way causal classification:

    M1: spacelike base, spacelike ruling  -> spacelike surface,
    M2: spacelike base, timelike ruling   -> timelike surface,
    M3: timelike base, spacelike ruling   -> timelike surface.

A (timelike, timelike) pair is rejected: no plane contains two independent
timelike directions.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DefinitionError, GeometryError
from .curves import (
    OutOfDomainError,
    ParamCurve,
    DirectorFrame,
    FrameType,
    causal_character_at,
    derivatives,
    eval_point,
    unit_director_jet,
)
from .expr import CurveSpec
from .lorentz import (
    EPS_CAUSAL,
    CausalCharacter,
    LVec3,
    NullInputError,
    causal_character,
    det3,
    euclid_sq,
    lorentz_cross,
    metric,
)
from .util import linspace

# Lorentzian-norm threshold under which a surface normal is degenerate, and
# the Euclidean floor separating "null normal" from "zero normal".
EPS_DEGENERATE = 1e-8
EPS_ZERO_NORMAL = 1e-12


class NullDirectorDerivativeError(GeometryError):
    code = "null-director-derivative"


class CylindricalSurfaceError(GeometryError):
    code = "cylindrical-surface"


class OutOfPlaneError(GeometryError):
    """Striction tangent has a normal-direction component; no striction angle."""

    code = "out-of-plane"


class DegenerateNormalError(GeometryError):
    """phi_u ^ phi_v is null: the induced metric degenerates (|v| ~ |P|)."""

    code = "degenerate-normal"


class ZeroNormalError(GeometryError):
    """phi_u ^ phi_v vanishes: the parametrization is singular here."""

    code = "zero-normal"


class InconsistentClassificationError(GeometryError):
    code = "inconsistent-classification"


class UnsupportedClassError(GeometryError):
    code = "unsupported-class"


class NonUnitSpeedWarning(UserWarning):
    """Striction curve is not unit-speed; angle-based drall forms are off-scale."""


class SurfaceClass(Enum):
    M1_SPACELIKE = "M1_Spacelike"
    M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING = "M2_TimelikeSpacelikeBaseTimelikeRuling"
    M3_TIMELIKE_TIMELIKE_BASE_SPACELIKE_RULING = "M3_TimelikeTimelikeBaseSpacelikeRuling"


@dataclass(frozen=True)
class RuledSurface:
    """Base curve plus director curve over a shared u-interval."""

    base: ParamCurve
    director: ParamCurve
    v_range: tuple[float, float]
    name: str = "surface"

    def __post_init__(self) -> None:
        if self.base.domain != self.director.domain:
            raise DefinitionError("base and director must share one u-interval")
        lo, hi = self.v_range
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise DefinitionError(f"invalid v_range {self.v_range}")

    @property
    def u_range(self) -> tuple[float, float]:
        return self.base.domain


def _check_v(surface: RuledSurface, v: float) -> None:
    lo, hi = surface.v_range
    slack = 1e-9 * max(1.0, abs(lo), abs(hi))
    if v < lo - slack or v > hi + slack:
        raise OutOfDomainError(f"v={v!r} outside [{lo!r}, {hi!r}]")


def evaluate(surface: RuledSurface, u: float, v: float) -> LVec3:
    """Surface point alpha(u) + v * gamma(u)."""
    _check_v(surface, v)
    return eval_point(surface.base, u) + eval_point(surface.director, u) * v


class Partials(NamedTuple):
    phi_u: LVec3
    phi_v: LVec3
    phi_uu: LVec3
    phi_uv: LVec3
    phi_vv: LVec3


def partials(surface: RuledSurface, u: float, v: float) -> Partials:
    """First and second partials, assembled exactly from curve derivatives.

    phi_u = alpha' + v gamma', phi_v = gamma, phi_uu = alpha'' + v gamma'',
    phi_uv = gamma', phi_vv = 0.  No finite-difference stencil is involved.
    """
    _check_v(surface, v)
    _, a1, a2 = derivatives(surface.base, u)
    g0, g1, g2 = derivatives(surface.director, u)
    return Partials(a1 + g1 * v, g0, a2 + g2 * v, g1, LVec3(0.0, 0.0, 0.0))


def is_noncylindrical(surface: RuledSurface, u: float, eps: float = 1e-9) -> bool:
    """True when gamma ^ gamma' is nonzero at u.

    Tested on the Euclidean magnitude so a null (but nonzero) product does
    not masquerade as zero.
    """
    g0, g1, _ = derivatives(surface.director, u)
    return euclid_sq(lorentz_cross(g0, g1)) > eps * eps


def striction_point(surface: RuledSurface, u: float) -> LVec3:
    """Striction point beta(u) = alpha(u) - [g(alpha',gamma')/g(gamma',gamma')] gamma(u)."""
    a0, a1, _ = derivatives(surface.base, u)
    g0, g1, _ = derivatives(surface.director, u)
    d = metric(g1, g1)
    if abs(d) <= EPS_CAUSAL * max(1.0, euclid_sq(g1)):
        raise NullDirectorDerivativeError(f"g(gamma', gamma') ~ 0 at u={u!r}")
    return a0 - g0 * (metric(a1, g1) / d)


class RulingJet(NamedTuple):
    """All per-ruling striction data: unit director jet plus striction curve."""

    u: float
    e: LVec3
    e_d1: LVec3
    dir_norm: float  # ||gamma(u)||
    striction: LVec3
    striction_d1: LVec3
    foot_coeff: float  # c(u): striction = base - c * e
    renormalized: bool


def ruling_jet(surface: RuledSurface, u: float) -> RulingJet:
    """Striction data at u for the surface written with its unit director.

    The striction derivative is assembled by differentiating the closed-form
    striction formula through the exact curve derivatives, so the side
    condition g(beta', e') = 0 holds to rounding error.
    """
    a0, a1, a2 = derivatives(surface.base, u)
    jet = unit_director_jet(surface.director, u)
    e, e1, e2 = jet.e, jet.e_d1, jet.e_d2
    d = metric(e1, e1)
    if abs(d) <= EPS_CAUSAL * max(1.0, euclid_sq(e1)):
        raise NullDirectorDerivativeError(f"g(e', e') ~ 0 at u={u!r}")
    c = metric(a1, e1) / d
    d_dot = 2.0 * metric(e1, e2)
    c_dot = (metric(a2, e1) + metric(a1, e2)) / d - metric(a1, e1) * d_dot / (d * d)
    beta = a0 - e * c
    beta_dot = a1 - e * c_dot - e1 * c
    return RulingJet(u, e, e1, jet.norm, beta, beta_dot, c, jet.renormalized)


def striction_to_chart_v(jet: RulingJet, v_striction: float) -> float:
    """Chart v of the point at signed distance `v_striction` along the unit ruling."""
    return (v_striction - jet.foot_coeff) / jet.dir_norm


def chart_to_striction_v(jet: RulingJet, v: float) -> float:
    """Striction-centered ruling coordinate of the chart point (u, v)."""
    return jet.foot_coeff + v * jet.dir_norm


@dataclass(frozen=True)
class StrictionForm:
    """Striction-centered reparametrization beta(u) + v e(u), ||e|| = 1."""

    surface: RuledSurface
    striction: tuple[tuple[float, LVec3], ...]
    renormalized: bool

    def _jet(self, u: float) -> RulingJet:
        return ruling_jet(self.surface, u)

    def striction_point(self, u: float) -> LVec3:
        return self._jet(u).striction

    def striction_velocity(self, u: float) -> LVec3:
        return self._jet(u).striction_d1

    def unit_director(self, u: float) -> LVec3:
        return self._jet(u).e

    def unit_director_derivative(self, u: float) -> LVec3:
        return self._jet(u).e_d1

    def foot_parameter(self, u: float) -> float:
        """Chart v at which the original surface passes through beta(u)."""
        jet = self._jet(u)
        return -jet.foot_coeff / jet.dir_norm

    def sigma(self, u: float) -> float:
        """Striction angle at u against the director frame there."""
        from .curves import director_frame

        return striction_angle(self, director_frame(self.surface.director, u), u)


def to_striction_form(surface: RuledSurface, samples: int = 65) -> StrictionForm:
    """Sample the striction curve and wrap the unit-director accessors.

    Verifies g(beta', e') ~ 0 at the interior samples; a violation indicates
    a broken derivative pipeline rather than bad input, so it raises.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    lo, hi = surface.u_range
    points: list[tuple[float, LVec3]] = []
    renormalized = False
    jets: list[RulingJet] = []
    for u in linspace(lo, hi, samples):
        if not is_noncylindrical(surface, u):
            raise CylindricalSurfaceError(f"gamma ^ gamma' vanishes at u={u!r}")
        jet = ruling_jet(surface, u)
        jets.append(jet)
        renormalized = renormalized or jet.renormalized
        points.append((u, jet.striction))
    for jet in jets[1:-1]:
        residual = metric(jet.striction_d1, jet.e_d1)
        scale = max(1.0, math.sqrt(euclid_sq(jet.striction_d1) * euclid_sq(jet.e_d1)))
        if abs(residual) > 1e-8 * scale:
            raise GeometryError(
                f"striction side condition violated at u={jet.u!r}: g(beta', e')={residual!r}"
            )
    return StrictionForm(surface=surface, striction=tuple(points), renormalized=renormalized)


def striction_angle(form: StrictionForm, frame: DirectorFrame, u: float) -> float:
    """Angle sigma between the striction tangent and the ruling direction.

    The striction tangent lies in the span of {e, xi}.  For a spacelike
    surface both are spacelike and beta' = cos(sigma) e + sin(sigma) xi, so
    sigma = atan2(xi-part, e-part).  For the timelike classes the plane is
    Lorentzian and beta' = sinh(sigma) e + cosh(sigma) xi up to orientation,
    so sigma = artanh(e-part / xi-part).

    Warns with :class:`NonUnitSpeedWarning` when ||beta'|| deviates from 1;
    the closed angle decompositions assume a unit-speed striction curve.
    """
    bd = form.striction_velocity(u)
    a = metric(bd, frame.e) / metric(frame.e, frame.e)
    b = metric(bd, frame.xi) / metric(frame.xi, frame.xi)
    n_part = metric(bd, frame.n) / metric(frame.n, frame.n)
    if abs(n_part) > 1e-6:
        raise OutOfPlaneError(
            f"striction tangent has normal component {n_part!r} at u={u!r}"
        )
    speed = math.sqrt(abs(metric(bd, bd)))
    if abs(speed - 1.0) > 1e-6:
        warnings.warn(
            NonUnitSpeedWarning(f"striction speed {speed!r} at u={u!r} is not 1"),
            stacklevel=2,
        )
    if frame.frame_type is FrameType.SPACE_TIME_SPACE:
        return math.atan2(b, a)
    if abs(a) >= abs(b):
        raise GeometryError(
            f"striction tangent admits no hyperbolic decomposition at u={u!r}"
        )
    return math.atanh(a / b)


def _normal_from_partials(p: Partials) -> LVec3:
    c = lorentz_cross(p.phi_u, p.phi_v)
    ln = math.sqrt(abs(metric(c, c)))
    if ln <= EPS_DEGENERATE:
        if math.sqrt(euclid_sq(c)) <= EPS_ZERO_NORMAL:
            raise ZeroNormalError("surface normal vanishes")
        raise DegenerateNormalError("surface normal is null")
    return c * (1.0 / ln)


def unit_normal(surface: RuledSurface, u: float, v: float) -> tuple[LVec3, CausalCharacter]:
    """Unit normal (phi_u ^ phi_v normalized) and its causal character."""
    eta = _normal_from_partials(partials(surface, u, v))
    return eta, causal_character(eta)


def candidate_class(surface: RuledSurface, u: float) -> SurfaceClass:
    """Causal class from (base tangent, ruling) characters alone."""
    bc = causal_character_at(surface.base, u)
    rc = causal_character(eval_point(surface.director, u))
    if bc is CausalCharacter.NULL:
        raise NullInputError(f"base tangent is null at u={u!r}")
    if rc is CausalCharacter.NULL:
        raise NullInputError(f"ruling is null at u={u!r}")
    if bc is CausalCharacter.SPACELIKE and rc is CausalCharacter.SPACELIKE:
        return SurfaceClass.M1_SPACELIKE
    if bc is CausalCharacter.SPACELIKE and rc is CausalCharacter.TIMELIKE:
        return SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING
    if bc is CausalCharacter.TIMELIKE and rc is CausalCharacter.SPACELIKE:
        return SurfaceClass.M3_TIMELIKE_TIMELIKE_BASE_SPACELIKE_RULING
    raise UnsupportedClassError(
        "timelike base with timelike ruling: no plane holds two timelike directions"
    )


def classify(surface: RuledSurface, u: float, v: float) -> SurfaceClass:
    """Causal class at (u, v), cross-checked against the induced metric.

    The sign of EG - F^2 and the causal character of the unit normal must
    agree with the class read off the (base tangent, ruling) characters;
    a mismatch raises :class:`InconsistentClassificationError`.
    """
    cls = candidate_class(surface, u)
    p = partials(surface, u, v)
    e_coef = metric(p.phi_u, p.phi_u)
    f_coef = metric(p.phi_u, p.phi_v)
    g_coef = metric(p.phi_v, p.phi_v)
    disc = e_coef * g_coef - f_coef * f_coef
    eta = _normal_from_partials(p)
    eta_char = causal_character(eta)
    if cls is SurfaceClass.M1_SPACELIKE:
        ok = disc > 0.0 and eta_char is CausalCharacter.TIMELIKE
    else:
        ok = disc < 0.0 and eta_char is CausalCharacter.SPACELIKE
    if not ok:
        raise InconsistentClassificationError(
            f"characters suggest {cls.value} but EG-F^2={disc!r} and the normal is "
            f"{eta_char.value} at (u={u!r}, v={v!r})"
        )
    return cls


def distribution_parameter(surface: RuledSurface, u: float) -> float:
    """Drall P = det(beta', e, e') / g(e', e') with the unit director."""
    jet = ruling_jet(surface, u)
    return det3(jet.striction_d1, jet.e, jet.e_d1) / metric(jet.e_d1, jet.e_d1)


# ---------------------------------------------------------------------------
# Surface-definition documents (JSON)
# ---------------------------------------------------------------------------

_DEFINITION_KEYS = {"name", "base", "director", "u_range", "v_range"}
_REQUIRED_KEYS = {"base", "director", "u_range", "v_range"}


def _parse_range(value: object, key: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise DefinitionError(f"'{key}' must be a pair [lo, hi]")
    try:
        lo, hi = float(value[0]), float(value[1])
    except (TypeError, ValueError) as exc:
        raise DefinitionError(f"'{key}' entries must be numbers") from exc
    if not lo < hi:
        raise DefinitionError(f"'{key}' must satisfy lo < hi, got {value}")
    return lo, hi


def _parse_curve(value: object, key: str) -> list[str]:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise DefinitionError(f"'{key}' must be a list of 3 component expressions")
    if not all(isinstance(c, str) for c in value):
        raise DefinitionError(f"'{key}' components must be strings")
    return list(value)


def surface_from_definition(doc: dict) -> RuledSurface:
    """Build a surface from a definition document; unknown keys are rejected."""
    if not isinstance(doc, dict):
        raise DefinitionError("surface definition must be a JSON object")
    unknown = set(doc) - _DEFINITION_KEYS
    if unknown:
        raise DefinitionError(f"unknown definition keys: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(doc)
    if missing:
        raise DefinitionError(f"missing definition keys: {sorted(missing)}")
    name = doc.get("name", "surface")
    if not isinstance(name, str):
        raise DefinitionError("'name' must be a string")
    u_range = _parse_range(doc["u_range"], "u_range")
    v_range = _parse_range(doc["v_range"], "v_range")
    base = ParamCurve(CurveSpec.from_strings(_parse_curve(doc["base"], "base")), u_range)
    director = ParamCurve(
        CurveSpec.from_strings(_parse_curve(doc["director"], "director")), u_range
    )
    return RuledSurface(base=base, director=director, v_range=v_range, name=name)


def surface_to_definition(surface: RuledSurface) -> dict:
    """Definition document reproducing this surface."""
    return {
        "name": surface.name,
        "base": list(surface.base.spec.sources),
        "director": list(surface.director.spec.sources),
        "u_range": list(surface.u_range),
        "v_range": list(surface.v_range),
    }


def load_definition(path: str) -> RuledSurface:
    """Read a surface-definition JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DefinitionError(f"cannot read definition file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DefinitionError(f"definition file is not valid JSON: {exc}") from exc
    return surface_from_definition(doc)


def with_ranges(
    surface: RuledSurface,
    u_range: tuple[float, float] | None = None,
    v_range: tuple[float, float] | None = None,
) -> RuledSurface:
    """Copy of the surface with overridden parameter ranges."""
    new_u = u_range if u_range is not None else surface.u_range
    new_v = v_range if v_range is not None else surface.v_range
    return RuledSurface(
        base=ParamCurve(surface.base.spec, tuple(new_u)),
        director=ParamCurve(surface.director.spec, tuple(new_u)),
        v_range=tuple(new_v),
        name=surface.name,
    )
