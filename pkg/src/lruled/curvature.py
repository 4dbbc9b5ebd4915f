"""Fundamental forms, Gaussian curvature, and the Lamarle comparison engine.

Two independent routes to the Gaussian curvature are kept side by side:

* `gaussian_curvature_forms` evaluates K = (L*M - N^2) / (E*G - F^2) from the
  fundamental forms with exact derivative-based partials.  Here N is the
  mixed coefficient <phi_uv, eta> and M the (identically zero) vv one.
* `lamarle_curvature` is the closed form in the distribution parameter P:

      M1:  K = -P^2 / (P^2 - v^2)^2   (|v| < |P|),
      M2:  K =  P^2 / (P^2 + v^2)^2,
      M3:  K =  P^2 / (P^2 - v^2)^2   (|v| < |P|),

  with v measured along the unit ruling from the striction point.

`verify_lamarle` sweeps a grid and reports both values per point.  The grid
coordinate is mapped to the striction-centered ruling coordinate before the
closed form is applied, so the comparison is exact for any non-cylindrical
surface, not only those already given in striction form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GeometryError
from .lorentz import LVec3, det3, metric
from .surface import (
    Partials,
    RuledSurface,
    SurfaceClass,
    _normal_from_partials,
    candidate_class,
    chart_to_striction_v,
    evaluate,
    partials,
    ruling_jet,
)
from .util import linspace

# Auto-clamped sweeps keep |v| strictly inside min|P| by this factor.
V_CLAMP_MARGIN = 0.98


class DegenerateMetricError(GeometryError):
    code = "degenerate-metric"


class OutsideDomainError(GeometryError):
    """|v| >= |P| on a class where the closed form requires |v| < |P|."""

    code = "outside-domain"


class IndeterminateAtOriginError(GeometryError):
    code = "indeterminate-at-origin"


class EmptyGridError(GeometryError):
    code = "empty-grid"


def _first_from_partials(p: Partials) -> tuple[float, float, float]:
    return (
        metric(p.phi_u, p.phi_u),
        metric(p.phi_u, p.phi_v),
        metric(p.phi_v, p.phi_v),
    )


def first_forms(surface: RuledSurface, u: float, v: float) -> tuple[float, float, float]:
    """(E, F, G) of the induced metric at (u, v)."""
    return _first_from_partials(partials(surface, u, v))


def second_forms(surface: RuledSurface, u: float, v: float) -> tuple[float, float, float]:
    """(L, N, M): inner products of phi_uu, phi_uv, phi_vv with the unit normal.

    N is the mixed coefficient; M vanishes identically because phi_vv = 0
    for every ruled surface.
    """
    p = partials(surface, u, v)
    eta = _normal_from_partials(p)
    return (metric(p.phi_uu, eta), metric(p.phi_uv, eta), metric(p.phi_vv, eta))


def _gauss_from_partials(p: Partials) -> float:
    e_c, f_c, g_c = _first_from_partials(p)
    disc = e_c * g_c - f_c * f_c
    if abs(disc) <= 1e-12 * max(1.0, abs(e_c * g_c), f_c * f_c):
        raise DegenerateMetricError(f"EG - F^2 = {disc!r} is degenerate")
    eta = _normal_from_partials(p)
    l_c = metric(p.phi_uu, eta)
    n_c = metric(p.phi_uv, eta)
    m_c = metric(p.phi_vv, eta)
    return (l_c * m_c - n_c * n_c) / disc


def gaussian_curvature_forms(surface: RuledSurface, u: float, v: float) -> float:
    """K = (L*M - N^2) / (E*G - F^2) from exact derivative-based partials."""
    return _gauss_from_partials(partials(surface, u, v))


def gaussian_curvature_central_diff(
    surface: RuledSurface, u: float, v: float, h: float = 1e-5
) -> float:
    """K recomputed with pure central-difference partials; no derivative reuse.

    An independent check on the exact pipeline.  The point must be at least
    h inside both parameter ranges.
    """

    def f(uu: float, vv: float) -> LVec3:
        return evaluate(surface, uu, vv)

    half = 0.5 / h
    inv_h2 = 1.0 / (h * h)
    fpu, fmu = f(u + h, v), f(u - h, v)
    fpv, fmv = f(u, v + h), f(u, v - h)
    f00 = f(u, v)
    p = Partials(
        phi_u=(fpu - fmu) * half,
        phi_v=(fpv - fmv) * half,
        phi_uu=(fpu - f00 * 2.0 + fmu) * inv_h2,
        phi_uv=(f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h))
        * (0.25 * inv_h2),
        phi_vv=(fpv - f00 * 2.0 + fmv) * inv_h2,
    )
    return _gauss_from_partials(p)


def lamarle_curvature(surface_class: SurfaceClass, P: float, v: float) -> float:
    """Closed-form Gaussian curvature along a ruling, by causal class."""
    if P == 0.0 and v == 0.0:
        raise IndeterminateAtOriginError("P = 0 and v = 0")
    p2 = P * P
    v2 = v * v
    if surface_class is SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING:
        return p2 / ((p2 + v2) ** 2)
    if abs(v) >= abs(P):
        raise OutsideDomainError(f"|v|={abs(v)!r} >= |P|={abs(P)!r}")
    if surface_class is SurfaceClass.M1_SPACELIKE:
        return -p2 / ((p2 - v2) ** 2)
    return p2 / ((p2 - v2) ** 2)


@dataclass(frozen=True)
class LamarleReport:
    """Per-sample comparison between form-based and closed-form curvature.

    rel_diff is abs_diff scaled by max(1, |K_forms|).  Numeric fields are
    None on rows whose status records a per-point error.
    """

    surface_class: SurfaceClass
    u: float
    v: float
    P: float | None
    K_forms: float | None
    K_lamarle: float | None
    abs_diff: float | None
    rel_diff: float | None
    status: str = "ok"


def valid_v_window(
    surface: RuledSurface,
    surface_class: SurfaceClass,
    us: list[float],
    margin: float = V_CLAMP_MARGIN,
) -> tuple[float, float]:
    """Chart-v window on which the closed form is defined for every sampled u.

    For M2 the whole declared v_range qualifies.  For M1/M3 the striction
    coordinate must stay strictly inside min |P|, so per-u chart bounds are
    intersected across the samples and with the declared v_range.
    """
    lo, hi = surface.v_range
    if surface_class is SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING:
        return lo, hi
    usable = 0
    for u in us:
        try:
            jet = ruling_jet(surface, u)
        except GeometryError:
            # degenerate ruling: the sweep records it per point instead
            continue
        usable += 1
        p_abs = abs(det3(jet.striction_d1, jet.e, jet.e_d1) / metric(jet.e_d1, jet.e_d1))
        limit = margin * p_abs
        lo = max(lo, (-limit - jet.foot_coeff) / jet.dir_norm)
        hi = min(hi, (limit - jet.foot_coeff) / jet.dir_norm)
    if usable == 0 or not lo < hi:
        raise EmptyGridError("no valid ruling window inside v_range")
    return lo, hi


def verify_lamarle(surface: RuledSurface, nu: int, nv: int) -> list[LamarleReport]:
    """Compare the two curvature routes over an nu x nv grid.

    Per-point failures are recorded in the report's status instead of
    aborting the sweep; reports come back sorted by (u, v).
    """
    us = linspace(*surface.u_range, nu)
    cls = candidate_class(surface, 0.5 * (surface.u_range[0] + surface.u_range[1]))
    v_lo, v_hi = valid_v_window(surface, cls, us)
    vs = linspace(v_lo, v_hi, nv)

    reports: list[LamarleReport] = []
    for u in us:
        try:
            jet = ruling_jet(surface, u)
            p_val = det3(jet.striction_d1, jet.e, jet.e_d1) / metric(jet.e_d1, jet.e_d1)
        except GeometryError as exc:
            for v in vs:
                reports.append(
                    LamarleReport(cls, u, v, None, None, None, None, None, status=exc.code)
                )
            continue
        for v in vs:
            try:
                k_forms = gaussian_curvature_forms(surface, u, v)
                k_closed = lamarle_curvature(cls, p_val, chart_to_striction_v(jet, v))
            except GeometryError as exc:
                reports.append(
                    LamarleReport(cls, u, v, p_val, None, None, None, None, status=exc.code)
                )
                continue
            diff = abs(k_forms - k_closed)
            reports.append(
                LamarleReport(
                    cls,
                    u,
                    v,
                    p_val,
                    k_forms,
                    k_closed,
                    diff,
                    diff / max(1.0, abs(k_forms)),
                )
            )
    return reports


def summarize(reports: list[LamarleReport]) -> dict:
    """Maximum differences and error count over the ok rows of a report set."""
    ok = [r for r in reports if r.status == "ok"]
    return {
        "points": len(reports),
        "errors": len(reports) - len(ok),
        "max_abs_diff": max((r.abs_diff for r in ok), default=float("nan")),
        "max_rel_diff": max((r.rel_diff for r in ok), default=float("nan")),
    }


CSV_HEADER = "u,v,class,P,K_forms,K_lamarle,abs_diff,rel_diff,status"


def _csv_cell(x: float | None) -> str:
    return "" if x is None else repr(x)


def reports_to_csv(reports: list[LamarleReport]) -> str:
    lines = [CSV_HEADER]
    for r in reports:
        lines.append(
            ",".join(
                (
                    repr(r.u),
                    repr(r.v),
                    r.surface_class.value,
                    _csv_cell(r.P),
                    _csv_cell(r.K_forms),
                    _csv_cell(r.K_lamarle),
                    _csv_cell(r.abs_diff),
                    _csv_cell(r.rel_diff),
                    r.status,
                )
            )
        )
    return "\n".join(lines) + "\n"


def reports_to_json(reports: list[LamarleReport]) -> str:
    records = [
        {
            "u": r.u,
            "v": r.v,
            "class": r.surface_class.value,
            "P": r.P,
            "K_forms": r.K_forms,
            "K_lamarle": r.K_lamarle,
            "abs_diff": r.abs_diff,
            "rel_diff": r.rel_diff,
            "status": r.status,
        }
        for r in reports
    ]
    return json.dumps(records) + "\n"
