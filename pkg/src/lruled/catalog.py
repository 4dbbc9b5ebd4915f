"""Built-in surfaces and seeded per-class random surface generators.

The catalog carries the three helicoid types, one per causal class, each
with unit director, striction curve equal to the base curve, and constant
distribution parameter P = 1:

    helicoid-2  (-v cosh u, u, -v sinh u)   spacelike (M1),  K = -1/(1-v^2)^2
    helicoid-3  (-v sinh u, u, -v cosh u)   timelike  (M2),  K =  1/(1+v^2)^2
    helicoid-1  (-v cos u, -v sin u, u)     timelike  (M3),  K =  1/(1-v^2)^2

Random surfaces are built the same way the catalog ones are: a unit
director from a trigonometric/hyperbolic pythagorean family with linear
phase, and a base curve integrated in closed form from a constant-angle
combination of the frame vectors.  That makes every generated surface
striction-based with a unit-speed striction curve, keeps the expressions
inside the supported grammar, and pins the causal class by construction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .errors import DefinitionError, GeometryError
from .curves import causal_character_at, eval_point, unit_director_jet
from .lorentz import CausalCharacter, causal_character, metric
from .surface import (
    RuledSurface,
    SurfaceClass,
    distribution_parameter,
    is_noncylindrical,
    surface_from_definition,
)
from .util import linspace


class UnknownSurfaceError(DefinitionError):
    code = "unknown-surface"


class GenerationExhaustedError(GeometryError):
    """Rejection sampling failed; the seed family is over-constrained."""

    code = "generation-exhausted"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    surface: RuledSurface
    surface_class: SurfaceClass
    known_P: float | None
    known_K: Callable[[float, float], float] | None
    known_K_text: str | None


def _entry(
    name: str,
    base: list[str],
    director: list[str],
    u_range: tuple[float, float],
    v_range: tuple[float, float],
    cls: SurfaceClass,
    known_K: Callable[[float, float], float],
    known_K_text: str,
) -> CatalogEntry:
    surface = surface_from_definition(
        {
            "name": name,
            "base": base,
            "director": director,
            "u_range": list(u_range),
            "v_range": list(v_range),
        }
    )
    return CatalogEntry(name, surface, cls, 1.0, known_K, known_K_text)


def _build_catalog() -> dict[str, CatalogEntry]:
    return {
        "helicoid-2": _entry(
            "helicoid-2",
            ["0", "u", "0"],
            ["-cosh(u)", "0", "-sinh(u)"],
            (-1.0, 1.0),
            (-1.0, 1.0),
            SurfaceClass.M1_SPACELIKE,
            lambda u, v: -1.0 / (1.0 - v * v) ** 2,
            "-1/(1-v^2)^2",
        ),
        "helicoid-3": _entry(
            "helicoid-3",
            ["0", "u", "0"],
            ["-sinh(u)", "0", "-cosh(u)"],
            (-1.0, 1.0),
            (-3.0, 3.0),
            SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING,
            lambda u, v: 1.0 / (1.0 + v * v) ** 2,
            "1/(1+v^2)^2",
        ),
        "helicoid-1": _entry(
            "helicoid-1",
            ["0", "0", "u"],
            ["-cos(u)", "-sin(u)", "0"],
            (-math.pi, math.pi),
            (-1.0, 1.0),
            SurfaceClass.M3_TIMELIKE_TIMELIKE_BASE_SPACELIKE_RULING,
            lambda u, v: 1.0 / (1.0 - v * v) ** 2,
            "1/(1-v^2)^2",
        ),
    }


_CATALOG = _build_catalog()


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def get_surface(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownSurfaceError(
            f"unknown surface {name!r}; available: {', '.join(catalog_names())}"
        ) from None


# ---------------------------------------------------------------------------
# Random surfaces
# ---------------------------------------------------------------------------

_GEN_U_RANGE = (-1.5, 1.5)


def _fmt(x: float) -> str:
    return repr(float(x))


def _affine(coef: float, offset: float) -> str:
    """`coef*u + offset` with an explicit sign so it stays inside the grammar."""
    sign = "+" if offset >= 0 else "-"
    return f"{_fmt(coef)}*u{sign}{_fmt(abs(offset))}"


def _scaled(coef: float, func: str, phase: str) -> str:
    return f"{_fmt(coef)}*{func}({phase})"


def _class_params(cls: SurfaceClass, rng: random.Random) -> dict:
    """Draw one parameter set; signs and offsets vary per seed."""
    chi = rng.uniform(-0.7, 0.7)
    w = rng.uniform(0.5, 1.2)
    p = rng.uniform(-1.0, 1.0)
    offsets = [rng.uniform(-2.0, 2.0) for _ in range(3)]
    sign_a = rng.choice((-1.0, 1.0))
    if cls is SurfaceClass.M1_SPACELIKE:
        # spacelike unit director (A cosh, B, A sinh), A^2 + B^2 = 1
        a = sign_a * math.cos(chi)
        b = math.sin(chi)
        sigma = rng.uniform(0.35, math.pi - 0.35)
    else:
        # |A| = cosh >= 1 keeps A^2 - B^2 = 1
        a = sign_a * math.cosh(chi)
        b = math.sinh(chi)
        sigma = rng.uniform(-0.8, 0.8)
    return {"a": a, "b": b, "w": w, "p": p, "sigma": sigma, "offsets": offsets}


def _build_m1(params: dict) -> dict:
    a, b, w, p = params["a"], params["b"], params["w"], params["p"]
    sigma = params["sigma"]
    k1, k2, k3 = params["offsets"]
    s = math.copysign(1.0, w * a)
    phase = _affine(w, p)
    # striction tangent cos(sigma) e + sin(sigma) xi, integrated in closed form
    c_osc = a * math.cos(sigma) - s * b * math.sin(sigma)
    c_lin = b * math.cos(sigma) + s * a * math.sin(sigma)
    base = [
        f"{_scaled(c_osc / w, 'sinh', phase)}{'+' if k1 >= 0 else '-'}{_fmt(abs(k1))}",
        _affine(c_lin, k2),
        f"{_scaled(c_osc / w, 'cosh', phase)}{'+' if k3 >= 0 else '-'}{_fmt(abs(k3))}",
    ]
    director = [_scaled(a, "cosh", phase), _fmt(b), _scaled(a, "sinh", phase)]
    p_abs = abs(math.sin(sigma)) / (abs(a) * w)
    return {"base": base, "director": director, "P": p_abs}


def _build_m2(params: dict) -> dict:
    a, b, w, p = params["a"], params["b"], params["w"], params["p"]
    sigma = params["sigma"]
    k1, k2, k3 = params["offsets"]
    s = math.copysign(1.0, w * a)
    phase = _affine(w, p)
    # striction tangent sinh(sigma) e - cosh(sigma) xi; the xi orientation of
    # the Lorentzian product makes this the branch with positive drall
    c_osc = a * math.sinh(sigma) + s * b * math.cosh(sigma)
    c_lin = b * math.sinh(sigma) + s * a * math.cosh(sigma)
    base = [
        f"{_scaled(c_osc / w, 'cosh', phase)}{'+' if k1 >= 0 else '-'}{_fmt(abs(k1))}",
        _affine(c_lin, k2),
        f"{_scaled(c_osc / w, 'sinh', phase)}{'+' if k3 >= 0 else '-'}{_fmt(abs(k3))}",
    ]
    director = [_scaled(a, "sinh", phase), _fmt(b), _scaled(a, "cosh", phase)]
    p_abs = math.cosh(sigma) / (abs(a) * w)
    return {"base": base, "director": director, "P": p_abs}


def _build_m3(params: dict) -> dict:
    a, b, w, p = params["a"], params["b"], params["w"], params["p"]
    sigma = params["sigma"]
    k1, k2, k3 = params["offsets"]
    s = math.copysign(1.0, w * a)
    phase = _affine(w, p)
    c_osc = a * math.sinh(sigma) + s * b * math.cosh(sigma)
    c_lin = b * math.sinh(sigma) + s * a * math.cosh(sigma)
    base = [
        f"{_scaled(c_osc / w, 'sin', phase)}{'+' if k1 >= 0 else '-'}{_fmt(abs(k1))}",
        f"{_scaled(-c_osc / w, 'cos', phase)}{'+' if k2 >= 0 else '-'}{_fmt(abs(k2))}",
        _affine(c_lin, k3),
    ]
    director = [_scaled(a, "cos", phase), _scaled(a, "sin", phase), _fmt(b)]
    p_abs = math.cosh(sigma) / (abs(a) * w)
    return {"base": base, "director": director, "P": p_abs}


_BUILDERS = {
    SurfaceClass.M1_SPACELIKE: _build_m1,
    SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING: _build_m2,
    SurfaceClass.M3_TIMELIKE_TIMELIKE_BASE_SPACELIKE_RULING: _build_m3,
}

_REQUIRED_CHARACTERS = {
    SurfaceClass.M1_SPACELIKE: (CausalCharacter.SPACELIKE, CausalCharacter.SPACELIKE),
    SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING: (
        CausalCharacter.SPACELIKE,
        CausalCharacter.TIMELIKE,
    ),
    SurfaceClass.M3_TIMELIKE_TIMELIKE_BASE_SPACELIKE_RULING: (
        CausalCharacter.TIMELIKE,
        CausalCharacter.SPACELIKE,
    ),
}


def _surface_ok(surface: RuledSurface, cls: SurfaceClass, checks: int = 25) -> bool:
    base_char, ruling_char = _REQUIRED_CHARACTERS[cls]
    m1_or_m3 = cls is not SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING
    for u in linspace(*surface.u_range, checks):
        if causal_character_at(surface.base, u) is not base_char:
            return False
        if causal_character(eval_point(surface.director, u)) is not ruling_char:
            return False
        if not is_noncylindrical(surface, u):
            return False
        jet = unit_director_jet(surface.director, u)
        if abs(metric(jet.e_d1, jet.e_d1)) < 0.1:
            return False
        if m1_or_m3 and abs(distribution_parameter(surface, u)) <= 0.05:
            return False
    return True


def random_surface(
    surface_class: SurfaceClass, seed: int, max_attempts: int = 1000
) -> RuledSurface:
    """Deterministic random surface of the requested class.

    Candidates are verified on a sample grid (causal characters, the
    non-cylindrical condition, |g(e',e')| >= 0.1, and a drall floor for
    M1/M3) and resampled on failure, up to `max_attempts`.
    """
    rng = random.Random(f"{surface_class.value}:{seed}")
    for attempt in range(max_attempts):
        built = _BUILDERS[surface_class](_class_params(surface_class, rng))
        if surface_class is SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING:
            v_range = (-2.5, 2.5)
        else:
            limit = 0.98 * built["P"]
            v_range = (-limit, limit)
        surface = surface_from_definition(
            {
                "name": f"random-{surface_class.value}-{seed}",
                "base": built["base"],
                "director": built["director"],
                "u_range": list(_GEN_U_RANGE),
                "v_range": list(v_range),
            }
        )
        if _surface_ok(surface, surface_class):
            return surface
    raise GenerationExhaustedError(
        f"no valid surface after {max_attempts} attempts (class {surface_class.value}, seed {seed})"
    )
