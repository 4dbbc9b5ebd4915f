"""Ruled surfaces in Lorentz 3-space.

Causal classification, striction geometry, distribution parameter (drall),
fundamental forms, and Gaussian curvature of non-cylindrical ruled surfaces
under the (+,+,-) metric, with a grid engine that checks the closed-form
Lamarle curvature relations against the fundamental-form route.
"""

from .lorentz import (
    EPS_CAUSAL,
    AngleKind,
    AngleResult,
    CausalCharacter,
    LVec3,
    angle_between,
    causal_character,
    det3,
    lorentz_cross,
    metric,
    norm,
    same_timecone,
)
from .expr import CurveSpec, Dual2, eval_dual2, evaluate as evaluate_expr, format_expr, parse, parse_source, tokenize
from .curves import DirectorFrame, FrameType, ParamCurve, director_frame
from .surface import (
    RuledSurface,
    StrictionForm,
    SurfaceClass,
    classify,
    distribution_parameter,
    load_definition,
    surface_from_definition,
    surface_to_definition,
    to_striction_form,
    unit_normal,
)
from .curvature import (
    LamarleReport,
    first_forms,
    gaussian_curvature_central_diff,
    gaussian_curvature_forms,
    lamarle_curvature,
    second_forms,
    verify_lamarle,
)
from .catalog import CatalogEntry, catalog_names, get_surface, random_surface

__version__ = "0.1.0"

__all__ = [
    "AngleKind",
    "AngleResult",
    "CatalogEntry",
    "CausalCharacter",
    "CurveSpec",
    "DirectorFrame",
    "Dual2",
    "EPS_CAUSAL",
    "FrameType",
    "LVec3",
    "LamarleReport",
    "ParamCurve",
    "RuledSurface",
    "StrictionForm",
    "SurfaceClass",
    "angle_between",
    "catalog_names",
    "causal_character",
    "classify",
    "det3",
    "director_frame",
    "distribution_parameter",
    "eval_dual2",
    "evaluate_expr",
    "first_forms",
    "format_expr",
    "gaussian_curvature_central_diff",
    "gaussian_curvature_forms",
    "get_surface",
    "lamarle_curvature",
    "load_definition",
    "lorentz_cross",
    "metric",
    "norm",
    "parse",
    "parse_source",
    "random_surface",
    "same_timecone",
    "second_forms",
    "surface_from_definition",
    "surface_to_definition",
    "to_striction_form",
    "tokenize",
    "unit_normal",
    "verify_lamarle",
]
