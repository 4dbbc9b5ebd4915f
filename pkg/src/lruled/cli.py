"""Command-line front end.

Subcommands: list, classify, frame, striction, drall, curvature, verify,
mesh.  A surface comes from exactly one of: a catalog name (--surface), a
definition file (--definition), inline expressions (--base/--director), or
a seeded generator (--random-class with --seed).

Exit codes: 0 success, 1 geometric failure at runtime, 2 bad definition or
usage, 3 verify ran fine but exceeded the tolerance.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import DefinitionError, GeometryError
from .catalog import catalog_names, get_surface, random_surface
from .curvature import (
    gaussian_curvature_forms,
    reports_to_csv,
    reports_to_json,
    summarize,
    valid_v_window,
    verify_lamarle,
)
from .curves import causal_character_at, director_frame, eval_point
from .lorentz import causal_character
from .surface import (
    RuledSurface,
    SurfaceClass,
    candidate_class,
    classify,
    distribution_parameter,
    evaluate,
    load_definition,
    surface_from_definition,
    to_striction_form,
    with_ranges,
)
from .util import linspace

_RANDOM_CLASSES = {
    "m1": SurfaceClass.M1_SPACELIKE,
    "m2": SurfaceClass.M2_TIMELIKE_SPACELIKE_BASE_TIMELIKE_RULING,
    "m3": SurfaceClass.M3_TIMELIKE_TIMELIKE_BASE_SPACELIKE_RULING,
}

_COMMANDS = ("list", "classify", "frame", "striction", "drall", "curvature", "verify", "mesh")


class ConfigError(DefinitionError):
    code = "bad-config"


@dataclass
class RunConfig:
    command: str
    surface: str | None = None
    definition: str | None = None
    base: str | None = None
    director: str | None = None
    random_class: str | None = None
    seed: int = 0
    u_range: tuple[float, float] | None = None
    v_range: tuple[float, float] | None = None
    u_samples: int = 41
    v_samples: int = 33
    fmt: str | None = None
    output: str | None = None
    tolerance: float = 1e-8


def _parse_pair(text: str, flag: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError(f"{flag} expects 'lo:hi', got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise ConfigError(f"{flag} expects numbers, got {text!r}") from None
    if not lo < hi:
        raise ConfigError(f"{flag} needs lo < hi, got {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lruled",
        description="Ruled-surface invariants in Lorentz 3-space",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in _COMMANDS:
        p = sub.add_parser(command)
        if command == "list":
            continue
        p.add_argument("--surface", help="catalog surface name")
        p.add_argument("--definition", help="path to a surface-definition JSON file")
        p.add_argument("--base", help='inline base curve "<e1>,<e2>,<e3>"')
        p.add_argument("--director", help='inline director curve "<e1>,<e2>,<e3>"')
        p.add_argument("--random-class", choices=sorted(_RANDOM_CLASSES), dest="random_class")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--u-range", dest="u_range", help="override, as a:b")
        p.add_argument("--v-range", dest="v_range", help="override, as c:d")
        p.add_argument("--u-samples", dest="u_samples", type=int, default=41)
        p.add_argument("--v-samples", dest="v_samples", type=int, default=33)
        p.add_argument("--format", dest="fmt", choices=("csv", "json", "obj"))
        p.add_argument("--output", help="write the artifact here instead of stdout")
        p.add_argument("--tolerance", type=float, default=1e-8)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=ns.command)
    if ns.command == "list":
        return config
    config.surface = ns.surface
    config.definition = ns.definition
    config.base = ns.base
    config.director = ns.director
    config.random_class = ns.random_class
    config.seed = ns.seed
    config.u_samples = ns.u_samples
    config.v_samples = ns.v_samples
    config.fmt = ns.fmt
    config.output = ns.output
    config.tolerance = ns.tolerance
    if ns.u_range is not None:
        config.u_range = _parse_pair(ns.u_range, "--u-range")
    if ns.v_range is not None:
        config.v_range = _parse_pair(ns.v_range, "--v-range")

    if (config.base is None) != (config.director is None):
        raise ConfigError("--base and --director must be given together")
    sources = sum(
        1
        for present in (config.surface, config.definition, config.base, config.random_class)
        if present is not None
    )
    if sources != 1:
        raise ConfigError(
            "exactly one surface source required: "
            "--surface | --definition | --base/--director | --random-class"
        )
    if config.u_samples < 2 or config.v_samples < 2:
        raise ConfigError("--u-samples and --v-samples must be at least 2")
    if config.command == "mesh":
        if config.fmt is None:
            config.fmt = "obj"
        elif config.fmt != "obj":
            raise ConfigError("mesh output is OBJ only")
    else:
        if config.fmt == "obj":
            raise ConfigError(f"{config.command} cannot emit OBJ")
        if config.fmt is None:
            config.fmt = "csv"
    return config


def resolve_surface(config: RunConfig) -> RuledSurface:
    if config.surface is not None:
        surface = get_surface(config.surface).surface
    elif config.definition is not None:
        surface = load_definition(config.definition)
    elif config.random_class is not None:
        surface = random_surface(_RANDOM_CLASSES[config.random_class], config.seed)
    else:
        u_range = config.u_range or (-1.0, 1.0)
        v_range = config.v_range or (-1.0, 1.0)
        from .expr import split_components

        surface = surface_from_definition(
            {
                "name": "inline",
                "base": [c.strip() for c in split_components(config.base or "")],
                "director": [c.strip() for c in split_components(config.director or "")],
                "u_range": list(u_range),
                "v_range": list(v_range),
            }
        )
    if config.u_range is not None or config.v_range is not None:
        surface = with_ranges(surface, config.u_range, config.v_range)
    return surface


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _table(header: str, rows: list[tuple], fmt: str, keys: list[str]) -> str:
    if fmt == "csv":
        lines = [header]
        for row in rows:
            lines.append(",".join(repr(x) if isinstance(x, float) else str(x) for x in row))
        return "\n".join(lines) + "\n"
    records = [dict(zip(keys, row)) for row in rows]
    return json.dumps(records) + "\n"


def _cmd_classify(surface: RuledSurface, config: RunConfig) -> int:
    us = linspace(*surface.u_range, config.u_samples)
    rows = [
        (
            u,
            causal_character_at(surface.base, u).value,
            causal_character(eval_point(surface.director, u)).value,
        )
        for u in us
    ]
    v_mid = 0.5 * (surface.v_range[0] + surface.v_range[1])
    u_mid = 0.5 * (surface.u_range[0] + surface.u_range[1])
    cls = classify(surface, u_mid, v_mid)
    _emit(
        _table("u,base_tangent,ruling", rows, config.fmt, ["u", "base_tangent", "ruling"]),
        config.output,
    )
    sys.stdout.write(f"class={cls.value}\n")
    return 0


def _cmd_frame(surface: RuledSurface, config: RunConfig) -> int:
    rows = []
    for u in linspace(*surface.u_range, config.u_samples):
        f = director_frame(surface.director, u)
        rows.append(
            (u, f.e.x1, f.e.x2, f.e.x3, f.n.x1, f.n.x2, f.n.x3, f.xi.x1, f.xi.x2, f.xi.x3,
             f.kappa, f.tau, f.frame_type.value)
        )
    header = "u,e1,e2,e3,n1,n2,n3,xi1,xi2,xi3,kappa,tau,frame_type"
    _emit(_table(header, rows, config.fmt, header.split(",")), config.output)
    return 0


def _cmd_striction(surface: RuledSurface, config: RunConfig) -> int:
    form = to_striction_form(surface, config.u_samples)
    rows = [(u, pt.x1, pt.x2, pt.x3) for u, pt in form.striction]
    _emit(_table("u,x1,x2,x3", rows, config.fmt, ["u", "x1", "x2", "x3"]), config.output)
    return 0


def _cmd_drall(surface: RuledSurface, config: RunConfig) -> int:
    rows = [
        (u, distribution_parameter(surface, u))
        for u in linspace(*surface.u_range, config.u_samples)
    ]
    _emit(_table("u,P", rows, config.fmt, ["u", "P"]), config.output)
    return 0


def _cmd_curvature(surface: RuledSurface, config: RunConfig) -> int:
    us = linspace(*surface.u_range, config.u_samples)
    cls = candidate_class(surface, 0.5 * (surface.u_range[0] + surface.u_range[1]))
    v_lo, v_hi = valid_v_window(surface, cls, us)
    rows = []
    for u in us:
        for v in linspace(v_lo, v_hi, config.v_samples):
            rows.append((u, v, gaussian_curvature_forms(surface, u, v)))
    _emit(_table("u,v,K_forms", rows, config.fmt, ["u", "v", "K_forms"]), config.output)
    return 0


def _cmd_verify(surface: RuledSurface, config: RunConfig) -> int:
    reports = verify_lamarle(surface, config.u_samples, config.v_samples)
    text = reports_to_csv(reports) if config.fmt == "csv" else reports_to_json(reports)
    _emit(text, config.output)
    stats = summarize(reports)
    sys.stdout.write(f"max_abs_diff={stats['max_abs_diff']!r}\n")
    sys.stdout.write(f"max_rel_diff={stats['max_rel_diff']!r}\n")
    if stats["errors"]:
        sys.stderr.write(f"note: {stats['errors']} grid points recorded errors\n")
    if not stats["max_rel_diff"] <= config.tolerance:
        sys.stderr.write(
            f"error[tolerance-exceeded]: max_rel_diff={stats['max_rel_diff']!r} "
            f"> tolerance={config.tolerance!r}\n"
        )
        return 3
    return 0


def _cmd_mesh(surface: RuledSurface, config: RunConfig) -> int:
    nu, nv = config.u_samples, config.v_samples
    lines = []
    for u in linspace(*surface.u_range, nu):
        for v in linspace(*surface.v_range, nv):
            pt = evaluate(surface, u, v)
            lines.append(f"v {pt.x1!r} {pt.x2!r} {pt.x3!r}")
    # row-major (u, v) vertex order; quads over grid cells, 1-indexed
    for i in range(nu - 1):
        for j in range(nv - 1):
            a = i * nv + j + 1
            b = (i + 1) * nv + j + 1
            lines.append(f"f {a} {b} {b + 1} {a + 1}")
    _emit("\n".join(lines) + "\n", config.output)
    return 0


def run(config: RunConfig) -> int:
    """Execute one configured command; returns the process exit status."""
    if config.command == "list":
        sys.stdout.write("\n".join(catalog_names()) + "\n")
        return 0
    surface = resolve_surface(config)
    handler = {
        "classify": _cmd_classify,
        "frame": _cmd_frame,
        "striction": _cmd_striction,
        "drall": _cmd_drall,
        "curvature": _cmd_curvature,
        "verify": _cmd_verify,
        "mesh": _cmd_mesh,
    }[config.command]
    return handler(surface, config)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return run(config_from_args(ns))
    except DefinitionError as exc:
        sys.stderr.write(f"error[{exc.code}]: {exc}\n")
        return 2
    except GeometryError as exc:
        sys.stderr.write(f"error[{exc.code}]: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
