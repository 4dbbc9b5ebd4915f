"""Shared exception bases.

Every error carries a stable machine-readable ``code`` so the CLI can emit
diagnostics that scripts can match on without parsing prose.
"""


class GeometryError(Exception):
    """A geometric computation failed (degenerate input, domain violation...)."""

    code = "geometry-error"


class DefinitionError(Exception):
    """A surface/expression definition could not be ingested."""

    code = "bad-definition"
