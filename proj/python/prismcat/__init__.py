"""One-cusped hyperbolic triangular prisms: catalog, realization, generators."""

from ._prismcat import (
    RealizationError,
    angle_residuals,
    canonicalize,
    classify_triangle,
    entry_json,
    enumerate_catalog,
    generators,
    is_admissible,
    realize,
    relation_residuals,
    render_svg,
    symmetry_mate,
    trace_residuals,
)

__all__ = [
    "RealizationError",
    "angle_residuals",
    "canonicalize",
    "classify_triangle",
    "entry_json",
    "enumerate_catalog",
    "generators",
    "is_admissible",
    "realize",
    "relation_residuals",
    "render_svg",
    "symmetry_mate",
    "trace_residuals",
]
