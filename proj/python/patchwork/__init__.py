"""Exact combinatorial patchworking of T^2-hypersurfaces."""

from ._patchwork import (
    Problem,
    SchemaError,
    audit_suite,
    betti,
    certify_convexity,
    construct,
    construction_names,
    euler_characteristic,
    hodge_numbers,
    index_histogram,
    primitive_hodge_number,
    render_off,
    render_svg,
    topology,
)

__all__ = [
    "Problem",
    "SchemaError",
    "audit_suite",
    "betti",
    "certify_convexity",
    "construct",
    "construction_names",
    "euler_characteristic",
    "hodge_numbers",
    "index_histogram",
    "primitive_hodge_number",
    "render_off",
    "render_svg",
    "topology",
]
