"""Exact overcommutation certificates for the rank-one Steinberg group.

The heavy lifting lives in the C++ core; this package re-exports the
pybind11 module.
"""

from _occert import (  # noqa: F401
    FieldElem,
    GhysRefinedReport,
    GhysReport,
    IdentityCheck,
    LedgerEntry,
    OccertError,
    SLMatrix,
    TorusKnotData,
    Word,
    affine_unit_argument,
    comm,
    conj,
    expand_relator,
    ghys_refined,
    parse_field_elem,
    parse_word,
    pi_eval,
    psi_apply,
    steinberg_check,
    stevedore_report,
    torus_knot,
    verify_certificate,
    verify_ghys,
)

__all__ = [
    "FieldElem", "Word", "SLMatrix", "OccertError",
    "GhysReport", "GhysRefinedReport", "LedgerEntry", "IdentityCheck",
    "TorusKnotData",
    "parse_field_elem", "parse_word", "conj", "comm",
    "pi_eval", "psi_apply", "expand_relator",
    "verify_ghys", "ghys_refined", "torus_knot", "verify_certificate",
    "steinberg_check", "stevedore_report", "affine_unit_argument",
]
