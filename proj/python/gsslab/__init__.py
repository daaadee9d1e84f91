"""Generalized self-shrinking sequence workbench."""

from ._core import (
    GsslabError,
    analyze,
    complement_partner,
    family,
    generate,
    linear_complexity,
    msequence,
    primitive_polynomials,
    special_exponents,
    validate_primitive,
    verifier_names,
    verify,
)

__all__ = [
    "GsslabError",
    "analyze",
    "complement_partner",
    "family",
    "generate",
    "linear_complexity",
    "msequence",
    "primitive_polynomials",
    "special_exponents",
    "validate_primitive",
    "verifier_names",
    "verify",
]
