"""Exact Hochschild cohomology of the Jordan and super Jordan planes."""

from ._core import (
    BraidcohError,
    act,
    basis,
    coproduct,
    cohomology,
    normal_form,
    run_cli,
    validate_resolution,
    verify_coduoid,
    verify_commutativity,
    verify_dec,
)

__all__ = [
    "BraidcohError",
    "act",
    "basis",
    "coproduct",
    "cohomology",
    "normal_form",
    "run_cli",
    "validate_resolution",
    "verify_coduoid",
    "verify_commutativity",
    "verify_dec",
]
