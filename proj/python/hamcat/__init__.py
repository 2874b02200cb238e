"""Symbolic-numeric verification of Hamiltonian systems built on
four-dimensional real Lie algebras.

The heavy lifting lives in the compiled extension ``_hamcat``; this package
re-exports its surface.
"""

from ._hamcat import (  # noqa: F401
    CatalogError,
    ConstraintError,
    DomainError,
    EvalError,
    Expr,
    IntegrationError,
    ParseError,
    canonical_bracket,
    differentiate,
    equal_on_samples,
    evaluate,
    jacobi_defect,
    list_systems,
    parse,
    simulate,
    verify,
)

__all__ = [
    "CatalogError",
    "ConstraintError",
    "DomainError",
    "EvalError",
    "Expr",
    "IntegrationError",
    "ParseError",
    "canonical_bracket",
    "differentiate",
    "equal_on_samples",
    "evaluate",
    "jacobi_defect",
    "list_systems",
    "parse",
    "simulate",
    "verify",
]
