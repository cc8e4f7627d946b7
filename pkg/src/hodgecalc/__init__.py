"""Exact characteristic-2 computations for graded cohomology rings.

Everything in this package is exact: polynomials over a prime field,
dimension tables of finitely presented graded algebras, weighted
composition counts, fixed subspaces of permutation actions, and
dimension-level model spectral sequences.  A built-in catalog covers
G2, Spin(7)..Spin(11) and the SO(n) baseline, with an end-to-end
verification pipeline exposed through the ``hodgecalc`` CLI.
"""

from __future__ import annotations


class StructuralError(ValueError):
    """Raised when values from incompatible structures are combined."""


class ContractError(ValueError):
    """Raised when an argument violates an operation's precondition."""


__version__ = "0.1.0"

__all__ = ["StructuralError", "ContractError", "__version__"]
