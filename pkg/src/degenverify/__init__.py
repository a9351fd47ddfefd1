"""degenverify: exact verification of orbit-closure degenerations.

A toolkit for recomputing invariants of low-dimensional anticommutative
algebras (binary Lie algebras in dimension 4, nilpotent Malcev algebras in
dimensions 5 and 6), mechanically checking degeneration witnesses and
non-degeneration arguments, and auditing the resulting degeneration graphs
and irreducible-component statements for completeness.

All arithmetic is exact, over Q extended by named parameters and the
deformation variable t.
"""

from .exact import (
    Rat,
    ParamPoly,
    Scalar,
    UNDEFINED,
    DivisionByZero,
    SubstitutionPole,
    ScalarSyntaxError,
    parse_scalar,
    scalar_arith,
    substitute,
    t_order_and_limit,
)

__all__ = [
    "Rat",
    "ParamPoly",
    "Scalar",
    "UNDEFINED",
    "DivisionByZero",
    "SubstitutionPole",
    "ScalarSyntaxError",
    "parse_scalar",
    "scalar_arith",
    "substitute",
    "t_order_and_limit",
]

__version__ = "0.1.0"
