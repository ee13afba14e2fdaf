"""Exact computer algebra for derivations of C[X1..Xn]/(X1^m1 + ... + Xn^mn).

The heavy lifting lives in the compiled extension; this package re-exports
the public surface.
"""

from ._core import (
    Derivation,
    Elem,
    KernelReport,
    LinearDerivation,
    Matrix,
    Ring,
    cyclotomic_polynomial,
    family_even,
    family_odd,
    verify,
)

__all__ = [
    "Derivation",
    "Elem",
    "KernelReport",
    "LinearDerivation",
    "Matrix",
    "Ring",
    "cyclotomic_polynomial",
    "family_even",
    "family_odd",
    "verify",
]

__version__ = "0.1.0"
