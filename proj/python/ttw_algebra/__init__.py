"""Exact symbolic kernel for the TTW superintegrable system at integer k.

The heavy lifting lives in the C++ extension `_ttwcore`; this package
re-exports its surface.
"""

try:
    from ._ttwcore import (  # noqa: F401
        GenPoly,
        KernelError,
        NoSolutionError,
        NotInvariantError,
        NotTriangularError,
        Operator,
        Poly,
        commutator,
        expected_closure,
        hamiltonian,
        integral1,
        integral12,
        integral2,
        parse_operator,
        print_operator,
        reduce,
        spectrum,
        verify,
    )
except ImportError:  # running against a plain CMake build tree
    from _ttwcore import (  # noqa: F401
        GenPoly,
        KernelError,
        NoSolutionError,
        NotInvariantError,
        NotTriangularError,
        Operator,
        Poly,
        commutator,
        expected_closure,
        hamiltonian,
        integral1,
        integral12,
        integral2,
        parse_operator,
        print_operator,
        reduce,
        spectrum,
        verify,
    )

__all__ = [
    "GenPoly",
    "KernelError",
    "NoSolutionError",
    "NotInvariantError",
    "NotTriangularError",
    "Operator",
    "Poly",
    "commutator",
    "expected_closure",
    "hamiltonian",
    "integral1",
    "integral12",
    "integral2",
    "parse_operator",
    "print_operator",
    "reduce",
    "spectrum",
    "verify",
]
