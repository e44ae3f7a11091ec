"""Schur multiple zeta values over Young diagrams.

Truncated evaluation, determinant identity verification (column, hook,
winged-hook, reflected-hook, and winged-rectangle determinants), tableau
cancellation sums, and a quasi-symmetric coefficient layer.  Shapes accept
plain partition lists ``[2, 1]``, explicit row-interval dicts, or full
tableau dicts with an ``entries`` grid; bindings are dicts like
``{"z": {"0": 2, "1": 3, "-1": 2}}``.
"""

from ._core import (
    antidiagonal_transpose,
    antipode,
    cancel,
    count_ssyt,
    enumerate_ssyt,
    eval_adaptive,
    eval_ez,
    eval_truncated,
    harmonic_product,
    hopf_check,
    s_giambelli_check,
    schur_qsym,
    specialize_zeta,
    verify,
)

__all__ = [
    "antidiagonal_transpose",
    "antipode",
    "cancel",
    "count_ssyt",
    "enumerate_ssyt",
    "eval_adaptive",
    "eval_ez",
    "eval_truncated",
    "harmonic_product",
    "hopf_check",
    "s_giambelli_check",
    "schur_qsym",
    "specialize_zeta",
    "verify",
]

__version__ = "1.0.0"
