"""Kernel selection.

The compiled ``_ckernels`` extension is used when it has been built; the
pure-Python ``_pykernels`` module is the fallback.  Setting the environment
variable ``NCSPAN_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("NCSPAN_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import matmul, poly_add, poly_mul, poly_scale, poly_sub, rref_insert, rref_reduce

    BACKEND = "python"
else:
    try:
        from ._ckernels import matmul, poly_add, poly_mul, poly_scale, poly_sub, rref_insert, rref_reduce

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import matmul, poly_add, poly_mul, poly_scale, poly_sub, rref_insert, rref_reduce

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "matmul",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_sub",
    "rref_insert",
    "rref_reduce",
]
