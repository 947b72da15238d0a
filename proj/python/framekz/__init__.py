"""Kaczmarz auxiliary sequences, normalized Bessel / tight-frame synthesis,
and pivoted semidefinite Cholesky factorization.

Everything lives in the compiled extension; this package just re-exports it.
Vectors are 1-d complex numpy arrays, sequences are lists of them.
"""

from ._framekz import *  # noqa: F401,F403
from ._framekz import __doc__ as _ext_doc  # noqa: F401

__version__ = "0.1.0"
