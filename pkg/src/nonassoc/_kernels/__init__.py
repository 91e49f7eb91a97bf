"""Hot kernels, compiled when possible.

The Cython extension ``_ckernels`` is used if it was built; otherwise, or when
the environment variable ``NONASSOC_PURE_PYTHON`` is set to a non-empty value,
the pure-Python ``_pykernels`` module is used.  ``BACKEND`` names the choice.
"""
import os

from . import _pykernels

if os.environ.get("NONASSOC_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

depth_tables = _impl.depth_tables
reduce_table = _impl.reduce_table
pairwise_equivalent = _impl.pairwise_equivalent
lis_histogram_132 = _impl.lis_histogram_132
dyck_height_histogram = _impl.dyck_height_histogram
dyck_avoiding_count = _impl.dyck_avoiding_count

__all__ = [
    "BACKEND",
    "depth_tables",
    "reduce_table",
    "pairwise_equivalent",
    "lis_histogram_132",
    "dyck_height_histogram",
    "dyck_avoiding_count",
]
