"""Kernel backend selection.

The compiled extension is used when it imports; setting ``AGFUZZY_PURE=1``
forces the numpy fallback.
"""

import os

from . import _kernels_py

if os.environ.get("AGFUZZY_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

sup_min = _impl.sup_min
product_table = _impl.product_table
ag_search = _impl.ag_search
canonical_forms = _impl.canonical_forms

__all__ = ["BACKEND", "sup_min", "product_table", "ag_search", "canonical_forms"]
