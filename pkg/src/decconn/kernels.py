"""Kernel selection: compiled extension when importable, else the Python fallback.

Set ``DECCONN_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py as py_impl

compiled_impl = None
if not os.environ.get("DECCONN_PURE"):
    try:
        from . import _kernels as compiled_impl  # type: ignore[no-redef]
    except ImportError:
        compiled_impl = None

impl = compiled_impl or py_impl
BACKEND = "cython" if compiled_impl is not None else "python"

scc_labels = impl.scc_labels
count_reachable = impl.count_reachable
