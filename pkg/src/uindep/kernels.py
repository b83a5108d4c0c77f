"""Kernel selection: compiled extension when importable, NumPy fallback otherwise.

Set ``UINDEP_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
state_loop_counts = _kernels_py.state_loop_counts
switch_histograms = _kernels_py.switch_histograms

if not os.environ.get("UINDEP_PURE_PYTHON"):
    try:
        from ._ext import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        state_loop_counts = _compiled.state_loop_counts
        switch_histograms = _compiled.switch_histograms
