"""Selects the feasibility kernel at import time.

The compiled kernel (``_kernel_ext``, built from ``_kernel_ext.pyx``) handles
host graphs with at most 64 vertices using machine-word bitsets; anything
larger, or any environment where the extension was not built, goes through
the pure-Python kernel. Set ``D2TRANSIT_KERNEL=python`` to force the fallback.
"""

import os

from . import _kernel_py

FOUND = _kernel_py.FOUND
INFEASIBLE = _kernel_py.INFEASIBLE
BUDGET = _kernel_py.BUDGET

WORD_LIMIT = 64

_ext = None
if os.environ.get("D2TRANSIT_KERNEL", "").lower() != "python":
    try:
        from . import _kernel_ext as _ext
    except ImportError:  # extension not built
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def feasible(adj, k, cap, node_budget, backend=None):
    """Dispatch to the selected kernel; see :func:`_kernel_py.feasible`."""
    backend = backend or BACKEND
    if backend == "cython" and _ext is not None and len(adj) <= WORD_LIMIT:
        return _ext.feasible(list(adj), k, list(cap), node_budget)
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown kernel backend {backend!r}")
    return _kernel_py.feasible(adj, k, cap, node_budget)


level_caps = _kernel_py.level_caps


def available_backends():
    return ["python"] + (["cython"] if _ext is not None else [])
