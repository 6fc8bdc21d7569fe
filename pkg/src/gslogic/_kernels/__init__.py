"""Kernel backend selection.

The hot operations (GF(2) rank, exact rank-width search) exist twice: a
compiled Cython extension (`_fast`) and a pure-Python fallback (`pure`).
The compiled one is preferred when importable; set GSLOGIC_FORCE_PURE=1 to
force the fallback. `benchmarks/bench_kernels.py` compares the two.
"""

import os

from . import pure as _pure

if os.environ.get("GSLOGIC_FORCE_PURE"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND_NAME = _impl.BACKEND_NAME
gf2_rank_rows = _impl.gf2_rank_rows
rankwidth_search = _impl.rankwidth_search


def backend_name() -> str:
    """Name of the kernel backend in use: "fast" (compiled) or "pure"."""
    return BACKEND_NAME
