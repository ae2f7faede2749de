"""Backend selection for the numerical kernel.

The compiled Cython kernel is preferred when importable; the pure
numpy kernel is the fallback. Set RMSPEC_BACKEND=python (or =cython)
to force a choice before import.
"""

from __future__ import annotations

import os

from . import _kernel_py

_forced = os.environ.get("RMSPEC_BACKEND", "").strip().lower()

if _forced == "python":
    _impl = _kernel_py
elif _forced == "cython":
    from . import _kernel_cy as _impl  # raises if the extension was not built
else:
    try:
        from . import _kernel_cy as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND

gamma = _impl.gamma
digamma = _impl.digamma
recip_gamma = _impl.recip_gamma
nonpos_int_distance = _impl.nonpos_int_distance
hyp2f1 = _impl.hyp2f1
hyp2f1_grid = _impl.hyp2f1_grid
jacobi = _impl.jacobi
jacobi_grid = _impl.jacobi_grid
sturm_count = _impl.sturm_count
