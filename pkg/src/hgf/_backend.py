"""Kernel backend selection.

The compiled extension ``hgf._core`` is preferred when importable; the
pure-Python twin ``hgf._core_py`` is the fallback.  Set ``HGF_BACKEND=python``
(or ``c``) to force a choice at import time.
"""

from __future__ import annotations

import os

from hgf import _core_py

_requested = os.environ.get("HGF_BACKEND", "").strip().lower()

if _requested in ("python", "py", "pure"):
    core = _core_py
elif _requested in ("c", "compiled", "cython"):
    from hgf import _core as core  # type: ignore[no-redef]
else:
    try:
        from hgf import _core as core  # type: ignore[no-redef]
    except ImportError:
        core = _core_py


def backend_name() -> str:
    """Name of the active kernel backend: 'c' or 'python'."""
    return core.BACKEND_NAME
