"""Kernel backend selection.

The compiled extension (``shiftstats._core``) is preferred; the pure-Python
twin (``shiftstats._purepy``) is the fallback when the extension is not
built.  Set ``SHIFTSTATS_BACKEND=python`` or ``SHIFTSTATS_BACKEND=cython``
to force one explicitly (the benchmark uses this).
"""

from __future__ import annotations

import os
import warnings

_requested = os.environ.get("SHIFTSTATS_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _purepy as kernels

    BACKEND = "python"
elif _requested == "cython":
    from . import _core as kernels  # type: ignore[no-redef]

    BACKEND = "cython"
elif _requested:
    raise ImportError(
        f"SHIFTSTATS_BACKEND={_requested!r} not recognized; "
        "use 'cython' or 'python'"
    )
else:
    try:
        from . import _core as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _purepy as kernels  # type: ignore[no-redef]

        BACKEND = "python"
        warnings.warn(
            "shiftstats compiled kernels unavailable; using the pure-Python "
            "backend (identical results, slower simulation)",
            RuntimeWarning,
            stacklevel=2,
        )


def backend_name() -> str:
    """Name of the active kernel backend: 'cython' or 'python'."""
    return BACKEND
