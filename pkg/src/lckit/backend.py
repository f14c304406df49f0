"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the pure
Python twin takes over.  LCKIT_BACKEND=c|python forces a choice (useful
for tests and the backend benchmark).
"""

import os

from .errors import LckitError

_choice = os.environ.get("LCKIT_BACKEND", "auto").strip().lower()

if _choice in ("", "auto"):
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl  # type: ignore[no-redef]
elif _choice in ("c", "ext", "native"):
    from . import _core as _impl  # type: ignore[attr-defined, no-redef]
elif _choice in ("py", "python", "pure"):
    from . import _core_py as _impl  # type: ignore[no-redef]
else:
    raise LckitError(f"unknown LCKIT_BACKEND value: {_choice!r}")

apply_sequence_rows = _impl.apply_sequence_rows
gf2_rref_rows = _impl.gf2_rref_rows
BACKEND = _impl.BACKEND_NAME


def backend_name() -> str:
    """Name of the active kernel backend: 'c' or 'python'."""
    return BACKEND
