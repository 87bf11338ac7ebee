"""Kernel backend selector.

Imports the compiled extension when available, falling back to the pure-Python
implementation. Set ELPMEND_PURE=1 to force the fallback (useful for
benchmarking and debugging).
"""

from __future__ import annotations

import os

if os.environ.get("ELPMEND_PURE") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND: str = _impl.BACKEND
even_mask = _impl.even_mask
answer_set_scan = _impl.answer_set_scan
facts_scan = _impl.facts_scan
uniform_scan = _impl.uniform_scan
