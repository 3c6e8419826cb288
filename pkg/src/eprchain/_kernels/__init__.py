"""Kernel backend selection: compiled core with pure-Python fallback.

The Cython extension is preferred when importable; set
``EPRCHAIN_BACKEND=python`` to force the numpy fallback (used by the
benchmark and the backend-equivalence tests).
"""

import os

from . import _fallback

if os.environ.get("EPRCHAIN_BACKEND", "").lower() == "python":
    _impl = _fallback
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _fallback

BACKEND = _impl.BACKEND_NAME
trace_eof_fid = _impl.trace_eof_fid
