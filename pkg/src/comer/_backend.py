"""Pick the kernel implementation at import time.

The compiled extension is used when it was built; ``COMER_BACKEND=python``
forces the fallback, ``COMER_BACKEND=compiled`` makes a missing build an error.
"""
import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

_choice = os.environ.get("COMER_BACKEND", "").strip().lower()
if _choice == "compiled" and _compiled is None:
    raise ImportError("COMER_BACKEND=compiled but comer._kernels is not built")
if _choice and _choice not in ("python", "compiled"):
    raise ImportError(f"unknown COMER_BACKEND {_choice!r}")

kernels = BACKENDS.get(_choice or "compiled", _kernels_py)


def get(name=None):
    """Kernel module by name; ``None`` means the import-time default."""
    if name is None or name == "auto":
        return kernels
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable (have: {', '.join(BACKENDS)})") from None
