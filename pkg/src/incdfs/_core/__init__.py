"""Kernel backend selection.

The hot inner loops live in two interchangeable backends: a compiled Cython
extension (``_ckern``) and a pure-Python fallback (``pykernels``).  The
compiled one is preferred when importable; ``INCDFS_BACKEND`` (``auto``,
``c`` or ``pure``) overrides, and :func:`set_backend` switches at runtime
(structures built afterwards pick up the new backend).
"""

import os

from . import pykernels

try:
    from . import _ckern
except ImportError:
    _ckern = None

kernels = pykernels
BACKEND = "pure"


def available_backends():
    return ("pure", "c") if _ckern is not None else ("pure",)


def set_backend(name):
    """Select the kernel backend: 'auto', 'c' or 'pure'."""
    global kernels, BACKEND
    if name == "auto":
        name = "c" if _ckern is not None else "pure"
    if name == "c":
        if _ckern is None:
            raise RuntimeError("compiled kernel backend is not available")
        kernels = _ckern
        BACKEND = "c"
    elif name == "pure":
        kernels = pykernels
        BACKEND = "pure"
    else:
        raise ValueError(f"unknown backend {name!r}")
    return BACKEND


set_backend(os.environ.get("INCDFS_BACKEND", "auto"))
