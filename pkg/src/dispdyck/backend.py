"""Kernel backend selection.

The compiled Cython module is preferred when it imported cleanly; otherwise
the pure-Python fallback with the identical contract is used.  Setting the
environment variable ``DISPDYCK_PURE=1`` before import forces the fallback.
``use()`` switches at runtime (the benchmark relies on this).
"""

import os

from . import _pykernels

impl = _pykernels
name = "pure"

if not os.environ.get("DISPDYCK_PURE"):
    try:
        from . import _kernels

        impl = _kernels
        name = "compiled"
    except ImportError:
        pass


def available():
    backends = ["pure"]
    try:
        from . import _kernels  # noqa: F401

        backends.append("compiled")
    except ImportError:
        pass
    return backends


def use(which):
    """Switch the active backend to "pure" or "compiled"."""
    global impl, name
    if which == "pure":
        impl = _pykernels
        name = "pure"
    elif which == "compiled":
        from . import _kernels

        impl = _kernels
        name = "compiled"
    else:
        raise ValueError(f"unknown backend {which!r}")
