"""Kernel backend selection.

The compiled Cython backend is used when available; the pure-Python
fallback is always present. Set ``GROUPLAB_KERNELS=pure`` (or ``c``) to
force a backend; forcing ``c`` raises if the extension is missing.
"""

from __future__ import annotations

import os

from . import pure


def load_backend(name: str):
    """Return a kernel module by name ('c' or 'pure')."""
    if name == "pure":
        return pure
    if name == "c":
        from . import compiled

        return compiled
    raise ValueError(f"unknown kernel backend {name!r} (expected 'c' or 'pure')")


def _select():
    requested = os.environ.get("GROUPLAB_KERNELS", "auto").lower()
    if requested in ("c", "pure"):
        return load_backend(requested)
    if requested != "auto":
        raise ValueError(
            f"GROUPLAB_KERNELS={requested!r} not understood (use 'c', 'pure' or 'auto')"
        )
    try:
        return load_backend("c")
    except ImportError:
        return pure


K = _select()
BACKEND = K.BACKEND

__all__ = ["K", "BACKEND", "load_backend", "pure"]
