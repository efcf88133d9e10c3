"""Backend selection for the hot kernels.

The compiled extension is used whenever it imported and the packed keys fit
in 64 bits; otherwise the pure-Python twin runs.  Setting the environment
variable ``GNSWILF_PURE_PYTHON=1`` disables the extension at import.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend
from .packing import Packing

compiled_backend = None
if not os.environ.get("GNSWILF_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_backend = None

_forced = None


def available_backends() -> list:
    return [b for b in (compiled_backend, python_backend) if b is not None]


def force_backend(name: str | None) -> None:
    """Pin every call to ``"python"`` or ``"cython"``; ``None`` restores automatic choice."""
    global _forced
    if name is None:
        _forced = None
    elif name == "python":
        _forced = python_backend
    elif name == "cython":
        if compiled_backend is None:
            raise RuntimeError("compiled kernels are not available")
        _forced = compiled_backend
    else:
        raise ValueError(f"unknown backend {name!r}")


def backend_for(packing: Packing):
    if _forced is not None:
        if _forced is compiled_backend and packing.total_bits > 64:
            return python_backend
        return _forced
    if compiled_backend is not None and packing.total_bits <= 64:
        return compiled_backend
    return python_backend


def active_name() -> str:
    if _forced is not None:
        return _forced.BACKEND
    return (compiled_backend or python_backend).BACKEND
