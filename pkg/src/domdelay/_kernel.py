"""Import-time selection between the compiled and pure-Python kernels."""

from __future__ import annotations

from . import _p7core_py

try:
    from . import _p7core  # compiled extension, optional
except ImportError:  # pragma: no cover - depends on the build environment
    _p7core = None

DEFAULT = _p7core if _p7core is not None else _p7core_py


def get_kernel(name: str = "auto"):
    """Resolve a kernel by name: 'auto', 'compiled' or 'python'."""
    if name == "auto":
        return DEFAULT
    if name == "python":
        return _p7core_py
    if name == "compiled":
        if _p7core is None:
            raise RuntimeError("compiled kernel is not available in this build")
        return _p7core
    raise ValueError(f"unknown kernel {name!r}")


def compiled_available() -> bool:
    return _p7core is not None
