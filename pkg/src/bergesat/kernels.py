"""Kernel backend selection.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Setting ``BERGESAT_PURE_PYTHON=1`` forces
the fallback.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _pykernels

BACKENDS = ("compiled", "python")


def load(name: str) -> ModuleType:
    """Return the kernel module for ``name``; raises ImportError if unavailable."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        return importlib.import_module("bergesat._speedups")
    raise ValueError(f"unknown backend {name!r}")


def available() -> list[str]:
    out = []
    for name in BACKENDS:
        try:
            load(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select() -> tuple[str, ModuleType]:
    if os.environ.get("BERGESAT_PURE_PYTHON", "") not in ("", "0"):
        return "python", _pykernels
    try:
        return "compiled", load("compiled")
    except ImportError:
        return "python", _pykernels


BACKEND, _impl = _select()

berge_embed = _impl.berge_embed
first_failing = _impl.first_failing
is_canonical = _impl.is_canonical
