"""Backend selection for the bitset kernels.

The compiled extension ``imtw._ckernel`` is used when it imported cleanly
and the graph fits in 64 bits; otherwise the pure-Python twin runs.
``use_backend("python")`` or ``IMTW_BACKEND=python`` in the environment
forces the fallback.
"""
from __future__ import annotations

import contextlib
import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

ALPHA = _pykernel.ALPHA
MU = _pykernel.MU

HAVE_COMPILED = _ckernel is not None
_preferred = "cython" if HAVE_COMPILED else "python"


def backend() -> str:
    return _preferred


def set_backend(name: str) -> None:
    global _preferred
    if name not in ("python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernel not built; run `python setup.py build_ext --inplace`")
    _preferred = name


@contextlib.contextmanager
def use_backend(name: str):
    old = _preferred
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)


if os.environ.get("IMTW_BACKEND"):
    set_backend(os.environ["IMTW_BACKEND"])


def make_kernel(n: int, adj, name: str | None = None):
    name = name or _preferred
    if name == "cython" and HAVE_COMPILED and n <= 64:
        return _ckernel.BitGraph(n, adj)
    return _pykernel.BitGraph(n, adj)
