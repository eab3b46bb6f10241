"""Backend selection for the integer matrix kernels.

The compiled extension is used when it imported successfully and the
environment variable YBFORGE_PURE is unset.  Either way the pure kernels
stay available: they are the correctness reference, the big-number path,
and one arm of the benchmark (which flips backends via force_pure).
"""
import contextlib
import os

from . import _pure

try:
    from . import _fastcore
except ImportError:
    _fastcore = None

if os.environ.get("YBFORGE_PURE"):
    _fastcore = None

ACTIVE_BACKEND = "fast" if _fastcore is not None else "pure"

_FORCE_PURE = False


def has_fast():
    return _fastcore is not None and not _FORCE_PURE


@contextlib.contextmanager
def force_pure():
    """Temporarily route all products through the pure kernels."""
    global _FORCE_PURE
    saved = _FORCE_PURE
    _FORCE_PURE = True
    try:
        yield
    finally:
        _FORCE_PURE = saved


def matmul_fast(a, b, out, ra, ca, cb):
    _fastcore.matmul_i64(a, b, out, ra, ca, cb)


def kron_fast(a, b, out, ra, ca, rb, cb):
    _fastcore.kron_i64(a, b, out, ra, ca, rb, cb)


matmul_pure = _pure.matmul_ints
kron_pure = _pure.kron_ints
