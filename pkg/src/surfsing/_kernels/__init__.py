"""Hot integer kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it was built; set ``SURFSING_PURE=1``
to force the Python implementation. Compiled calls that overflow 64-bit
arithmetic are transparently retried on Python integers.
"""

import os

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None

_IMPLS = {"python": _pure}
if _fast is not None:
    _IMPLS["cython"] = _fast

BACKEND = "cython" if _fast is not None and not os.environ.get("SURFSING_PURE") else "python"


def available_backends():
    return sorted(_IMPLS)


def set_backend(name):
    """Switch the active backend; returns the previous one."""
    global BACKEND
    if name not in _IMPLS:
        raise ValueError(f"unknown or unavailable backend {name!r}")
    old, BACKEND = BACKEND, name
    return old


def _call(fname, *args):
    impl = _IMPLS[BACKEND]
    if impl is _pure:
        return getattr(_pure, fname)(*args)
    try:
        return getattr(impl, fname)(*args)
    except OverflowError:
        return getattr(_pure, fname)(*args)


def leading_minors(M):
    return _call("leading_minors", M)


def solve(M, b):
    return _call("solve", M, b)


def laufer(M):
    return _call("laufer", M)


def qform(M, v):
    return _call("qform", M, v)


def invariants(M, rhs):
    return _call("invariants", M, rhs)


def analyze(M, rhs):
    return _call("analyze", M, rhs)


def analyze_weighted(weights, edges):
    return _call("analyze_weighted", weights, edges)
