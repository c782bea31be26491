"""Kernel backend selection: compiled Cython extension with numpy fallback.

The backend is chosen at import time. Set EIGENTRACE_BACKEND=pure (or
=compiled) to force one; ``set_backend`` switches at runtime, which the
benchmark uses to compare both.
"""
import os

from . import _pykern

_FORCED = os.environ.get("EIGENTRACE_BACKEND")

_compiled = None
if _FORCED != "pure":
    try:
        from . import _cykern as _compiled
    except ImportError:
        _compiled = None
        if _FORCED == "compiled":
            raise ImportError(
                "EIGENTRACE_BACKEND=compiled but the extension is not built; "
                "reinstall without EIGENTRACE_PURE_BUILD=1"
            )

_active = _compiled if _compiled is not None else _pykern


def active_backend():
    return _active.BACKEND_NAME


def available_backends():
    names = ["pure"]
    if _compiled is not None:
        names.insert(0, "compiled")
    return names


def set_backend(name):
    """Switch kernels at runtime ('compiled' or 'pure')."""
    global _active
    if name == "pure":
        _active = _pykern
    elif name == "compiled":
        if _compiled is None:
            raise ValueError("compiled backend not available")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")


def bessel_j_scalar(k, x):
    return _active.bessel_j_scalar(k, x)


def bessel_j_batch(k, xs):
    return _active.bessel_j_batch(k, xs)
