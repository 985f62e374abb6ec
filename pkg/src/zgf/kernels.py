"""Kernel dispatch: the compiled extension when built, pure Python otherwise."""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built; the fallback is feature-complete
    _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py

BACKEND = "compiled" if _compiled is not None else "pure-python"

gi_pow_table = _impl.gi_pow_table
stream_eval = _impl.stream_eval
iffzt_window = _impl.iffzt_window


def backends() -> dict:
    """Name -> module for every available kernel implementation."""
    out = {"pure-python": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
