"""JIT switch. Set ``FCBSC_DISABLE_NUMBA=1`` to run the pure-numpy paths."""
import os

_flag = os.environ.get("FCBSC_DISABLE_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and _flag not in ("1", "true", "yes", "on")


def njit(fn):
    """``numba.njit(cache=True)`` when available, else the function unchanged."""
    if numba is None:  # pragma: no cover
        return fn
    return numba.njit(cache=True)(fn)
