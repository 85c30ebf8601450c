"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_pycore`` kernels are used. Setting ``MOEAD_DYTS_BACKEND=python``
forces the fallback.
"""
import os

from . import _pycore

kernels = _pycore
BACKEND = "python"

if os.environ.get("MOEAD_DYTS_BACKEND", "").lower() not in ("python", "py", "pure"):
    try:
        from . import _core
    except ImportError:  # extension not built
        pass
    else:
        kernels = _core
        BACKEND = "cython"

NATIVE_RNG = kernels.Xoshiro256


def is_native(rng):
    """True when ``rng`` can be handed to the selected kernels."""
    return type(rng) is NATIVE_RNG
