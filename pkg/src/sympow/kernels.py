"""Backend selection for the monomial kernels.

The compiled extension is used when it imports; otherwise the
pure-Python module is used. ``BACKEND`` names the active one and
:func:`set_backend` switches at runtime (benchmarks, fallback tests).
"""

from . import _kernels_py

try:
    from . import _kernels
except ImportError:  # extension not built
    _kernels = None

_NAMES = ("minimalize", "lcm_all", "mul_all", "divides_any", "all_divisible")

MAX_EXPONENT = _kernels_py.MAX_EXPONENT


def available_backends() -> tuple[str, ...]:
    return ("cython", "python") if _kernels is not None else ("python",)


def set_backend(name: str) -> None:
    """Route every kernel call through ``"cython"`` or ``"python"``."""
    global BACKEND
    if name == "cython" and _kernels is not None:
        impl = _kernels
    elif name == "python":
        impl = _kernels_py
    else:
        raise ValueError(f"backend {name!r} is not available; have {available_backends()}")
    for attr in _NAMES:
        globals()[attr] = getattr(impl, attr)
    BACKEND = name


set_backend(available_backends()[0])

__all__ = ["BACKEND", "MAX_EXPONENT", "available_backends", "set_backend", *_NAMES]
