"""Monte Carlo kernel backends.

Two interchangeable implementations of the counter-based random number
generator and the sampling loops built on it: a compiled extension
(``_core``, Cython) and a vectorized pure-Python fallback (``fallback``,
numpy).  The compiled backend is used when importable; the environment
variable ``QTMS_RADAR_BACKEND`` forces the choice (``auto``, ``compiled``
or ``python``).

Both backends produce bit-identical integer streams.  Floating-point
outputs (normal deviates, exceedance counts) are deterministic within a
backend for a given seed, and agree across backends to rounding in the
last few ulps; they are not guaranteed bit-identical across backends
because the two use different transcendental implementations.
"""

from __future__ import annotations

import os
from types import ModuleType

_ENV_VAR = "QTMS_RADAR_BACKEND"
_CHOICES = ("auto", "compiled", "python")


def _load_compiled() -> ModuleType:
    from . import _core  # type: ignore[attr-defined]

    return _core


def _load_python() -> ModuleType:
    from . import fallback

    return fallback


def get_backend(name: str) -> ModuleType:
    """Load one backend by name ("compiled" or "python")."""
    if name == "compiled":
        try:
            return _load_compiled()
        except ImportError as exc:
            raise RuntimeError(
                "the compiled kernel backend is not available; build the extension "
                "(pip install -e . --no-build-isolation) or use the python backend"
            ) from exc
    if name == "python":
        return _load_python()
    raise ValueError(f"unknown backend {name!r}; choose compiled or python")


def available_backends() -> tuple[str, ...]:
    names = []
    try:
        _load_compiled()
        names.append("compiled")
    except ImportError:
        pass
    names.append("python")
    return tuple(names)


def _select() -> ModuleType:
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if choice not in _CHOICES:
        raise RuntimeError(
            f"{_ENV_VAR} must be one of {', '.join(_CHOICES)}, got {choice!r}"
        )
    if choice == "python":
        return _load_python()
    if choice == "compiled":
        return get_backend("compiled")
    try:
        return _load_compiled()
    except ImportError:
        return _load_python()


_impl = _select()

backend_name = _impl.backend_name
u64_stream = _impl.u64_stream
normal_pairs = _impl.normal_pairs
exceed_count = _impl.exceed_count

__all__ = [
    "available_backends",
    "backend_name",
    "exceed_count",
    "get_backend",
    "normal_pairs",
    "u64_stream",
]
