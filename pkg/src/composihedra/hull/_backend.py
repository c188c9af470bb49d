"""Pick the compiled kernels when available, else the pure-Python ones.

The compiled path runs only when a Hadamard bound shows every minor and
every feasibility product fits comfortably in 128 bits; otherwise the call
drops to Python integers, so results never depend on the backend.
"""
from __future__ import annotations

from contextlib import contextmanager
from math import isqrt

from . import _pycore

try:
    from . import _core as _compiled
except ImportError:  # extension not built
    _compiled = None

__all__ = [
    "available", "active", "use", "forced",
    "basic_solutions", "tight_masks", "has_recession_ray", "det",
]

_active = "cython" if _compiled is not None else "python"


def available() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def active() -> str:
    return _active


def use(name: str) -> None:
    """Select ``'python'`` or ``'cython'`` for subsequent calls."""
    global _active
    if name not in available():
        raise ValueError(f"backend {name!r} not available; have {available()}")
    _active = name


@contextmanager
def forced(name: str):
    prev = _active
    use(name)
    try:
        yield
    finally:
        use(prev)


def _fits(A, b, d) -> bool:
    M = 1
    for row in A:
        for v in row:
            M = max(M, abs(v))
    for v in b:
        M = max(M, abs(v))
    bound = (isqrt(d * M * M) + 1) ** max(d, 1)
    limit = 1 << 124
    return bound < (1 << 62) and 2 * bound * bound < limit and (d + 1) * M * bound < limit


def basic_solutions(A, b, d):
    if _active == "cython" and _fits(A, b, d):
        return _compiled.basic_solutions(A, b, d)
    return _pycore.basic_solutions(A, b, d)


def tight_masks(A, b, solutions):
    if _active == "cython" and solutions:
        d = len(A[0]) if A else 0
        M = max([abs(x) for nums, den in solutions for x in nums] + [den for _, den in solutions] + [1])
        if d and _fits(A, b, d) and M < (1 << 62):
            return _compiled.tight_masks(A, b, solutions)
    return _pycore.tight_masks(A, b, solutions)


def det(M):
    if _active == "cython" and M and _fits(M, [], len(M)):
        return _compiled.det(M)
    return _pycore.det(M)


def has_recession_ray(A, d):
    if _active == "cython" and _fits(A, [], d):
        return _compiled.has_recession_ray(A, d)
    return _pycore.has_recession_ray(A, d)
