"""Vertex and facet counts for the composihedra, in exact integers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "catalan", "vertex_count", "vertex_count_closed_form", "vertex_sequence",
    "FacetBreakdown", "facet_breakdown", "facet_identity",
    "generating_function_rhs",
]


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan index must be >= 0")
    return comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _a(n):
    # a_0 = 0 seeds the recursion
    if n <= 0:
        return 0
    return 1 + sum(_a(i) * _a(n - i) for i in range(1, n))


def vertex_count_closed_form(n: int) -> int:
    """Binary transform of the Catalan numbers, shifted so index n gives a_n."""
    if n <= 0:
        return 0
    m = n - 1
    return sum(comb(m, k) * catalan(k) for k in range(m + 1))


def vertex_count(n: int) -> int:
    """Number of vertices a_n of the n-th composihedron (a_0 = 0)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    a = _a(n)
    assert a == vertex_count_closed_form(n), n
    return a


def vertex_sequence(upto: int) -> list[int]:
    """``[a_0, a_1, ..., a_upto]``."""
    return [vertex_count(n) for n in range(upto + 1)]


def generating_function_rhs(degree: int) -> list[int]:
    """Coefficients of x/(1-x) + A(x)^2 through ``degree``.

    ``A`` is built from the recursion; the caller compares against it.
    """
    a = vertex_sequence(degree)
    out = []
    for d in range(degree + 1):
        geometric = 1 if d >= 1 else 0
        square = sum(a[i] * a[d - i] for i in range(d + 1))
        out.append(geometric + square)
    return out


@dataclass(frozen=True)
class FacetBreakdown:
    n: int
    upper_count: int
    lower_count: int

    @property
    def total(self) -> int:
        return self.upper_count + self.lower_count


def facet_breakdown(n: int) -> FacetBreakdown:
    """2^(n-1) - 1 upper facets and n - 1 lower facets."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"facets exist only for n >= 2, got {n!r}")
    return FacetBreakdown(n, 2 ** (n - 1) - 1, n - 1)


def facet_identity(n: int) -> tuple[int, int]:
    """Facets of CK(n+1) plus K(n+2) minus J(n+1), against those of the n-cube."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    composihedron = 2 ** n + n - 1
    associahedron = (n + 1) * (n + 2) // 2 - 1
    multiplihedron = n * (n + 1) // 2 + 2 ** n - 1
    lhs = composihedron + associahedron - multiplihedron
    rhs = 2 * n
    assert lhs == rhs, (n, lhs, rhs)
    return lhs, rhs
