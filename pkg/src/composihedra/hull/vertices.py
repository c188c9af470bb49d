"""Vertex enumeration from an H-representation by brute-force basis search."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..polytope import HRep, VRep
from . import _backend
from .linalg import integer_rows, rank

__all__ = [
    "EmptyPolytopeError", "UnboundedPolytopeError", "InfeasiblePointError",
    "upper_rows", "enumerate_vertices", "tight_set", "vertex_tight_masks",
]


class EmptyPolytopeError(ValueError):
    """The inequalities have no common solution."""


class UnboundedPolytopeError(ValueError):
    """The inequalities admit a recession direction."""


class InfeasiblePointError(ValueError):
    """A point violates some inequality."""


def upper_rows(h: HRep) -> tuple[list[list[int]], list[int], list[int]]:
    """Integer rows ``A x <= b`` and, per row, the index of its hyperplane."""
    rows, owner = [], []
    for i, hp in enumerate(h.hyperplanes):
        for r in hp.as_upper():
            rows.append(r)
            owner.append(i)
    A, b = integer_rows(rows)
    return A, b, owner


def _feasible_with_lineality(A, b, d):
    # restrict to a set of independent columns; the rest are set to zero
    cols = []
    for j in range(d):
        if rank([[row[c] for c in cols + [j]] for row in A]) > len(cols):
            cols.append(j)
    if not cols:
        return all(v >= 0 for v in b)
    sub = [[row[c] for c in cols] for row in A]
    return bool(_backend.basic_solutions(sub, b, len(cols)))


def enumerate_vertices(h: HRep) -> VRep:
    """Vertices of the polytope ``h``, sorted by coordinates.

    Raises :class:`EmptyPolytopeError` or :class:`UnboundedPolytopeError`.
    """
    d = h.dim
    if d < 1:
        raise ValueError("vertex enumeration needs dimension >= 1")
    if len(h) == 0:
        raise UnboundedPolytopeError("no inequalities")
    A, b, _ = upper_rows(h)
    if rank(A) < d:
        if _feasible_with_lineality(A, b, d):
            raise UnboundedPolytopeError("the polyhedron contains a line")
        raise EmptyPolytopeError("no point satisfies all inequalities")
    sols = _backend.basic_solutions(A, b, d)
    if not sols:
        raise EmptyPolytopeError("no point satisfies all inequalities")
    if _backend.has_recession_ray(A, d):
        raise UnboundedPolytopeError("the polyhedron has a recession ray")
    pts = sorted(tuple(Fraction(x, den) for x in nums) for nums, den in sols)
    return VRep(d, tuple(pts))


def _as_solution(p):
    p = [Fraction(x) for x in p]
    den = 1
    for x in p:
        den = den * x.denominator // gcd(den, x.denominator)
    return tuple(int(x * den) for x in p), den


def vertex_tight_masks(h: HRep, points) -> list[int]:
    """For each point, a bitmask over hyperplanes of ``h`` holding with equality."""
    A, b, owner = upper_rows(h)
    row_masks = _backend.tight_masks(A, b, [_as_solution(p) for p in points])
    out = []
    for rm in row_masks:
        m = 0
        r = 0
        while rm:
            if rm & 1:
                m |= 1 << owner[r]
            rm >>= 1
            r += 1
        out.append(m)
    return out


def tight_set(p, h: HRep) -> frozenset[int]:
    """Indices of hyperplanes of ``h`` on which ``p`` lies.

    Raises :class:`InfeasiblePointError` if ``p`` violates ``h``.
    """
    bad = [i for i, hp in enumerate(h.hyperplanes) if not hp.satisfied(p)]
    if bad:
        raise InfeasiblePointError(f"point {tuple(map(str, p))} violates hyperplanes {bad}")
    return frozenset(i for i, hp in enumerate(h.hyperplanes) if hp.tight(p))
