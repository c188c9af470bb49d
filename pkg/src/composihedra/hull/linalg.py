"""Exact rational linear algebra at desk scale."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = ["rank", "affine_dimension", "integer_rows"]


def _echelon(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, len(M)):
            f = M[i][c] / piv
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(_echelon(rows))


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return rank([[a - b for a, b in zip(p, base)] for p in pts[1:]])


def integer_rows(rows) -> tuple[list[list[int]], list[int]]:
    """Scale rational rows ``(a, b)`` of ``a . x <= b`` to integers, row by row."""
    A, B = [], []
    for a, b in rows:
        vals = [Fraction(x) for x in a] + [Fraction(b)]
        m = lcm(*(v.denominator for v in vals))
        ints = [int(v * m) for v in vals]
        A.append(ints[:-1])
        B.append(ints[-1])
    return A, B
