"""Fourier-Motzkin elimination over the rationals.

Used as an independent extremality oracle: ``p`` is a vertex of
``conv(P)`` iff some linear functional separates it strictly from every
other point, which after scaling is feasibility of ``c . (p - v) >= 1``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = ["feasible", "is_extreme", "extreme_points"]


def _normalize(a, b):
    # scale so the row is primitive; keeps the dedup effective
    nums = [x for x in list(a) + [b] if x]
    if not nums:
        return tuple(a), b
    den = 1
    for x in list(a) + [b]:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in a] + [int(b * den)]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    return tuple(Fraction(x, g) for x in ints[:-1]), Fraction(ints[-1], g)


def feasible(rows: Iterable[tuple[Sequence, object]]) -> bool:
    """Is ``{x : a . x <= b for (a, b) in rows}`` nonempty?"""
    system = {_normalize([Fraction(x) for x in a], Fraction(b)) for a, b in rows}
    if not system:
        return True
    d = len(next(iter(system))[0])
    for col in range(d):
        pos, neg, rest = [], [], set()
        for a, b in system:
            if a[col] > 0:
                pos.append((a, b))
            elif a[col] < 0:
                neg.append((a, b))
            else:
                rest.add((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                sp, sn = ap[col], -an[col]
                a = tuple(sn * x + sp * y for x, y in zip(ap, an))
                rest.add(_normalize(a, sn * bp + sp * bn))
        system = rest
        for a, b in system:
            if not any(a) and b < 0:
                return False
    return all(b >= 0 for a, b in system if not any(a))


def is_extreme(p: Sequence, others: Iterable[Sequence]) -> bool:
    """True iff ``p`` is not in the convex hull of ``others``."""
    p = [Fraction(x) for x in p]
    rows = []
    for v in others:
        diff = [Fraction(x) - y for x, y in zip(v, p)]
        if not any(diff):
            return False
        # c . (p - v) >= 1  <=>  c . (v - p) <= -1
        rows.append((diff, Fraction(-1)))
    return feasible(rows)


def extreme_points(points: Sequence[Sequence]) -> list[int]:
    """Indices of the points that are vertices of their convex hull."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    out = []
    for i, p in enumerate(pts):
        if pts.index(p) != i:
            continue
        others = [q for q in pts if q != p]
        if is_extreme(p, others):
            out.append(i)
    return out
