"""Vertex coordinates and facet hyperplanes for the convex hull realizations.

Every trivalent node of a binary tree, numbered 1..n-1 left to right (node i
catches a raindrop falling between leaves i-1 and i), contributes one
coordinate.  Paint-change nodes contribute none.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .complex import FacetTree, facet_trees
from .polytope import HRep, Hyperplane, VRep
from .trees import (
    PaintedTree, canonicalize_domain, enumerate_binary_painted, is_binary,
    is_painted_tree, is_shape, sort_key,
)

__all__ = [
    "Point", "Hyperplane", "HRep", "VRep",
    "unit_weights", "check_weights",
    "node_data", "loday_point", "painted_point", "range_quotient_point",
    "facet_hyperplane", "composihedron_hrep", "composihedron_vrep",
    "associahedron_vrep", "multiplihedron_vrep",
]

Point = tuple


def unit_weights(n: int) -> tuple[int, ...]:
    return (1,) * n


def check_weights(weights, n: int) -> tuple[int, ...]:
    if weights is None:
        return unit_weights(n)
    w = tuple(weights)
    if len(w) != n:
        raise ValueError(f"expected {n} weights, got {len(w)}")
    for x in w:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ValueError(f"weights must be positive integers, got {w}")
    return w


def node_data(t: PaintedTree, weights: Sequence[int] | None = None) -> list[tuple[int, int, bool]]:
    """``(L_i, R_i, painted_i)`` for trivalent nodes i = 1..n-1 of binary ``t``.

    ``L_i`` and ``R_i`` are the weight sums of the left and right subtrees.
    """
    if not is_binary(t):
        raise ValueError(f"tree is not binary: {t}")
    w = check_weights(weights, t.leaf_count)
    out = []
    pos = 0

    def walk(node):
        nonlocal pos
        if not node.children:
            pos += 1
            return w[pos - 1]
        if len(node.children) == 1:
            return walk(node.children[0])
        left = walk(node.children[0])
        slot = len(out)
        out.append(None)
        right = walk(node.children[1])
        out[slot] = (left, right, node.painted)
        return left + right

    walk(t)
    return out


def _check_q(q, lo_open=False, hi_open=False):
    q = Fraction(q)
    if q < 0 or q > 1 or (lo_open and q == 0) or (hi_open and q == 1):
        raise ValueError(f"q={q} out of range")
    return q


def loday_point(shape: PaintedTree) -> tuple[Fraction, ...]:
    """Loday's coordinates x_i = l_i * r_i for a binary unpainted tree."""
    if not (is_shape(shape) and is_binary(shape)) or shape.leaf_count < 2:
        raise ValueError(f"loday_point needs a binary shape with n >= 2: {shape}")
    return tuple(Fraction(l * r) for l, r, _ in node_data(shape))


def painted_point(t: PaintedTree, q=0, weights: Sequence[int] | None = None) -> tuple[Fraction, ...]:
    """x_i = q L_i R_i at unpainted nodes and L_i R_i at painted nodes."""
    if not (is_painted_tree(t) and is_binary(t)):
        raise ValueError(f"painted_point needs a binary painted tree: {t}")
    q = _check_q(q)
    return tuple(Fraction(l * r) if p else q * l * r for l, r, p in node_data(t, weights))


def range_quotient_point(t: PaintedTree, q) -> tuple[Fraction, ...]:
    """q l_i r_i at unpainted nodes, i(n - i) at painted node i."""
    if not (is_painted_tree(t) and is_binary(t)):
        raise ValueError(f"range_quotient_point needs a binary painted tree: {t}")
    q = _check_q(q, lo_open=True, hi_open=True)
    n = t.leaf_count
    return tuple(Fraction(i * (n - i)) if p else q * l * r
                 for i, (l, r, p) in enumerate(node_data(t), start=1))


def facet_hyperplane(f: FacetTree, weights: Sequence[int] | None = None) -> Hyperplane:
    """Lower: x_k >= 0.  Upper: sum of x at block boundaries <= sum_{i<j} R_i R_j."""
    n = f.n
    w = check_weights(weights, n)
    coeffs = [0] * (n - 1)
    if f.kind == "lower":
        coeffs[f.k - 1] = 1
        return Hyperplane(coeffs, 0, ">=", tag=f.name)
    blocks = []
    start = 0
    for r in f.signature:
        blocks.append(sum(w[start:start + r]))
        start += r
    boundary = 0
    for r in f.signature[:-1]:
        boundary += r
        coeffs[boundary - 1] = 1
    rhs = sum(a * b for a, b in combinations(blocks, 2))
    return Hyperplane(coeffs, rhs, "<=", tag=f.name)


def composihedron_hrep(n: int, weights: Sequence[int] | None = None) -> HRep:
    """One inequality per facet tree, in :func:`facet_trees` order."""
    if n < 2:
        raise ValueError("the H-representation needs n >= 2")
    w = check_weights(weights, n)
    return HRep(n - 1, tuple(facet_hyperplane(f, w) for f in facet_trees(n)))


def _dedup(points_and_trees, dim):
    seen = {}
    for p, label in points_and_trees:
        seen.setdefault(p, label)
    return VRep(dim, tuple(seen), tuple(seen.values()))


def composihedron_vrep(n: int, weights: Sequence[int] | None = None) -> VRep:
    """Points M_0^w(t) over binary painted trees, one per domain class.

    Points are listed in the canonical order of their class representatives.
    """
    w = check_weights(weights, n)
    by_class = {}
    for t in enumerate_binary_painted(n):
        c = canonicalize_domain(t)
        p = painted_point(t, 0, w)
        if by_class.setdefault(c, p) != p:
            raise AssertionError(f"class {c} maps to two points")
    ordered = sorted(by_class, key=sort_key)
    return _dedup(((by_class[c], str(c)) for c in ordered), n - 1)


def multiplihedron_vrep(n: int, q, weights: Sequence[int] | None = None) -> VRep:
    """Points M_q(t) for 0 < q < 1, one per binary painted tree."""
    q = _check_q(q, lo_open=True, hi_open=True)
    w = check_weights(weights, n)
    return _dedup(((painted_point(t, q, w), str(t)) for t in enumerate_binary_painted(n)), n - 1)


def associahedron_vrep(n: int) -> VRep:
    """Loday's realization of K(n) in R^(n-1)."""
    from .trees import binary_shapes
    return _dedup(((loday_point(s), str(s)) for s in binary_shapes(n)), n - 1)
