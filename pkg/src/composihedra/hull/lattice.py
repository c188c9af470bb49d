"""Geometric face lattices and graded-poset isomorphism."""
from __future__ import annotations

import sys
from collections import Counter

from ..polytope import HRep, VRep
from ..poset import FacePoset
from .linalg import affine_dimension, rank
from .vertices import upper_rows, vertex_tight_masks

__all__ = ["face_lattice_geometric", "facet_vertex_sets", "poset_isomorphic"]


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def facet_vertex_sets(h: HRep, v: VRep) -> list[int]:
    """Per hyperplane of ``h``, a bitmask of the vertices of ``v`` lying on it."""
    masks = vertex_tight_masks(h, v.points)
    out = []
    for j in range(len(h)):
        m = 0
        for i, vm in enumerate(masks):
            if vm >> j & 1:
                m |= 1 << i
        out.append(m)
    return out


def face_lattice_geometric(h: HRep, v: VRep) -> FacePoset:
    """All faces of the polytope, each labeled by its sorted vertex indices.

    Faces are the intersections of facet vertex sets, plus the empty face and
    the whole polytope; rank is the affine dimension.
    """
    if v.dim != h.dim:
        raise ValueError("H- and V-representation dimensions differ")
    for p in v.points:
        if not h.contains(p):
            raise ValueError(f"point {p} lies outside the H-representation")
    A, b, owner = upper_rows(h)
    masks = vertex_tight_masks(h, v.points)
    for p, m in zip(v.points, masks):
        tight_rows = [A[r] for r in range(len(A)) if m >> owner[r] & 1]
        if rank(tight_rows) != h.dim:
            raise ValueError(f"point {p} is not a vertex of the H-representation")
    everything = (1 << len(v)) - 1
    faces = {everything, 0}
    for fm in facet_vertex_sets(h, v):
        faces |= {fm & s for s in faces}
    faces = sorted(faces, key=lambda m: (bin(m).count("1"), m))
    labels = [tuple(_bits(m)) for m in faces]
    ranks = [affine_dimension([v.points[i] for i in lab]) for lab in labels]
    less = [(i, j) for i, a in enumerate(faces) for j, b in enumerate(faces)
            if i != j and a & b == a]
    return FacePoset.from_order(labels, less, rank=ranks)


# -- isomorphism --------------------------------------------------------------

def _colors(posets):
    """Shared colour refinement: rank and cover degrees, then neighbour colours."""
    cols = [[(P.rank[i], len(P.up(i)), len(P.down(i))) for i in range(len(P))] for P in posets]
    ncls = -1
    while True:
        table = {}
        new = []
        for P, c in zip(posets, cols):
            row = []
            for i in range(len(P)):
                sig = (c[i], tuple(sorted(c[j] for j in P.up(i))),
                       tuple(sorted(c[j] for j in P.down(i))))
                row.append(table.setdefault(sig, len(table)))
            new.append(row)
        cols = new
        if len(table) == ncls:
            return cols
        ncls = len(table)


def poset_isomorphic(a: FacePoset, b: FacePoset) -> dict | None:
    """A rank-preserving order isomorphism ``a -> b`` (by labels), or None."""
    if len(a) != len(b) or len(a.covers) != len(b.covers):
        return None
    if sorted(a.rank) != sorted(b.rank):
        return None
    ca, cb = _colors([a, b])
    if Counter(ca) != Counter(cb):
        return None
    by_color = {}
    for j, c in enumerate(cb):
        by_color.setdefault(c, set()).add(j)
    up_b = [set(b.up(j)) for j in range(len(b))]
    down_b = [set(b.down(j)) for j in range(len(b))]
    image = {}
    used = set()

    def candidates(x):
        cand = None
        for y in a.down(x):
            if y in image:
                s = up_b[image[y]]
                cand = s if cand is None else cand & s
        for y in a.up(x):
            if y in image:
                s = down_b[image[y]]
                cand = s if cand is None else cand & s
        if cand is None:
            cand = by_color[ca[x]]
        return {j for j in cand if cb[j] == ca[x] and j not in used}

    def solve():
        # most constrained element first; an empty candidate set fails early
        best, best_cand = None, None
        for x in range(len(a)):
            if x in image:
                continue
            cand = candidates(x)
            if best is None or len(cand) < len(best_cand):
                best, best_cand = x, cand
                if not cand:
                    return False
        if best is None:
            return True
        for j in sorted(best_cand):
            image[best] = j
            used.add(j)
            if solve():
                return True
            del image[best]
            used.discard(j)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(a) + 100))
    try:
        found = solve()
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    return {a.labels[i]: b.labels[image[i]] for i in range(len(a))}
