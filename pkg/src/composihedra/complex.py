"""Combinatorial face posets: composihedra, associahedra, multiplihedra.

Posets here are labeled by tree strings (see :mod:`composihedra.trees`).
Composihedron faces are domain classes, each named by its least refined
member.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .counting import facet_breakdown
from .poset import FacePoset, product_poset
from .trees import (
    LEAF, PaintedTree, _compositions, canonicalize_domain, coarsenings,
    enumerate_painted, graft, painted_corolla, shapes, sort_key,
    unpainted, unpainted_corolla,
)

__all__ = [
    "FacetTree", "upper_tree", "lower_tree", "facet_trees",
    "face_poset_composihedron", "face_poset_associahedron",
    "face_poset_multiplihedron", "quotient_to_composihedron",
    "facet_subposet", "facet_product", "product_poset",
]


def upper_tree(signature) -> PaintedTree:
    """u(t; r_1..r_t): painted t-corolla carrying painted corollas of sizes r_i."""
    signature = tuple(signature)
    if len(signature) < 2 or any(r < 1 for r in signature):
        raise ValueError(f"upper signature needs t >= 2 positive parts: {signature}")
    return graft(unpainted_corolla(len(signature)),
                 [painted_corolla(r) for r in signature])


def lower_tree(n: int, k: int) -> PaintedTree:
    """l(k,2): a paint-change corolla with leaves k-1 and k joined below it."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"lower index k={k} out of range for n={n}")
    kids = [LEAF] * (k - 1) + [unpainted(LEAF, LEAF)] + [LEAF] * (n - k - 1)
    return PaintedTree(kids, True)


@dataclass(frozen=True)
class FacetTree:
    """A facet of CK(n): ``upper`` with a signature or ``lower`` with an index."""

    n: int
    kind: str
    signature: tuple[int, ...] = ()
    k: int = 0

    def __post_init__(self):
        if self.kind == "upper":
            if sum(self.signature) != self.n or len(self.signature) < 2:
                raise ValueError(f"bad upper signature {self.signature} for n={self.n}")
        elif self.kind == "lower":
            if not 1 <= self.k <= self.n - 1:
                raise ValueError(f"bad lower index {self.k} for n={self.n}")
        else:
            raise ValueError(f"facet kind must be 'upper' or 'lower', got {self.kind!r}")

    @property
    def tree(self) -> PaintedTree:
        if self.kind == "upper":
            return upper_tree(self.signature)
        return lower_tree(self.n, self.k)

    @property
    def name(self) -> str:
        if self.kind == "upper":
            return f"u({len(self.signature)};{','.join(map(str, self.signature))})"
        return f"l({self.k},2)"

    def __str__(self):
        return self.name


def facet_trees(n: int) -> list[FacetTree]:
    """Upper facets (signatures in lexicographic order), then lower k = 1..n-1."""
    facet_breakdown(n)  # validates n >= 2
    out = [FacetTree(n, "upper", sig) for sig in _compositions(n, 2)]
    out += [FacetTree(n, "lower", k=k) for k in range(1, n)]
    return out


def _tree_poset(trees, rank_base=0):
    trees = sorted(trees, key=sort_key)
    pos = {t: i for i, t in enumerate(trees)}
    less = []
    for t in trees:
        for u in coarsenings(t):
            if u != t:
                less.append((pos[t], pos[u]))
    return FacePoset.from_order([str(t) for t in trees], less, rank_base=rank_base)


@lru_cache(maxsize=None)
def face_poset_multiplihedron(n: int) -> FacePoset:
    """All painted trees with ``n`` leaves under refinement; atoms have rank 0."""
    return _tree_poset(enumerate_painted(n))


@lru_cache(maxsize=None)
def face_poset_associahedron(n: int) -> FacePoset:
    """Unpainted planar trees with ``n`` leaves under refinement."""
    if n < 2:
        raise ValueError("K(n) needs n >= 2")
    return _tree_poset(shapes(n))


@lru_cache(maxsize=None)
def quotient_to_composihedron(n: int) -> dict[str, str]:
    """Send each face of J(n) to the domain class containing it."""
    return {str(t): str(canonicalize_domain(t)) for t in enumerate_painted(n)}


@lru_cache(maxsize=None)
def face_poset_composihedron(n: int) -> FacePoset:
    """Domain classes of painted trees, ordered by refinement of representatives.

    ``[t] <= [u]`` iff some member of ``[t]`` contracts to some member of
    ``[u]``.  Atoms (classes of binary trees) get rank 0 and the painted
    corolla rank n - 1.
    """
    trees = enumerate_painted(n)
    cls = {t: canonicalize_domain(t) for t in trees}
    classes = sorted(set(cls.values()), key=sort_key)
    pos = {c: i for i, c in enumerate(classes)}
    less = set()
    for t in trees:
        a = pos[cls[t]]
        for u in coarsenings(t):
            b = pos[cls[u]]
            if a != b:
                less.add((a, b))
    P = FacePoset.from_order([str(c) for c in classes], less)
    top = P.top
    if top is None or P.labels[top] != str(painted_corolla(n)) or P.rank[top] != n - 1:
        raise AssertionError(f"CK({n}) poset does not have the painted corolla at rank {n - 1}")
    return P


def _as_facet(n, f):
    if not isinstance(f, FacetTree) or f.n != n:
        raise ValueError(f"{f} is not a facet tree of CK({n})")
    return f


def facet_subposet(n: int, f: FacetTree) -> FacePoset:
    """Faces of CK(n) lying in the facet ``f``."""
    f = _as_facet(n, f)
    P = face_poset_composihedron(n)
    return P.ideal(P.index(str(canonicalize_domain(f.tree))))


def facet_product(n: int, f: FacetTree) -> FacePoset:
    """The product poset a facet should be: K(t) x CK(r_1) x ... x CK(r_t), or CK(n-1)."""
    f = _as_facet(n, f)
    if f.kind == "lower":
        return face_poset_composihedron(n - 1)
    factors = [face_poset_associahedron(len(f.signature))]
    factors += [face_poset_composihedron(r) for r in f.signature]
    return reduce(product_poset, factors)
