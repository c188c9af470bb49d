"""Painted planar trees.

A tree is a nested tuple of children together with a paint flag on the edge
below each node.  Leaf edges are never painted, the root edge of a painted
tree always is.  The node type is read off from the flags:

    unpainted  lower edge unpainted, >= 2 children, all child edges unpainted
    painted    lower edge painted,   >= 2 children, all child edges painted
    change     lower edge painted,   >= 1 children, all child edges unpainted

Anything else (mixed child edges, painted child over an unpainted edge, ...)
is representable but invalid; :func:`is_painted_tree` and :func:`is_shape`
are the validity checks.

Trees print as strings: ``x`` is a leaf, ``(..)`` an unpainted node, ``[..]``
a painted node and ``f(..)`` a paint-change node.  For instance the 4-leaf
tree for f(ab)(f(c)f(d)) in its binary form is ``[f((xx))[f(x)f(x)]]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

__all__ = [
    "PaintedTree", "WeightedTree", "LEAF",
    "leaf", "unpainted", "painted", "change",
    "is_painted_tree", "is_shape", "is_binary",
    "parse", "sort_key",
    "binary_shapes", "shapes", "enumerate_binary_painted", "enumerate_painted",
    "internal_edges", "contract", "coarsenings", "refines",
    "canonicalize_domain", "domain_equivalent",
    "weighted_form", "from_weighted", "weighted_trees",
    "paint_entirely", "forget_paint", "graft", "compose_shapes",
    "painted_corolla", "unpainted_corolla",
]


class PaintedTree:
    """Immutable planar tree node with a paint flag on its lower edge.

    Equality and hashing go through the string form, which is computed once
    at construction.
    """

    __slots__ = ("children", "painted", "leaf_count", "_key")

    def __init__(self, children: Iterable[PaintedTree] = (), painted: bool = False):
        children = tuple(children)
        painted = bool(painted)
        if not children and painted:
            raise ValueError("leaf edges cannot be painted")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "painted", painted)
        object.__setattr__(self, "leaf_count",
                           sum(c.leaf_count for c in children) if children else 1)
        object.__setattr__(self, "_key", _render(children, painted))

    def __setattr__(self, name, value):
        raise AttributeError("PaintedTree is immutable")

    def __reduce__(self):
        return (PaintedTree, (self.children, self.painted))

    def __eq__(self, other):
        if not isinstance(other, PaintedTree):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __str__(self):
        return self._key

    def __repr__(self):
        return f"PaintedTree({self._key!r})"

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def kind(self) -> str:
        """One of 'leaf', 'unpainted', 'painted', 'change' or 'invalid'."""
        if not self.children:
            return "leaf"
        flags = {c.painted for c in self.children}
        if not self.painted:
            if flags == {False} and len(self.children) >= 2:
                return "unpainted"
            return "invalid"
        if flags == {False}:
            return "change"
        if flags == {True} and len(self.children) >= 2:
            return "painted"
        return "invalid"

    def nodes(self) -> Iterator[tuple[tuple[int, ...], PaintedTree]]:
        """Yield ``(path, node)`` in preorder; the root has path ``()``."""
        stack = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((path + (i,), node.children[i]))

    def subtree(self, path: Sequence[int]) -> PaintedTree:
        node = self
        for i in path:
            node = node.children[i]
        return node


def _render(children, painted):
    if not children:
        return "x"
    inner = "".join(c._key for c in children)
    if not painted:
        return "(" + inner + ")"
    if all(not c.painted for c in children):
        return "f(" + inner + ")"
    return "[" + inner + "]"


# Painted material sorts first so that fully painted trees (the Loday
# vertices) lead any sorted listing.
_ORDER = str.maketrans({"[": "0", "]": "1", "f": "2", "(": "3", ")": "4", "x": "5"})


def sort_key(t: PaintedTree) -> str:
    """Canonical linear order: lexicographic on the string form."""
    return t._key.translate(_ORDER)


LEAF = PaintedTree()


def leaf() -> PaintedTree:
    return LEAF


def unpainted(*children: PaintedTree) -> PaintedTree:
    return PaintedTree(children, False)


def painted(*children: PaintedTree) -> PaintedTree:
    return PaintedTree(children, True)


def change(*children: PaintedTree) -> PaintedTree:
    return PaintedTree(children, True)


def painted_corolla(n: int) -> PaintedTree:
    """The one-node painted tree with ``n`` unpainted leaves."""
    if n < 1:
        raise ValueError("a corolla needs at least one leaf")
    return PaintedTree((LEAF,) * n, True)


def unpainted_corolla(n: int) -> PaintedTree:
    if n < 1:
        raise ValueError("a corolla needs at least one leaf")
    if n == 1:
        return LEAF
    return PaintedTree((LEAF,) * n, False)


def parse(text: str) -> PaintedTree:
    """Inverse of ``str(tree)``.  Whitespace is ignored."""
    s = "".join(text.split())
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"unexpected end of tree string {text!r}")
        ch = s[pos]
        if ch == "x":
            pos += 1
            return LEAF
        if ch == "f":
            if s[pos:pos + 2] != "f(":
                raise ValueError(f"expected 'f(' at {pos} in {text!r}")
            pos += 2
            kids = group(")")
            if any(k.painted for k in kids):
                raise ValueError(f"painted child under paint-change node in {text!r}")
            return PaintedTree(kids, True)
        if ch in "([":
            close = ")" if ch == "(" else "]"
            pos += 1
            kids = group(close)
            if ch == "[" and kids and all(not k.painted for k in kids):
                raise ValueError(f"'[..]' with only unpainted children in {text!r}; use 'f(..)'")
            return PaintedTree(kids, ch == "[")
        raise ValueError(f"unexpected {ch!r} at {pos} in {text!r}")

    def group(close):
        nonlocal pos
        kids = []
        while pos < len(s) and s[pos] != close:
            kids.append(node())
        if pos >= len(s):
            raise ValueError(f"missing {close!r} in {text!r}")
        pos += 1
        if not kids:
            raise ValueError(f"empty node in {text!r}")
        return tuple(kids)

    t = node()
    if pos != len(s):
        raise ValueError(f"trailing characters in {text!r}")
    return t


# -- validity ---------------------------------------------------------------

def _valid_below(t: PaintedTree) -> bool:
    for _, node in t.nodes():
        if node.kind == "invalid":
            return False
    return True


def is_painted_tree(t: PaintedTree) -> bool:
    """True iff every node is legal and the root edge is painted."""
    return t.painted and _valid_below(t)


def is_shape(t: PaintedTree) -> bool:
    """True iff ``t`` is an unpainted planar tree with all nodes of valence >= 3."""
    return not t.painted and _valid_below(t)


def is_binary(t: PaintedTree) -> bool:
    """Branching nodes have two children and paint-change nodes one."""
    for _, node in t.nodes():
        k = node.kind
        if k in ("unpainted", "painted") and len(node.children) != 2:
            return False
        if k == "change" and len(node.children) != 1:
            return False
    return True


# -- enumeration ------------------------------------------------------------

def _require_n(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"leaf count must be a positive integer, got {n!r}")


def _compositions(n: int, min_parts: int = 1) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` in lexicographic order."""
    if n == 0:
        if min_parts <= 0:
            yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first, min_parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _binary_unpainted(n):
    if n == 1:
        return (LEAF,)
    out = []
    for i in range(1, n):
        for a in _binary_unpainted(i):
            for b in _binary_unpainted(n - i):
                out.append(PaintedTree((a, b), False))
    return tuple(out)


@lru_cache(maxsize=None)
def _binary_painted(n):
    out = [PaintedTree((u,), True) for u in _binary_unpainted(n)]
    for i in range(1, n):
        for a in _binary_painted(i):
            for b in _binary_painted(n - i):
                out.append(PaintedTree((a, b), True))
    return tuple(out)


@lru_cache(maxsize=None)
def _any_unpainted(n):
    if n == 1:
        return (LEAF,)
    out = []
    for comp in _compositions(n, 2):
        for kids in product(*(_any_unpainted(k) for k in comp)):
            out.append(PaintedTree(kids, False))
    return tuple(out)


@lru_cache(maxsize=None)
def _any_painted(n):
    out = []
    for comp in _compositions(n, 1):
        for kids in product(*(_any_unpainted(k) for k in comp)):
            out.append(PaintedTree(kids, True))
    for comp in _compositions(n, 2):
        for kids in product(*(_any_painted(k) for k in comp)):
            out.append(PaintedTree(kids, True))
    return tuple(out)


def binary_shapes(n: int) -> list[PaintedTree]:
    """All unpainted binary trees with ``n`` leaves (Catalan many)."""
    _require_n(n)
    return sorted(_binary_unpainted(n), key=sort_key)


def shapes(n: int) -> list[PaintedTree]:
    """All unpainted planar trees with ``n`` leaves, nodes of valence >= 3."""
    _require_n(n)
    return sorted(_any_unpainted(n), key=sort_key)


def enumerate_binary_painted(n: int) -> list[PaintedTree]:
    """Every binary painted tree with ``n`` leaves, once, in canonical order."""
    _require_n(n)
    return sorted(_binary_painted(n), key=sort_key)


def enumerate_painted(n: int) -> list[PaintedTree]:
    """Every painted tree with ``n`` leaves (the faces of the multiplihedron)."""
    _require_n(n)
    return sorted(_any_painted(n), key=sort_key)


# -- contraction and refinement -----------------------------------------------

def internal_edges(t: PaintedTree) -> list[tuple[int, ...]]:
    """Internal edges, each named by the path to its upper endpoint."""
    return [p for p, node in t.nodes() if p and node.children]


def _contract(node, path, cut):
    if not node.children:
        return node
    kids = []
    for i, c in enumerate(node.children):
        p = path + (i,)
        c2 = _contract(c, p, cut)
        if p in cut:
            kids.extend(c2.children)
        else:
            kids.append(c2)
    return PaintedTree(kids, node.painted)


def contract(t: PaintedTree, edges: Iterable[Sequence[int]]) -> PaintedTree | None:
    """Collapse the given internal edges simultaneously.

    Returns ``None`` when the result has an illegal node.  Naming an edge that
    is not an internal edge of ``t`` raises ``ValueError``.
    """
    cut = {tuple(e) for e in edges}
    if not cut:
        return t
    legal = set(internal_edges(t))
    bad = cut - legal
    if bad:
        raise ValueError(f"not internal edges of {t}: {sorted(bad)}")
    out = _contract(t, (), cut)
    ok = is_painted_tree(out) if t.painted else is_shape(out)
    return out if ok else None


@lru_cache(maxsize=65536)
def _coarsenings(t):
    edges = internal_edges(t)
    found = {t}
    for r in range(1, len(edges) + 1):
        for cut in combinations(edges, r):
            u = contract(t, cut)
            if u is not None:
                found.add(u)
    return frozenset(found)


def coarsenings(t: PaintedTree) -> frozenset[PaintedTree]:
    """All trees ``u`` with ``t`` refining ``u`` (``t`` itself included)."""
    return _coarsenings(t)


def refines(t: PaintedTree, u: PaintedTree) -> bool:
    """Reflexive refinement order: ``u`` is a valid contraction of ``t``."""
    if t.leaf_count != u.leaf_count:
        raise ValueError(f"leaf counts differ: {t.leaf_count} vs {u.leaf_count}")
    if t == u:
        return True
    return u in _coarsenings(t)


# -- domain equivalence -------------------------------------------------------

def canonicalize_domain(t: PaintedTree) -> PaintedTree:
    """Least refined member of the domain class of ``t``.

    Collapses every edge joining two unpainted branching nodes, so each
    unpainted subtree becomes a corolla.
    """
    if not t.children:
        return t
    kids = []
    for c in t.children:
        c = canonicalize_domain(c)
        if not t.painted and not c.painted and c.children:
            kids.extend(c.children)
        else:
            kids.append(c)
    return PaintedTree(kids, t.painted)


def domain_equivalent(t: PaintedTree, u: PaintedTree) -> bool:
    return canonicalize_domain(t) == canonicalize_domain(u)


# -- weighted trees -----------------------------------------------------------

@dataclass(frozen=True)
class WeightedTree:
    """Binary unpainted shape with a positive integer weight on each leaf."""

    shape: PaintedTree
    weights: tuple[int, ...]

    def __post_init__(self):
        if not (is_shape(self.shape) and is_binary(self.shape)):
            raise ValueError(f"weighted tree shape must be binary and unpainted: {self.shape}")
        if len(self.weights) != self.shape.leaf_count:
            raise ValueError("one weight per leaf required")
        if any(not isinstance(w, int) or w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive integers: {self.weights}")

    @property
    def total(self) -> int:
        return sum(self.weights)


def weighted_form(t: PaintedTree) -> WeightedTree:
    """Painted part of the domain class of binary ``t`` with corolla sizes as weights."""
    if not (is_painted_tree(t) and is_binary(t)):
        raise ValueError(f"weighted_form needs a binary painted tree, got {t}")
    weights = []

    def strip(node):
        if node.kind == "change":
            weights.append(node.leaf_count)
            return LEAF
        return PaintedTree([strip(c) for c in node.children], False)

    shape = strip(canonicalize_domain(t))
    return WeightedTree(shape, tuple(weights))


def _left_comb(n):
    t = LEAF
    for _ in range(n - 1):
        t = PaintedTree((t, LEAF), False)
    return t


def from_weighted(w: WeightedTree) -> PaintedTree:
    """A binary painted tree whose weighted form is ``w``.

    The unpainted part over a leaf of weight k is the left comb on k leaves.
    """
    it = iter(w.weights)

    def build(node):
        if not node.children:
            return PaintedTree((_left_comb(next(it)),), True)
        return PaintedTree([build(c) for c in node.children], True)

    return build(w.shape)


def weighted_trees(total: int) -> list[WeightedTree]:
    """All binary weighted trees of the given total weight."""
    _require_n(total)
    out = []
    for leaves in range(1, total + 1):
        for comp in _compositions(total, leaves):
            if len(comp) != leaves:
                continue
            for s in binary_shapes(leaves):
                out.append(WeightedTree(s, comp))
    return out


# -- grafting -------------------------------------------------------------------

def paint_entirely(shape: PaintedTree) -> PaintedTree:
    if not shape.children:
        return shape
    return PaintedTree([paint_entirely(c) for c in shape.children], True)


def graft(base: PaintedTree, crowns: Sequence[PaintedTree]) -> PaintedTree:
    """Paint ``base`` entirely and attach ``crowns[i]`` at its leaf ``i``."""
    if not is_shape(base) and base != LEAF:
        raise ValueError(f"graft base must be an unpainted shape, got {base}")
    crowns = list(crowns)
    if len(crowns) != base.leaf_count:
        raise ValueError(f"base has {base.leaf_count} leaves but {len(crowns)} crowns given")
    for c in crowns:
        if not is_painted_tree(c):
            raise ValueError(f"crown is not a painted tree: {c}")
    it = iter(crowns)

    def build(node):
        if not node.children:
            return next(it)
        return PaintedTree([build(c) for c in node.children], True)

    return build(base)


def compose_shapes(base: PaintedTree, parts: Sequence[PaintedTree]) -> PaintedTree:
    """Operad composition of unpainted shapes: ``parts[i]`` replaces leaf ``i``."""
    parts = list(parts)
    if len(parts) != base.leaf_count:
        raise ValueError("one part per leaf of base required")
    it = iter(parts)

    def build(node):
        if not node.children:
            return next(it)
        return PaintedTree([build(c) for c in node.children], False)

    return build(base)


def forget_paint(t: PaintedTree) -> PaintedTree:
    """Underlying unpainted shape: clear every flag and drop bivalent nodes."""
    while len(t.children) == 1:
        t = t.children[0]
    if not t.children:
        return LEAF
    return PaintedTree([forget_paint(c) for c in t.children], False)
