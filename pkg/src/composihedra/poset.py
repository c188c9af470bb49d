"""Finite graded posets with labeled elements."""
from __future__ import annotations

from collections import Counter
from typing import Hashable, Iterable, Sequence

__all__ = ["FacePoset", "product_poset"]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FacePoset:
    """A finite poset stored as its covering relation plus a rank per element.

    ``below[i]`` is a bitmask of the elements strictly below ``i``.  Elements
    are addressed by index; ``labels`` carries whatever names them (trees,
    vertex sets, tuples for products).
    """

    def __init__(self, labels: Sequence[Hashable], covers: Iterable[tuple[int, int]],
                 rank: Sequence[int] | None = None, rank_base: int = 0):
        self.labels = tuple(labels)
        n = len(self.labels)
        self.covers = frozenset((int(a), int(b)) for a, b in covers)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            raise ValueError("poset labels must be distinct")
        self._up = [[] for _ in range(n)]
        self._down = [[] for _ in range(n)]
        for a, b in self.covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad cover pair {(a, b)}")
            self._up[a].append(b)
            self._down[b].append(a)
        for lst in self._up + self._down:
            lst.sort()
        order = self._topological_order()
        below = [0] * n
        for i in order:
            m = 0
            for a in self._down[i]:
                m |= below[a] | (1 << a)
            below[i] = m
        self.below = below
        if rank is None:
            longest = [0] * n
            for i in order:
                longest[i] = max((longest[a] + 1 for a in self._down[i]), default=0)
            rank = [rank_base + r for r in longest]
        self.rank = tuple(rank)
        if len(self.rank) != n:
            raise ValueError("one rank per element required")
        for a, b in self.covers:
            if self.rank[a] >= self.rank[b]:
                raise ValueError(f"rank does not increase along cover {a} < {b}")

    @classmethod
    def from_order(cls, labels: Sequence[Hashable], less: Iterable[tuple[int, int]],
                   rank: Sequence[int] | None = None, rank_base: int = 0) -> FacePoset:
        """Build from any relation whose transitive closure is the strict order."""
        labels = tuple(labels)
        n = len(labels)
        up = [0] * n
        for a, b in less:
            if a != b:
                up[a] |= 1 << b
        # transitive closure by repeated propagation
        changed = True
        while changed:
            changed = False
            for i in range(n):
                m = up[i]
                acc = m
                for j in _bits(m):
                    acc |= up[j]
                if acc != m:
                    up[i] = acc
                    changed = True
        for i in range(n):
            if up[i] >> i & 1:
                raise ValueError("relation has a cycle")
        covers = []
        for i in range(n):
            m = up[i]
            indirect = 0
            for j in _bits(m):
                indirect |= up[j]
            for j in _bits(m & ~indirect):
                covers.append((i, j))
        return cls(labels, covers, rank, rank_base)

    def _topological_order(self):
        n = len(self.labels)
        indeg = [len(self._down[i]) for i in range(n)]
        ready = [i for i in range(n) if indeg[i] == 0]
        out = []
        while ready:
            i = ready.pop()
            out.append(i)
            for b in self._up[i]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        if len(out) != n:
            raise ValueError("covering relation has a cycle")
        return out

    # -- queries ---------------------------------------------------------------

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FacePoset):
            return NotImplemented
        return (self.labels == other.labels and self.covers == other.covers
                and self.rank == other.rank)

    def __hash__(self):
        return hash((self.labels, self.covers, self.rank))

    def __repr__(self):
        return f"FacePoset({len(self)} elements, ranks {self.rank_counts()})"

    def index(self, label) -> int:
        return self._index[label]

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.below[b] >> a & 1)

    def up(self, i: int) -> list[int]:
        return self._up[i]

    def down(self, i: int) -> list[int]:
        return self._down[i]

    def below_set(self, i: int) -> list[int]:
        return list(_bits(self.below[i]))

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if not self._down[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if not self._up[i]]

    @property
    def bottom(self) -> int | None:
        m = self.minimal()
        return m[0] if len(m) == 1 else None

    @property
    def top(self) -> int | None:
        m = self.maximal()
        return m[0] if len(m) == 1 else None

    def rank_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.rank).items()))

    def f_vector(self) -> tuple[int, ...]:
        """Element counts by rank, from the lowest rank upward."""
        return tuple(self.rank_counts().values())

    def is_graded(self) -> bool:
        """Every cover steps the rank by exactly one."""
        return all(self.rank[b] == self.rank[a] + 1 for a, b in self.covers)

    def ideal(self, i: int) -> FacePoset:
        """The principal order ideal below ``i`` (inclusive)."""
        return self.subposet(sorted(set(self.below_set(i)) | {i}))

    def subposet(self, indices: Sequence[int]) -> FacePoset:
        """Induced subposet on ``indices``; ranks are kept."""
        idx = list(indices)
        pos = {j: k for k, j in enumerate(idx)}
        less = [(pos[a], pos[b]) for a in idx for b in idx
                if a != b and self.below[b] >> a & 1]
        return FacePoset.from_order([self.labels[j] for j in idx], less,
                                    rank=[self.rank[j] for j in idx])

    def with_bottom(self, label: Hashable = "", rank: int | None = None) -> FacePoset:
        """Adjoin a new least element."""
        if label in self._index:
            raise ValueError(f"label {label!r} already present")
        n = len(self)
        covers = [(a + 1, b + 1) for a, b in self.covers]
        covers += [(0, m + 1) for m in self.minimal()]
        r0 = min(self.rank) - 1 if rank is None else rank
        return FacePoset((label,) + self.labels, covers, (r0,) + self.rank)

    def relabel(self, fn) -> FacePoset:
        return FacePoset([fn(x) for x in self.labels], self.covers, self.rank)


def product_poset(a: FacePoset, b: FacePoset) -> FacePoset:
    """Componentwise order on pairs; ranks add."""
    labels = [(x, y) for x in a.labels for y in b.labels]
    nb = len(b)
    covers = []
    for i in range(len(a)):
        for j in range(nb):
            for i2 in a.up(i):
                covers.append((i * nb + j, i2 * nb + j))
            for j2 in b.up(j):
                covers.append((i * nb + j, i * nb + j2))
    rank = [a.rank[i] + b.rank[j] for i in range(len(a)) for j in range(nb)]
    return FacePoset(labels, covers, rank)
