"""Exact-rational points, hyperplanes and the two polytope representations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

__all__ = ["Point", "point", "Hyperplane", "HRep", "VRep"]

# A point is a tuple of Fractions; length 0 is the point of R^0.
Point = tuple


def point(coords: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coords)


_SENSES = ("<=", ">=", "=")


@dataclass(frozen=True)
class Hyperplane:
    """``coeffs . x  sense  rhs``, optionally tagged with the tree it bounds."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    sense: str = "<="
    tag: Optional[str] = field(default=None, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", point(self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if self.sense not in _SENSES:
            raise ValueError(f"sense must be one of {_SENSES}, got {self.sense!r}")
        if not any(self.coeffs):
            raise ValueError("hyperplane coefficients are all zero")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def value(self, p) -> Fraction:
        if len(p) != len(self.coeffs):
            raise ValueError(f"point of dimension {len(p)} against hyperplane of dimension {self.dim}")
        return sum((a * x for a, x in zip(self.coeffs, p)), Fraction(0))

    def satisfied(self, p) -> bool:
        v = self.value(p)
        if self.sense == "<=":
            return v <= self.rhs
        if self.sense == ">=":
            return v >= self.rhs
        return v == self.rhs

    def tight(self, p) -> bool:
        return self.value(p) == self.rhs

    def as_upper(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        """Rewrite as one or two ``a . x <= b`` rows."""
        neg = (tuple(-a for a in self.coeffs), -self.rhs)
        if self.sense == "<=":
            return [(self.coeffs, self.rhs)]
        if self.sense == ">=":
            return [neg]
        return [(self.coeffs, self.rhs), neg]

    def __str__(self):
        terms = [f"x{i + 1}" if a == 1 else f"{a}*x{i + 1}"
                 for i, a in enumerate(self.coeffs) if a]
        return f"{' + '.join(terms)} {self.sense} {self.rhs}"


@dataclass(frozen=True)
class HRep:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        for h in self.hyperplanes:
            if h.dim != self.dim:
                raise ValueError(f"hyperplane {h} does not live in dimension {self.dim}")

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def contains(self, p) -> bool:
        return all(h.satisfied(p) for h in self.hyperplanes)


@dataclass(frozen=True)
class VRep:
    """Vertex list; ``labels[i]`` names the tree (class) behind ``points[i]``."""

    dim: int
    points: tuple[tuple[Fraction, ...], ...]
    labels: tuple[Optional[str], ...] = ()

    def __post_init__(self):
        pts = tuple(point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        labels = tuple(self.labels) if self.labels else (None,) * len(pts)
        if len(labels) != len(pts):
            raise ValueError("one label per point required")
        object.__setattr__(self, "labels", labels)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not live in dimension {self.dim}")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def point_set(self) -> frozenset:
        return frozenset(self.points)
