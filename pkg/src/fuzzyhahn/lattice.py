"""Exact grade arithmetic and the lattice of fuzzy sets over a finite universe.

Membership grades live on the evenly spaced chain ``{0, 1/q, ..., 1}`` and are
stored as integer numerators over a resolution ``q`` shared by every set of an
instance.  Meet and join are coordinatewise min and max, the complement is
``1 - t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptySupremumError, IncompatibleSetsError, InvalidGradeError

__all__ = [
    "GradeLattice",
    "Universe",
    "FuzzySet",
    "make_constant",
    "meet",
    "join",
    "complement",
    "leq",
    "sup_of",
    "inf_of",
]


@dataclass(frozen=True)
class GradeLattice:
    """The chain ``{0/q, ..., q/q}``."""

    resolution: int

    def __post_init__(self):
        if not isinstance(self.resolution, int) or self.resolution < 1:
            raise InvalidGradeError(f"resolution must be a positive integer, got {self.resolution!r}")

    @property
    def bottom(self) -> Fraction:
        return Fraction(0)

    @property
    def top(self) -> Fraction:
        return Fraction(1)

    def grades(self) -> list[Fraction]:
        q = self.resolution
        return [Fraction(k, q) for k in range(q + 1)]

    def numerator(self, grade) -> int:
        """Numerator of ``grade`` at this resolution; rejects off-chain values."""
        g = Fraction(grade)
        k = g * self.resolution
        if k.denominator != 1 or not 0 <= k <= self.resolution:
            raise InvalidGradeError(f"{grade} is not a grade at resolution {self.resolution}")
        return int(k)

    def __contains__(self, grade) -> bool:
        try:
            self.numerator(grade)
        except (InvalidGradeError, TypeError, ValueError):
            return False
        return True


@dataclass(frozen=True)
class Universe:
    """Finite ordered set of point labels."""

    points: tuple[str, ...]

    def __init__(self, points: Iterable[str]):
        pts = tuple(str(p) for p in points)
        if not pts:
            raise ValueError("universe must be non-empty")
        if len(set(pts)) != len(pts):
            raise ValueError(f"universe labels must be unique: {pts}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def index(self, label: str) -> int:
        return self.points.index(label)


@dataclass(frozen=True, eq=True)
class FuzzySet:
    """A membership function on ``universe`` with grades ``numerators[i] / resolution``.

    ``<`` is the canonical order (lexicographic on the numerator vector), used for
    sorting.  The lattice order is :func:`leq`.
    """

    universe: Universe
    resolution: int
    numerators: tuple[int, ...]

    def __init__(self, universe: Universe, resolution: int, numerators: Sequence[int]):
        GradeLattice(resolution)
        nums = tuple(int(k) for k in numerators)
        if len(nums) != len(universe):
            raise InvalidGradeError(
                f"expected {len(universe)} grades, got {len(nums)}"
            )
        for k in nums:
            if not 0 <= k <= resolution:
                raise InvalidGradeError(f"numerator {k} outside [0, {resolution}]")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "resolution", resolution)
        object.__setattr__(self, "numerators", nums)

    @classmethod
    def from_grades(cls, universe: Universe, resolution: int, grades: Iterable) -> "FuzzySet":
        lat = GradeLattice(resolution)
        return cls(universe, resolution, [lat.numerator(g) for g in grades])

    @property
    def grades(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(k, self.resolution) for k in self.numerators)

    def grade(self, label: str) -> Fraction:
        return Fraction(self.numerators[self.universe.index(label)], self.resolution)

    def is_bottom(self) -> bool:
        return not any(self.numerators)

    def is_top(self) -> bool:
        return all(k == self.resolution for k in self.numerators)

    def _check(self, other: "FuzzySet"):
        if not isinstance(other, FuzzySet):
            raise TypeError(f"expected FuzzySet, got {type(other).__name__}")
        if other.universe != self.universe or other.resolution != self.resolution:
            raise IncompatibleSetsError(
                f"sets over {self.universe.points}/q={self.resolution} and "
                f"{other.universe.points}/q={other.resolution} cannot be combined"
            )

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        return meet(self, other)

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        return join(self, other)

    def __invert__(self) -> "FuzzySet":
        return complement(self)

    def __lt__(self, other):
        # canonical order only, so that sorted() is deterministic; use leq() for the lattice order
        self._check(other)
        return self.numerators < other.numerators

    def sort_key(self) -> tuple[int, ...]:
        return self.numerators

    def __repr__(self):
        return "FuzzySet(" + ", ".join(str(g) for g in self.grades) + ")"


def make_constant(alpha, universe: Universe, resolution: int) -> FuzzySet:
    """The constant membership function with value ``alpha``."""
    k = GradeLattice(resolution).numerator(alpha)
    return FuzzySet(universe, resolution, (k,) * len(universe))


def meet(mu: FuzzySet, eta: FuzzySet) -> FuzzySet:
    mu._check(eta)
    return FuzzySet(mu.universe, mu.resolution, map(min, mu.numerators, eta.numerators))


def join(mu: FuzzySet, eta: FuzzySet) -> FuzzySet:
    mu._check(eta)
    return FuzzySet(mu.universe, mu.resolution, map(max, mu.numerators, eta.numerators))


def complement(mu: FuzzySet) -> FuzzySet:
    q = mu.resolution
    return FuzzySet(mu.universe, q, [q - k for k in mu.numerators])


def leq(mu: FuzzySet, eta: FuzzySet) -> bool:
    """``mu <= eta`` in the lattice order, i.e. ``meet(mu, eta) == mu``."""
    mu._check(eta)
    return all(a <= b for a, b in zip(mu.numerators, eta.numerators))


def sup_of(sets: Iterable[FuzzySet]) -> FuzzySet:
    """Coordinatewise maximum of a non-empty finite family."""
    sets = list(sets)
    if not sets:
        raise EmptySupremumError("supremum of an empty family; pass the bottom element explicitly")
    out = sets[0]
    for s in sets[1:]:
        out = join(out, s)
    return out


def inf_of(sets: Iterable[FuzzySet]) -> FuzzySet:
    sets = list(sets)
    if not sets:
        raise EmptySupremumError("infimum of an empty family; pass the top element explicitly")
    out = sets[0]
    for s in sets[1:]:
        out = meet(out, s)
    return out
