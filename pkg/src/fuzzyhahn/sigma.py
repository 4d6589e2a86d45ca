"""Finite fuzzy sigma-algebras: closure generation, validation, subset queries.

On a finite universe with a finite grade chain, every supremum of a sequence is
a finite join, so closure under countable suprema reduces to closure under
pairwise join.  Meets come for free: ``mu & eta == ~(~mu | ~eta)``.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import IncompatibleSetsError, NotAMemberError, SizeLimitError
from .lattice import FuzzySet, Universe, make_constant
from .report import ValidationReport

DEFAULT_SIZE_CAP = 200_000

AX_CONSTANTS = "sigma-constants"
AX_COMPLEMENT = "sigma-complement"
AX_JOIN = "sigma-join"


class FuzzyFamily:
    """A canonically ordered, duplicate-free finite family of fuzzy sets.

    Not necessarily closed under anything; :class:`FuzzySigmaAlgebra` is the
    closed special case.  Measures and measurable classes are tabulated over
    families by element index.
    """

    def __init__(self, universe: Universe, resolution: int, elements: Iterable[FuzzySet]):
        self.universe = universe
        self.resolution = resolution
        uniq = {}
        for e in elements:
            if e.universe != universe or e.resolution != resolution:
                raise IncompatibleSetsError(f"{e!r} does not live on {universe.points} at q={resolution}")
            uniq[e.numerators] = e
        self.elements: tuple[FuzzySet, ...] = tuple(uniq[k] for k in sorted(uniq))
        self._index = {e.numerators: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[FuzzySet]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> FuzzySet:
        return self.elements[i]

    def __contains__(self, mu) -> bool:
        return isinstance(mu, FuzzySet) and mu.universe == self.universe and mu.numerators in self._index

    def __eq__(self, other):
        if not isinstance(other, FuzzyFamily):
            return NotImplemented
        return (self.universe, self.resolution, self.elements) == (
            other.universe,
            other.resolution,
            other.elements,
        )

    def __hash__(self):
        return hash((self.universe, self.resolution, self.elements))

    def __repr__(self):
        return f"{type(self).__name__}({len(self)} sets over {self.universe.points}, q={self.resolution})"

    def index_of(self, mu: FuzzySet) -> int:
        try:
            return self._index[mu.numerators]
        except KeyError:
            raise NotAMemberError(f"{mu!r} is not a member of {self!r}") from None

    def find(self, numerators: Sequence[int]) -> int | None:
        return self._index.get(tuple(numerators))

    def make(self, numerators: Sequence[int]) -> FuzzySet:
        return FuzzySet(self.universe, self.resolution, numerators)

    @property
    def bottom(self) -> FuzzySet:
        return make_constant(0, self.universe, self.resolution)

    @property
    def top(self) -> FuzzySet:
        return make_constant(1, self.universe, self.resolution)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Numerator vectors as an ``(n, |X|)`` integer array."""
        return np.array([e.numerators for e in self.elements], dtype=np.int64).reshape(
            len(self), len(self.universe)
        )

    @cached_property
    def leq_table(self) -> np.ndarray:
        """``leq_table[i, j]`` is True iff element ``i`` lies below element ``j``."""
        m = self.matrix
        return np.all(m[:, None, :] <= m[None, :, :], axis=2)

    @property
    def is_full_cube(self) -> bool:
        return len(self) == (self.resolution + 1) ** len(self.universe)

    def below(self, mu: FuzzySet) -> list[int]:
        """Indices of family members ``<= mu``; ``mu`` need not be a member."""
        mask = np.all(self.matrix <= np.asarray(mu.numerators), axis=1)
        return [int(i) for i in np.flatnonzero(mask)]

    def above(self, mu: FuzzySet) -> list[int]:
        mask = np.all(self.matrix >= np.asarray(mu.numerators), axis=1)
        return [int(i) for i in np.flatnonzero(mask)]

    def join_index(self, i: int, j: int) -> int | None:
        a, b = self.elements[i].numerators, self.elements[j].numerators
        return self._index.get(tuple(map(max, a, b)))

    def meet_index(self, i: int, j: int) -> int | None:
        a, b = self.elements[i].numerators, self.elements[j].numerators
        return self._index.get(tuple(map(min, a, b)))

    def complement_index(self, i: int) -> int | None:
        q = self.resolution
        return self._index.get(tuple(q - k for k in self.elements[i].numerators))


class FuzzySigmaAlgebra(FuzzyFamily):
    """A family containing every constant and closed under complement and join.

    Build one with :func:`generate_algebra`, :func:`full_cube` or
    :meth:`from_elements` (which verifies closure).
    """

    @classmethod
    def from_elements(cls, universe: Universe, resolution: int, elements: Iterable[FuzzySet]):
        fam = FuzzyFamily(universe, resolution, elements)
        rep = is_algebra(fam)
        if not rep.passed:
            w = rep.witnesses[0]
            raise ValueError(f"family is not a fuzzy sigma-algebra: {w.axiom} fails at {list(w.sets)}")
        return cls(universe, resolution, fam.elements)


def generate_algebra(
    generators: Iterable[FuzzySet],
    resolution: int,
    universe: Universe,
    cap: int = DEFAULT_SIZE_CAP,
) -> FuzzySigmaAlgebra:
    """Smallest family holding all constants and ``generators``, closed under ``~`` and ``|``."""
    q = resolution
    n = len(universe)
    seeds = [(k,) * n for k in range(q + 1)]
    for g in generators:
        if g.universe != universe or g.resolution != q:
            raise IncompatibleSetsError(f"generator {g!r} does not live on {universe.points} at q={q}")
        seeds.append(g.numerators)

    known: set[tuple[int, ...]] = set()
    order: list[tuple[int, ...]] = []

    def add(v):
        if v not in known:
            known.add(v)
            order.append(v)
            if len(known) > cap:
                raise SizeLimitError(cap, "generated algebra")

    for s in seeds:
        add(s)
    # worklist: each element, once popped, is combined with everything known at that time
    pos = 0
    while pos < len(order):
        x = order[pos]
        pos += 1
        add(tuple(q - k for k in x))
        for y in order[:pos]:
            add(tuple(map(max, x, y)))
    return FuzzySigmaAlgebra(universe, q, (FuzzySet(universe, q, v) for v in order))


def full_cube(resolution: int, universe: Universe, cap: int = DEFAULT_SIZE_CAP) -> FuzzySigmaAlgebra:
    """Every grade vector at this resolution."""
    size = (resolution + 1) ** len(universe)
    if size > cap:
        raise SizeLimitError(cap, f"full cube of {size} elements")
    vecs = itertools.product(range(resolution + 1), repeat=len(universe))
    return FuzzySigmaAlgebra(universe, resolution, (FuzzySet(universe, resolution, v) for v in vecs))


def is_algebra(family, universe: Universe | None = None, resolution: int | None = None) -> ValidationReport:
    """Check the three closure conditions, reporting a missing element as witness."""
    if isinstance(family, FuzzyFamily):
        fam = family
    else:
        family = list(family)
        if universe is None or resolution is None:
            if not family:
                raise ValueError("empty family: pass universe and resolution explicitly")
            universe, resolution = family[0].universe, family[0].resolution
        fam = FuzzyFamily(universe, resolution, family)

    rep = ValidationReport("fuzzy sigma-algebra")
    q, n = fam.resolution, len(fam.universe)
    for k in range(q + 1):
        if fam.find((k,) * n) is None:
            rep.fail(AX_CONSTANTS, [fam.make((k,) * n)], note="constant missing")
    rep.ok(AX_CONSTANTS)

    for i, e in enumerate(fam.elements):
        if fam.complement_index(i) is None:
            rep.fail(AX_COMPLEMENT, [e, ~e], note="complement missing")
    rep.ok(AX_COMPLEMENT)

    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            if fam.join_index(i, j) is None:
                a, b = fam.elements[i], fam.elements[j]
                rep.fail(AX_JOIN, [a, b, a | b], note="join missing")
    rep.ok(AX_JOIN)
    rep.notes["size"] = len(fam)
    return rep


def subsets_of(sigma: FuzzyFamily, mu: FuzzySet) -> list[FuzzySet]:
    """Members of ``sigma`` below ``mu``, in canonical order."""
    i = sigma.index_of(mu)
    return [sigma.elements[j] for j in np.flatnonzero(sigma.leq_table[:, i])]
