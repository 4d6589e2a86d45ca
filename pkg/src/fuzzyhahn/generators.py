"""Seeded random instances for property campaigns.

Every function takes an explicit :class:`random.Random` so that a campaign is
reproducible from its seed alone.  Rationals are drawn with small numerators
and denominators in ``{1, 2, 3, 4}`` to keep the tables readable.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .caratheodory import CoverSystem, join_closure
from .lattice import FuzzySet, Universe, sup_of
from .measures import FuzzyMeasure, SignedMeasure, coordinatewise_measure
from .sigma import FuzzySigmaAlgebra, full_cube, generate_algebra

LABELS = "abcdefgh"


def small_rational(rng: random.Random, lo: int, hi: int) -> Fraction:
    """Uniform over ``{k/d : lo <= k/d <= hi, d in 1..4}``-ish, exact."""
    d = rng.choice((1, 2, 3, 4))
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_universe(rng: random.Random, max_points: int = 3, min_points: int = 1) -> Universe:
    n = rng.randint(min_points, max_points)
    return Universe(LABELS[:n])


def random_set(rng: random.Random, u: Universe, q: int) -> FuzzySet:
    return FuzzySet(u, q, [rng.randint(0, q) for _ in u])


def random_algebra(
    rng: random.Random, u: Universe, q: int, full_cube_prob: float = 0.5, max_generators: int = 2
) -> FuzzySigmaAlgebra:
    if rng.random() < full_cube_prob:
        return full_cube(q, u)
    gens = [random_set(rng, u, q) for _ in range(rng.randint(0, max_generators))]
    return generate_algebra(gens, q, u)


def measure_table(rng: random.Random, q: int) -> list[Fraction]:
    """Nonnegative nondecreasing grade table with ``g(0) = 0``."""
    out = [Fraction(0)]
    for _ in range(q):
        out.append(out[-1] + small_rational(rng, 0, 2))
    return out


def signed_table(rng: random.Random, q: int) -> list[Fraction]:
    """Difference of two measure tables: an arbitrary table vanishing at 0."""
    a, b = measure_table(rng, q), measure_table(rng, q)
    return [x - y for x, y in zip(a, b)]


def sign_consistent_table(rng: random.Random, q: int) -> list[Fraction]:
    """A measure table or its negation, so the point carries a single sign."""
    t = measure_table(rng, q)
    return t if rng.random() < 0.5 else [-x for x in t]


def random_fuzzy_measure(rng: random.Random, family) -> FuzzyMeasure:
    q = family.resolution
    m = coordinatewise_measure(family, [measure_table(rng, q) for _ in family.universe])
    return m if isinstance(m, FuzzyMeasure) else FuzzyMeasure(family, m.values)


SIGNED_KINDS = ("difference", "sign-consistent")


def random_signed_measure(rng: random.Random, family, kind: str = "difference") -> SignedMeasure:
    """Coordinatewise signed measure.

    ``difference`` draws each point table as the difference of two measure
    tables (so the whole measure is ``m1 - m2``); ``sign-consistent`` gives each
    point a nonnegative or nonpositive monotone table.
    """
    q = family.resolution
    if kind == "difference":
        tables = [signed_table(rng, q) for _ in family.universe]
    elif kind == "sign-consistent":
        tables = [sign_consistent_table(rng, q) for _ in family.universe]
    else:
        raise ValueError(f"unknown signed-measure kind {kind!r}")
    m = coordinatewise_measure(family, tables)
    return m if isinstance(m, SignedMeasure) else SignedMeasure(family, m.values)


def random_cover_system(rng: random.Random, u: Universe, q: int, max_family: int = 6) -> CoverSystem:
    """Cover family of at most ``max_family`` sets (bottom included) whose join is the top set.

    ``tau`` is an arbitrary nonnegative table on the join-closure with ``tau(bottom) = 0``.
    """
    bottom = FuzzySet(u, q, [0] * len(u))
    k = rng.randint(1, max_family - 1)
    fam = [random_set(rng, u, q) for _ in range(k)]
    top = sup_of(fam)
    if not top.is_top():
        # raise the last set so the family covers everything
        last = fam[-1]
        fam[-1] = FuzzySet(u, q, [q if t < q else x for x, t in zip(last.numerators, top.numerators)])
    fam.append(bottom)
    closure = join_closure(fam)
    tau = {e: (Fraction(0) if e.is_bottom() else small_rational(rng, 0, 4)) for e in closure}
    return CoverSystem(fam, tau)
