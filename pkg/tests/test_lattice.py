from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzyhahn import FuzzySet, GradeLattice, Universe, complement, join, leq, make_constant, meet, sup_of
from fuzzyhahn.errors import EmptySupremumError, IncompatibleSetsError, InvalidGradeError
from fuzzyhahn.lattice import inf_of

from conftest import fs

U = Universe(["a", "b"])


def test_grade_chain():
    assert GradeLattice(3).grades() == [F(0), F(1, 3), F(2, 3), F(1)]
    assert GradeLattice(4).numerator("1/2") == 2
    with pytest.raises(InvalidGradeError):
        GradeLattice(2).numerator(F(1, 3))
    with pytest.raises(InvalidGradeError):
        GradeLattice(0)


def test_constants():
    assert make_constant(0, U, 2).numerators == (0, 0)
    assert make_constant(F(1, 2), U, 2).grades == (F(1, 2), F(1, 2))
    assert make_constant(1, Universe(["a"]), 3).is_top()


def test_meet_join_complement():
    assert meet(fs(U, 2, 1, 0), fs(U, 2, "1/2", "1/2")) == fs(U, 2, "1/2", 0)
    assert join(fs(U, 1, 1, 0), fs(U, 1, 0, 1)) == fs(U, 1, 1, 1)
    mu = fs(U, 2, "1/2", 1)
    assert meet(mu, make_constant(1, U, 2)) == mu
    assert complement(fs(U, 2, 1, "1/2")) == fs(U, 2, 0, "1/2")
    assert complement(fs(U, 2, 0, 0)).is_top()
    assert ~mu == complement(mu) and (mu & ~mu) == meet(mu, ~mu)


def test_order():
    assert leq(fs(U, 2, "1/2", 0), fs(U, 2, 1, "1/2"))
    assert not leq(fs(U, 1, 1, 0), fs(U, 1, 0, 1))
    assert not leq(fs(U, 1, 0, 1), fs(U, 1, 1, 0))


def test_sup_inf():
    assert sup_of([fs(U, 2, 1, 0), fs(U, 2, 0, "1/2")]) == fs(U, 2, 1, "1/2")
    mu = fs(U, 2, "1/2", 0)
    assert sup_of([mu]) == mu
    assert sup_of([fs(U, 2, 0, 0)] * 2).is_bottom()
    assert inf_of([fs(U, 2, 1, 0), fs(U, 2, "1/2", 1)]) == fs(U, 2, "1/2", 0)
    with pytest.raises(EmptySupremumError):
        sup_of([])


def test_incompatible_and_invalid():
    with pytest.raises(IncompatibleSetsError):
        meet(fs(U, 2, 0, 0), fs(U, 1, 0, 0))
    with pytest.raises(IncompatibleSetsError):
        join(fs(U, 1, 0, 0), fs(Universe(["a", "c"]), 1, 0, 0))
    with pytest.raises(InvalidGradeError):
        FuzzySet(U, 2, (0, 3))
    with pytest.raises(InvalidGradeError):
        FuzzySet(U, 2, (0,))


def sets(q=3, n=3):
    u = Universe("abc"[:n])
    return st.lists(st.integers(0, q), min_size=n, max_size=n).map(lambda v: FuzzySet(u, q, v))


@given(sets(), sets(), sets())
def test_distributive_lattice_laws(x, y, z):
    assert meet(x, join(y, z)) == join(meet(x, y), meet(x, z))
    assert join(x, meet(x, y)) == x
    assert meet(x, y) == meet(y, x) and join(x, y) == join(y, x)
    assert leq(meet(x, y), x) and leq(x, join(x, y))


@given(sets(), sets())
def test_de_morgan_and_involution(x, y):
    assert complement(join(x, y)) == meet(complement(x), complement(y))
    assert complement(complement(x)) == x
    assert leq(x, y) == leq(complement(y), complement(x))


@given(st.lists(sets(), min_size=1, max_size=5))
def test_sup_is_least_upper_bound(xs):
    s = sup_of(xs)
    assert all(leq(x, s) for x in xs)
    assert all(k == max(x.numerators[i] for x in xs) for i, k in enumerate(s.numerators))
