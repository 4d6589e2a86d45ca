import random
from fractions import Fraction as F

import pytest

from fuzzyhahn import (
    CoverSystem,
    FuzzyMeasure,
    OuterMeasure,
    Universe,
    extend_measure,
    full_cube,
    generate_algebra,
    is_measurable,
    linear_measure,
    measurability_witness,
    measurable_class,
    outer_from_covers,
    outer_from_measure,
    uniqueness_spot_check,
    validate_outer,
    zero_measure,
)
from fuzzyhahn import generators as gen
from fuzzyhahn.caratheodory import join_closure
from fuzzyhahn.errors import BadInputError, CoverSystemError, DomainMismatchError, NoCoverError

from oracles import outer_violations


def zero_one_outer(cube):
    return OuterMeasure(cube, [0 if e.is_bottom() else 1 for e in cube])


def constants_measure(u, q, values):
    sigma = generate_algebra([], q, u)
    return FuzzyMeasure(sigma, values)


def test_two_set_cover_gives_zero_one(cube1):
    cs = CoverSystem([cube1.bottom, cube1.top], {cube1.bottom: 0, cube1.top: 1})
    o = outer_from_covers(cs)
    assert [o(e) for e in cube1] == [0, 1, 1, 1]
    assert validate_outer(o).passed


def test_full_cube_cover_with_measure_reproduces_it(cube2):
    m = linear_measure(cube2, [1, 2])
    o = outer_from_covers(CoverSystem(list(cube2), m.as_dict()))
    assert o.values == m.values


def test_cover_system_checks(cube1):
    with pytest.raises(CoverSystemError):
        CoverSystem([cube1.top], {cube1.top: 1})
    with pytest.raises(CoverSystemError):
        CoverSystem([cube1.bottom, cube1.top], {cube1.bottom: 1, cube1.top: 1})
    with pytest.raises(CoverSystemError):
        CoverSystem([cube1.bottom, cube1.make((1, 0)), cube1.make((0, 1))], lambda e: -1 if e.is_top() else 0)
    with pytest.raises(NoCoverError):
        outer_from_covers(CoverSystem([cube1.bottom, cube1.make((1, 0))], lambda e: 0))


def test_join_closure():
    u = Universe(["a", "b"])
    cube = full_cube(2, u)
    cl = join_closure([cube.make((1, 0)), cube.make((0, 2)), cube.bottom])
    assert sorted(e.numerators for e in cl) == [(0, 0), (0, 2), (1, 0), (1, 2)]


def test_validate_outer_cases(cube1):
    assert validate_outer(zero_one_outer(cube1)).passed
    bad = OuterMeasure(cube1, [1, 1, 1, 1])
    assert validate_outer(bad).failed_axioms() == ["outer-bottom"]
    with pytest.raises(DomainMismatchError):
        OuterMeasure(generate_algebra([], 1, cube1.universe), [0, 1])


def test_outer_from_measure(cube2, ab):
    m = linear_measure(cube2, [1, 2])
    assert outer_from_measure(m).values == m.values
    o = outer_from_measure(constants_measure(ab, 1, [0, 1]))
    assert all(o(e) == (0 if e.is_bottom() else 1) for e in o.family)
    with pytest.raises(BadInputError):
        outer_from_measure(FuzzyMeasure(cube2, [1] * 9))


def test_sup_form_versus_sum_form(cube2):
    # m*((1/2,1/2)) = 3/2 exceeds the max of its parts 1/2 and 1 but not their sum
    o = outer_from_measure(linear_measure(cube2, [1, 2]))
    rep = validate_outer(o)
    assert rep.failed_axioms() == ["outer-subadditive"]
    assert validate_outer(o, "sum").passed


def test_measurability_on_zero_one(cube1):
    o = zero_one_outer(cube1)
    e = cube1.make((1, 0))
    a, lhs, rhs = measurability_witness(o, e, "additive")
    assert a.numerators == (1, 1) and (lhs, rhs) == (1, 2)
    assert not is_measurable(o, e, "additive")
    assert is_measurable(o, e, "max")
    for crit in ("additive", "max"):
        assert is_measurable(o, cube1.bottom, crit)


def test_measurable_class_zero_one(ab):
    o = zero_one_outer(full_cube(1, ab))
    mc = measurable_class(o, "additive")
    assert [e.numerators for e in mc.members] == [(0, 0), (1, 1)]
    assert mc.closure_report.passed
    o2 = zero_one_outer(full_cube(2, ab))
    mc = measurable_class(o2, "additive")
    assert [e.numerators for e in mc.members] == [(0, 0), (2, 2)]
    w = mc.closure_report.witnesses_for("sigma-constants")[0]
    assert w.sets[0].numerators == (1, 1)
    mc = measurable_class(o2, "max")
    assert len(mc.members) == 9 and mc.closure_report.passed
    assert mc.restriction_report.failed_axioms() == ["measure-modular"]


def test_linear_outer_measurable_class(cube1, cube2):
    # crisp cube: min(a,e) + min(a,1-e) = a for every grade a, so everything splits
    mc = measurable_class(outer_from_measure(linear_measure(cube1, [1, 2])), "additive")
    assert len(mc.members) == 4
    assert mc.closure_report.passed and mc.restriction_report.passed
    # at q=2, E = A = (1/2,0) gives 1/2 + 1/2 on the right against 1/2 on the left
    o = outer_from_measure(linear_measure(cube2, [1, 2]))
    e = cube2.make((1, 0))
    a, lhs, rhs = measurability_witness(o, e, "additive")
    assert (lhs, rhs) == (F(1, 2), 1) and a == e
    mc = measurable_class(o, "additive")
    assert [e.numerators for e in mc.members] == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert mc.closure_report.failed_axioms() == ["sigma-constants"]
    assert mc.restriction_report.passed


def test_extend_linear(cube1, cube2):
    c = extend_measure(linear_measure(cube1, [1, 2])).clauses()
    assert c["ext-agreement"] and c["ext-sigma-measurable"] and c["ext-extension"]
    res = extend_measure(linear_measure(cube2, [1, 2]))
    c = res.clauses()
    assert c["ext-agreement"] and not c["ext-sigma-measurable"] and not c["ext-extension"]
    assert not c["ext-outer"] and res.outer_sum_report.passed


def test_extend_constants_only(ab):
    res = extend_measure(constants_measure(ab, 1, [0, 1]))
    assert res.agreement_report.passed
    assert res.membership_report.passed
    assert [e.numerators for e in res.measurable_class] == [(0, 0), (1, 1)]


def test_extend_zero_measure():
    alg = generate_algebra([full_cube(2, Universe("ab")).make((1, 2))], 2, Universe("ab"))
    res = extend_measure(zero_measure(alg))
    assert res.passed and all(res.clauses().values())


def test_uniqueness_spot_check(cube2):
    m = linear_measure(cube2, [1, 2])
    assert uniqueness_spot_check(m, m).passed
    vals = list(m.values)
    vals[4] += 1
    rep = uniqueness_spot_check(m, FuzzyMeasure(cube2, vals))
    assert not rep.verdicts["unique-agrees-on-sigma"]
    assert rep.witnesses_for("unique-agrees-on-sigma")[0].sets[0] == cube2[4]
    from fuzzyhahn import coordinatewise_measure

    other = coordinatewise_measure(cube2, [lambda t: t, lambda t: 2 * t])
    assert uniqueness_spot_check(m, other).passed
    with pytest.raises(DomainMismatchError):
        uniqueness_spot_check(m, constants_measure(cube2.universe, 2, [0, 1, 2]))


def test_outer_validator_matches_naive_oracle():
    for t in range(150):
        rng = random.Random(f"outer-oracle/{t}")
        u = gen.random_universe(rng, 2)
        q = rng.randint(1, 2)
        cube = full_cube(q, u)
        vals = [F(0) if e.is_bottom() and rng.random() < 0.9 else gen.small_rational(rng, 0, 3) for e in cube]
        o = OuterMeasure(cube, vals)
        assert validate_outer(o).passed == (not outer_violations(o)), t
