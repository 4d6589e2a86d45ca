"""The 0/1 set function: an outer measure on the square that is not a measure.

Walks through the validators, then asks which fuzzy sets split the 0/1 outer
measure under the two measurability criteria, at resolutions 1 and 2.
"""

from fuzzyhahn import (
    FuzzyMeasure,
    OuterMeasure,
    Universe,
    full_cube,
    measurable_class,
    validate_fuzzy_measure,
    validate_outer,
)


def zero_one(cube, cls):
    return cls(cube, [0 if e.is_bottom() else 1 for e in cube])


def show(rep):
    print(f"  {rep.subject}: {'pass' if rep.passed else 'fail'}")
    for w in rep.witnesses[:2]:
        sets = ", ".join(str(s) for s in w.sets)
        print(f"    {w.axiom}: {sets}  lhs={w.lhs} rhs={w.rhs} {w.note}")


u = Universe(["a", "b"])
cube = full_cube(1, u)
print("0/1 set function on the crisp square")
show(validate_outer(zero_one(cube, OuterMeasure)))
show(validate_fuzzy_measure(zero_one(cube, FuzzyMeasure)))

for q in (1, 2):
    o = zero_one(full_cube(q, u), OuterMeasure)
    for crit in ("additive", "max"):
        mc = measurable_class(o, crit)
        print(f"\nq={q}, {crit}-split: {len(mc.members)} measurable sets")
        show(mc.closure_report)
        show(mc.restriction_report)
