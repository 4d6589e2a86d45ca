"""From a measure on an algebra to its outer measure and back.

A linear measure is pushed through the extension pipeline at two
resolutions.  On crisp grades everything splits; with a half grade available
only the crisp sets do, and the sup-form subadditivity of the outer measure
fails while the classical sum form holds.
"""

from fuzzyhahn import Universe, extend_measure, full_cube, linear_measure

u = Universe(["a", "b"])
for q in (1, 2):
    m = linear_measure(full_cube(q, u), [1, 2])
    res = extend_measure(m, "additive")
    print(f"q={q}")
    for clause, ok in res.clauses().items():
        print(f"  {clause:32s} {'pass' if ok else 'fail'}")
    print(f"  {'sum-form subadditivity':32s} {'pass' if res.outer_sum_report.passed else 'fail'}")
    print(f"  measurable: {', '.join(str(e) for e in res.measurable_class)}")
    for w in res.outer_report.witnesses[:1]:
        print(f"  outer witness: m*({w.sets[-1]}) = {w.lhs} > {w.rhs}")
