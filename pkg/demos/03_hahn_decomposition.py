"""Positive sets, the stripping construction, and the decomposition.

First nu(mu) = mu(a) - mu(b): the decomposition exists, but stripping negative
subsets out of (1, 1/2) never reaches a positive set.  Then a single point with
grade table (0, 1, -1), where no decomposition exists at all.
"""

from fuzzyhahn import (
    Universe,
    classify,
    coordinatewise_measure,
    extract_positive_subset,
    full_cube,
    hahn_decompose,
    hahn_report,
    oracle_positive_subset,
)


def describe(nu):
    dec = hahn_decompose(nu)
    print(f"  A = {dec.A}, B = {dec.B}, lambda = {dec.lam}")
    rep = hahn_report(nu, dec)
    for ax, ok in rep.verdicts.items():
        print(f"    {ax:14s} {'ok' if ok else 'FAILS'}")


cube = full_cube(2, Universe(["a", "b"]))
nu = coordinatewise_measure(cube, [lambda t: t, lambda t: -t])
print("nu = mu(a) - mu(b)")
describe(nu)

e = cube.make((2, 1))
tr = extract_positive_subset(nu, e)
print(f"\nstripping negative subsets from {e} (nu = {nu(e)})")
for st in tr.steps:
    print(f"  n = {st.n}: remove {st.set} with nu = {st.value}")
print(f"  candidate {tr.candidate_A}: {tr.certificate.verdict}", end="")
if tr.certificate.negative_witness:
    w, v = tr.certificate.negative_witness
    print(f" (contains {w} with nu = {v})")
found = oracle_positive_subset(nu, e)
print(f"  exhaustive search finds {found.set}, nu = {nu(found.set)}, {classify(nu, found.set).verdict}")

single = full_cube(2, Universe(["x"]))
nu = coordinatewise_measure(single, [[0, 1, -1]])
print("\none point, grade table (0, 1, -1)")
describe(nu)
pairs = [a for a in single if classify(nu, a).is_positive and classify(nu, ~a).is_negative and nu(a & ~a) == 0]
print(f"  pairs (A, ~A) that work: {len(pairs)}")
