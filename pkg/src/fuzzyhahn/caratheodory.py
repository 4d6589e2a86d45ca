"""Outer fuzzy measures and the Caratheodory-style extension pipeline.

Infima over countable covers become exact minima over finite join-closures.
Which sets count as "measurable" for an outer measure is a choice; two
criteria are offered and every report records the one used:

``additive``
    ``o(A) == o(A & E) + o(A & ~E)`` for every ``A`` in the cube.
``max``
    ``o(A) == max(o(A & E), o(A & ~E))`` for every ``A`` in the cube.

The functions here compute and report; they never assume that the extension
theorems hold for a given instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import BadInputError, CoverSystemError, DomainMismatchError, NoCoverError
from .lattice import FuzzySet, Universe
from .measures import FuzzyMeasure, _Table, validate_fuzzy_measure
from .report import ValidationReport
from .sigma import FuzzyFamily, full_cube, generate_algebra, is_algebra
from .values import add, to_value

ADDITIVE = "additive"
MAX = "max"
CRITERIA = (ADDITIVE, MAX)


def join_closure(sets: Sequence[FuzzySet]) -> FuzzyFamily:
    """Smallest superset of ``sets`` closed under pairwise join."""
    sets = list(sets)
    if not sets:
        raise ValueError("join-closure of an empty family")
    u, q = sets[0].universe, sets[0].resolution
    order = list(dict.fromkeys(s.numerators for s in sets))
    known = set(order)
    pos = 0
    while pos < len(order):
        x = order[pos]
        pos += 1
        for y in order[:pos]:
            z = tuple(map(max, x, y))
            if z not in known:
                known.add(z)
                order.append(z)
    return FuzzyFamily(u, q, (FuzzySet(u, q, v) for v in order))


class CoverSystem:
    """A cover family ``F`` (containing the bottom set) and a cost ``tau`` on its join-closure.

    ``tau`` may be a mapping from sets to values or a callable; it is
    tabulated on the join-closure at construction, where ``tau(bottom) == 0``
    and ``tau >= 0`` are enforced.
    """

    def __init__(self, family: Sequence[FuzzySet], tau):
        family = list(family)
        if not family:
            raise CoverSystemError("cover family is empty")
        self.universe: Universe = family[0].universe
        self.resolution: int = family[0].resolution
        self.family = FuzzyFamily(self.universe, self.resolution, family)
        if self.family.bottom not in self.family:
            raise CoverSystemError("cover family must contain the bottom set")
        self.closure = join_closure(self.family.elements)
        vals = []
        for e in self.closure:
            if callable(tau) and not isinstance(tau, Mapping):
                v = tau(e)
            else:
                if e not in tau:
                    raise CoverSystemError(f"tau is not defined on {e!r}, which is a join of cover sets")
                v = tau[e]
            v = to_value(v)
            if v < 0:
                raise CoverSystemError(f"tau must be nonnegative, got tau({e!r}) = {v}")
            vals.append(v)
        self.tau = tuple(vals)
        if self.tau[self.closure.index_of(self.closure.bottom)] != 0:
            raise CoverSystemError("tau(bottom) must be 0")

    def tau_of(self, mu: FuzzySet):
        return self.tau[self.closure.index_of(mu)]

    def covers(self) -> bool:
        return self.closure.top in self.closure


class OuterMeasure(_Table):
    """A set function tabulated on the full cube."""

    def __init__(self, family: FuzzyFamily, values):
        if not family.is_full_cube:
            raise DomainMismatchError("an outer measure must be tabulated on the full cube")
        super().__init__(family, values)


def _cube_codes(cube: FuzzyFamily, vecs: np.ndarray) -> np.ndarray:
    # canonical order of the full cube is the mixed-radix order of numerator vectors
    q1 = cube.resolution + 1
    d = vecs.shape[1]
    weights = q1 ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return vecs @ weights


def outer_from_covers(c: CoverSystem) -> OuterMeasure:
    """``m*(mu) = min { tau(B) : B in join-closure(F), mu <= B }``."""
    cube = full_cube(c.resolution, c.universe)
    values = []
    for mu in cube:
        dominating = c.closure.above(mu)
        if not dominating:
            raise NoCoverError(mu)
        values.append(min(c.tau[i] for i in dominating))
    return OuterMeasure(cube, values)


def outer_from_measure(m: FuzzyMeasure, check: bool = True) -> OuterMeasure:
    """``m*(mu) = min { m(E) : E in sigma, mu <= E }`` on the full cube.

    ``sigma`` is join-closed, so joins of covering sequences are themselves
    single covers and the minimum over members suffices.
    """
    sigma = m.family
    if check:
        rep = validate_fuzzy_measure(m)
        if not rep.passed:
            w = rep.witnesses[0]
            raise BadInputError(f"not a fuzzy measure: {w.axiom} fails at {list(w.sets)}")
    cube = full_cube(sigma.resolution, sigma.universe)
    # For each cube element, the members of sigma above it.
    above = np.all(cube.matrix[:, None, :] <= sigma.matrix[None, :, :], axis=2)
    values = []
    for i, mu in enumerate(cube):
        idx = np.flatnonzero(above[i])
        if len(idx) == 0:
            raise NoCoverError(mu)
        values.append(min(m.values[j] for j in idx))
    return OuterMeasure(cube, values)


def validate_outer(o: _Table, subadditivity: str = "max") -> ValidationReport:
    """Check the three outer-measure clauses on a full-cube table.

    Clause (3) is checked pairwise: ``o(mu | eta) <= max(o(mu), o(eta))`` as
    written, which implies the finite form.  ``subadditivity="sum"`` swaps in
    the classical ``o(mu) + o(eta)`` bound for comparison.
    """
    if subadditivity not in ("max", "sum"):
        raise ValueError(f"unknown subadditivity form {subadditivity!r}")
    fam, v = o.family, o.values
    rep = ValidationReport("outer fuzzy measure")
    rep.notes["subadditivity"] = subadditivity
    b = fam.find(fam.bottom.numerators)
    if b is None or v[b] != 0:
        rep.fail("outer-bottom", [fam.bottom], v[b] if b is not None else None, 0)
    rep.ok("outer-bottom")

    leq = fam.leq_table
    for i in range(len(fam)):
        for j in np.flatnonzero(leq[i]):
            if v[i] > v[j]:
                rep.fail("outer-monotone", [fam.elements[i], fam.elements[j]], v[i], v[j])
    rep.ok("outer-monotone")

    axiom = "outer-subadditive" if subadditivity == "max" else "outer-subadditive-sum"
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            k = fam.join_index(i, j)
            if k is None:
                continue
            bound = max(v[i], v[j]) if subadditivity == "max" else add(v[i], v[j])
            if v[k] > bound:
                rep.fail(axiom, [fam.elements[i], fam.elements[j], fam.elements[k]], v[k], bound)
    rep.ok(axiom)
    return rep


def _split_arrays(o: _Table, e: FuzzySet):
    cube = o.family
    m = cube.matrix
    ev = np.asarray(e.numerators)
    inside = _cube_codes(cube, np.minimum(m, ev))
    outside = _cube_codes(cube, np.minimum(m, cube.resolution - ev))
    return inside, outside


def measurability_witness(o: _Table, e: FuzzySet, crit: str = ADDITIVE):
    """First test set ``A`` (canonical order) where the split fails, as ``(A, lhs, rhs)``; else None."""
    if crit not in CRITERIA:
        raise ValueError(f"unknown measurability criterion {crit!r}")
    if not o.family.is_full_cube:
        raise DomainMismatchError("measurability is tested against the full cube")
    inside, outside = _split_arrays(o, e)
    v = o.values
    for a in range(len(v)):
        x, y = v[inside[a]], v[outside[a]]
        rhs = add(x, y) if crit == ADDITIVE else max(x, y)
        if v[a] != rhs:
            return o.family.elements[a], v[a], rhs
    return None


def is_measurable(o: _Table, e: FuzzySet, crit: str = ADDITIVE) -> bool:
    return measurability_witness(o, e, crit) is None


@dataclass
class MeasurableClass:
    criterion: str
    members: list[FuzzySet]
    family: FuzzyFamily
    restriction: FuzzyMeasure
    closure_report: ValidationReport
    restriction_report: ValidationReport

    def __contains__(self, mu):
        return mu in self.family


def measurable_class(o: _Table, crit: str = ADDITIVE) -> MeasurableClass:
    """All measurable cube elements, with closure and restriction verdicts."""
    members = [e for e in o.family if is_measurable(o, e, crit)]
    fam = FuzzyFamily(o.family.universe, o.family.resolution, members)
    closure = is_algebra(fam)
    closure.subject = f"measurable class ({crit}-split) as a fuzzy sigma-algebra"
    closure.notes["criterion"] = crit
    restriction = FuzzyMeasure(fam, [o(e) for e in fam])
    rrep = validate_fuzzy_measure(restriction)
    rrep.subject = f"restriction of the outer measure to the {crit}-split class"
    rrep.notes["criterion"] = crit
    return MeasurableClass(crit, list(fam.elements), fam, restriction, closure, rrep)


@dataclass
class ExtensionResult:
    """Everything the extension pipeline computed, clause by clause."""

    measure: FuzzyMeasure
    outer: OuterMeasure
    criterion: str
    measurable: MeasurableClass
    outer_report: ValidationReport
    agreement_report: ValidationReport
    membership_report: ValidationReport
    extension_report: ValidationReport
    outer_sum_report: ValidationReport = field(repr=False, default=None)

    @property
    def measurable_class(self) -> list[FuzzySet]:
        return self.measurable.members

    @property
    def closure_report(self) -> ValidationReport:
        return self.measurable.closure_report

    @property
    def restriction_report(self) -> ValidationReport:
        return self.measurable.restriction_report

    @property
    def restriction(self) -> FuzzyMeasure:
        return self.measurable.restriction

    def clauses(self) -> dict[str, bool]:
        return {
            "ext-outer": self.outer_report.passed,
            "ext-agreement": self.agreement_report.passed,
            "ext-sigma-measurable": self.membership_report.passed,
            "ext-extension": self.extension_report.passed,
            "class-is-algebra": self.closure_report.passed,
            "restriction-is-measure": self.restriction_report.passed,
        }

    @property
    def passed(self) -> bool:
        return all(self.clauses().values())


def extend_measure(m: FuzzyMeasure, crit: str = ADDITIVE) -> ExtensionResult:
    """Build ``m*`` from ``m`` and check each extension clause on this instance."""
    if crit not in CRITERIA:
        raise ValueError(f"unknown measurability criterion {crit!r}")
    sigma = m.family
    outer = outer_from_measure(m)
    outer_rep = validate_outer(outer)
    outer_sum = validate_outer(outer, "sum")

    agree = ValidationReport("outer measure agrees with m on sigma")
    for e, val in m.items():
        if outer(e) != val:
            agree.fail("ext-agreement", [e], outer(e), val)
    agree.ok("ext-agreement")

    member = ValidationReport(f"sigma members are {crit}-split measurable")
    member.notes["criterion"] = crit
    for e in sigma:
        w = measurability_witness(outer, e, crit)
        if w is not None:
            a, lhs, rhs = w
            member.fail("ext-measurable", [e, a], lhs, rhs, note=f"split of A={list(a.numerators)} fails")
    member.ok("ext-measurable")

    mc = measurable_class(outer, crit)

    ext = ValidationReport("restriction extends m to a fuzzy measure on an algebra containing sigma")
    ext.notes["criterion"] = crit
    if not mc.closure_report.passed:
        w = mc.closure_report.witnesses[0]
        ext.fail("ext-algebra", w.sets, note=w.axiom)
    ext.ok("ext-algebra")
    for e in sigma:
        if e not in mc.family:
            ext.fail("ext-contains-sigma", [e], note="sigma member not measurable")
    ext.ok("ext-contains-sigma")
    if not mc.restriction_report.passed:
        w = mc.restriction_report.witnesses[0]
        ext.fail("ext-measure", w.sets, w.lhs, w.rhs, note=w.axiom)
    ext.ok("ext-measure")
    for e, val in m.items():
        if e in mc.family and mc.restriction(e) != val:
            ext.fail("ext-extends", [e], mc.restriction(e), val)
    ext.ok("ext-extends")

    return ExtensionResult(m, outer, crit, mc, outer_rep, agree, member, ext, outer_sum)


def uniqueness_spot_check(m: FuzzyMeasure, candidate: FuzzyMeasure, crit: str = ADDITIVE) -> ValidationReport:
    """Compare ``candidate`` against the extension of ``m`` on one instance.

    ``candidate`` must live on the algebra generated by ``m``'s domain.
    """
    sigma = m.family
    target = generate_algebra(sigma.elements, sigma.resolution, sigma.universe)
    if candidate.family != target:
        raise DomainMismatchError(
            f"candidate lives on {candidate.family!r}, expected the generated algebra {target!r}"
        )
    rep = ValidationReport("uniqueness spot check")
    rep.notes["criterion"] = crit
    for e, val in m.items():
        if candidate(e) != val:
            rep.fail("unique-agrees-on-sigma", [e], candidate(e), val)
    rep.ok("unique-agrees-on-sigma")
    if not validate_fuzzy_measure(candidate).passed:
        rep.fail("unique-candidate-valid", [], note="candidate is not a fuzzy measure")
    rep.ok("unique-candidate-valid")

    mbar = measurable_class(outer_from_measure(m), crit).restriction
    compared = 0
    for e, val in candidate.items():
        if e in mbar.family:
            compared += 1
            if mbar(e) != val:
                rep.fail("unique-matches-extension", [e], val, mbar(e))
    rep.ok("unique-matches-extension")
    rep.notes["compared"] = compared
    return rep
