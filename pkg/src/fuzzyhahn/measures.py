"""Fuzzy measures and fuzzy signed measures as extensional value tables.

A measure is a total table from the elements of a finite family (normally a
:class:`~fuzzyhahn.sigma.FuzzySigmaAlgebra`) to extended values.  The
validators check the defining clauses exhaustively and attach witnesses.

Monotonicity is checked only between pairs whose values are both ``>= 0``
(and, for signed measures, antitonicity only between pairs both ``<= 0``),
exactly as the clauses are stated.  This is weaker than classical
monotonicity and, for signed measures with mixed signs, usually fails:
``nu(mu) = mu(a) - mu(b)`` has ``nu((1/2, 0)) = 1/2 > 0 = nu((1/2, 1/2))``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import IllDefinedDifferenceError, IncompleteGeneratorError, InfinityError
from .lattice import FuzzySet
from .report import ValidationReport
from .sigma import FuzzyFamily
from .values import INF, NEG_INF, add, fmt, is_finite, sub, to_value

NONE, PLUS_ONLY, MINUS_ONLY, MIXED = "none", "plus-only", "minus-only", "mixed"


def infinity_sign_of(values: Iterable) -> str:
    has_plus = has_minus = False
    for v in values:
        if v == INF:
            has_plus = True
        elif v == NEG_INF:
            has_minus = True
    if has_plus and has_minus:
        return MIXED
    return PLUS_ONLY if has_plus else MINUS_ONLY if has_minus else NONE


class _Table:
    def __init__(self, family: FuzzyFamily, values):
        if isinstance(values, Mapping):
            vals = []
            for e in family.elements:
                if e not in values:
                    raise IncompleteGeneratorError(f"table has no value for {e!r}")
                vals.append(to_value(values[e]))
            if len(values) != len(family):
                extra = [k for k in values if k not in family]
                raise ValueError(f"table has entries outside the family: {extra[:3]}")
        else:
            vals = [to_value(v) for v in values]
            if len(vals) != len(family):
                raise IncompleteGeneratorError(f"table has {len(vals)} values for {len(family)} sets")
        self.family = family
        self.values: tuple = tuple(vals)

    @property
    def algebra(self) -> FuzzyFamily:
        return self.family

    def __call__(self, mu: FuzzySet):
        return self.values[self.family.index_of(mu)]

    def items(self):
        return zip(self.family.elements, self.values)

    def as_dict(self) -> dict:
        return dict(self.items())

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.family == other.family and self.values == other.values

    def __repr__(self):
        body = ", ".join(f"{list(e.numerators)}: {fmt(v)}" for e, v in list(self.items())[:6])
        more = ", ..." if len(self.values) > 6 else ""
        return f"{type(self).__name__}({{{body}{more}}})"


class FuzzyMeasure(_Table):
    """Value table of a candidate fuzzy measure; ``-inf`` is not allowed."""


class SignedMeasure(_Table):
    """Value table of a candidate fuzzy signed measure.

    ``infinity_sign`` is inferred from the values unless given; ``report`` holds
    the validation report when the measure came out of a constructor that
    validates (:func:`difference_measure`, :func:`coordinatewise_measure`).
    """

    def __init__(self, family: FuzzyFamily, values, infinity_sign: str | None = None, report=None):
        super().__init__(family, values)
        self.infinity_sign = infinity_sign or infinity_sign_of(self.values)
        self.report = report


def _check_bottom(rep: ValidationReport, axiom: str, t: _Table):
    fam = t.family
    b = fam.find(fam.bottom.numerators)
    if b is None:
        rep.notes["bottom"] = "not in domain"
        rep.ok(axiom)
        return
    if t.values[b] != 0:
        rep.fail(axiom, [fam.elements[b]], t.values[b], 0)
    rep.ok(axiom)


def _check_order(rep: ValidationReport, t: _Table, axiom: str, sign: int):
    """sign=+1: nonneg pairs nondecreasing; sign=-1: nonpos pairs nonincreasing."""
    fam, v = t.family, t.values
    leq = fam.leq_table
    for i in range(len(fam)):
        vi = v[i]
        if vi * sign < 0:
            continue
        for j in np.flatnonzero(leq[i]):
            if i == j:
                continue
            vj = v[j]
            if vj * sign < 0:
                continue
            if (vi > vj) if sign > 0 else (vj > vi):
                rep.fail(axiom, [fam.elements[i], fam.elements[j]], vi, vj)
    rep.ok(axiom)


def _check_modular(rep: ValidationReport, t: _Table, axiom: str):
    fam, v = t.family, t.values
    leq = fam.leq_table
    skipped = 0
    n = len(fam)
    comparable = leq | leq.T
    for i in range(n):
        # comparable pairs satisfy the identity trivially
        for j in np.flatnonzero(~comparable[i, i + 1 :]) + i + 1:
            jo, me = fam.join_index(i, j), fam.meet_index(i, j)
            if jo is None or me is None:
                skipped += 1
                continue
            sets = [fam.elements[i], fam.elements[j], fam.elements[jo], fam.elements[me]]
            try:
                lhs = add(v[jo], v[me])
                rhs = add(v[i], v[j])
            except InfinityError as exc:
                rep.fail(axiom, sets, note=str(exc))
                continue
            if lhs != rhs:
                rep.fail(axiom, sets, lhs, rhs)
    if skipped:
        rep.notes[f"{axiom}-skipped-pairs"] = skipped
    rep.ok(axiom)


def _check_continuity(rep: ValidationReport, t: _Table, axiom: str):
    # On a finite family every increasing sequence is eventually constant at its
    # supremum, so the limit is the table entry at the top of the chain; what is
    # left to check is that every entry is a well-defined extended value.
    for e, val in t.items():
        if isinstance(val, float) and math.isnan(val):
            rep.fail(axiom, [e], val)
    rep.notes[f"{axiom}-chains"] = "stabilized"
    rep.ok(axiom)


def validate_fuzzy_measure(m: _Table) -> ValidationReport:
    """Exhaustively check the four fuzzy-measure clauses plus the value range."""
    rep = ValidationReport("fuzzy measure")
    for e, val in m.items():
        if val == NEG_INF:
            rep.fail("measure-range", [e], val, note="-inf is not allowed")
    rep.ok("measure-range")
    _check_bottom(rep, "measure-bottom", m)
    _check_order(rep, m, "measure-monotone", +1)
    _check_modular(rep, m, "measure-modular")
    _check_continuity(rep, m, "measure-continuity")
    return rep


def validate_signed_measure(nu: _Table) -> ValidationReport:
    """Check the signed-measure clauses, including the one-sign-of-infinity rule."""
    rep = ValidationReport("fuzzy signed measure")
    actual = infinity_sign_of(nu.values)
    declared = getattr(nu, "infinity_sign", actual)
    if actual == MIXED:
        pl = next(e for e, v in nu.items() if v == INF)
        mi = next(e for e, v in nu.items() if v == NEG_INF)
        rep.fail("signed-infinity-sign", [pl, mi], INF, NEG_INF, note="both infinities present")
    elif actual != NONE and declared not in (actual, MIXED):
        e = next(e for e, v in nu.items() if not is_finite(v))
        rep.fail("signed-infinity-sign", [e], nu(e), note=f"declared {declared}")
    rep.ok("signed-infinity-sign")
    _check_bottom(rep, "signed-bottom", nu)
    _check_order(rep, nu, "signed-monotone-nonneg", +1)
    _check_order(rep, nu, "signed-antitone-nonpos", -1)
    _check_modular(rep, nu, "signed-modular")
    _check_continuity(rep, nu, "signed-continuity")
    return rep


def _grade_table(table, q: int, label: str) -> list:
    if isinstance(table, Mapping):
        out = []
        for k in range(q + 1):
            hits = [v for g, v in table.items() if to_value(g) * q == k]
            if not hits:
                raise IncompleteGeneratorError(f"table for point {label!r} has no value at grade {k}/{q}")
            out.append(to_value(hits[0]))
    elif callable(table):
        out = [to_value(table(Fraction(k, q))) for k in range(q + 1)]
    else:
        out = [to_value(v) for v in table]
        if len(out) != q + 1:
            raise IncompleteGeneratorError(
                f"table for point {label!r} has {len(out)} entries, expected {q + 1}"
            )
    if out[0] != 0:
        raise IncompleteGeneratorError(f"table for point {label!r} must vanish at grade 0, got {out[0]}")
    return out


def coordinatewise_measure(family: FuzzyFamily, tables) -> FuzzyMeasure | SignedMeasure:
    """``m(mu) = sum_x g_x(mu(x))`` for per-point tables ``g_x``.

    ``tables`` is a sequence in universe order or a mapping from point label;
    each table is a length ``q+1`` sequence indexed by grade numerator, a
    mapping grade -> value, or a callable on grades.  Modularity is automatic
    because ``min(s, t) + max(s, t) == s + t``.

    Returns a :class:`FuzzyMeasure` when every ``g_x`` is nonnegative and
    nondecreasing, otherwise a validated :class:`SignedMeasure`.
    """
    q = family.resolution
    labels = family.universe.points
    if isinstance(tables, Mapping):
        missing = [x for x in labels if x not in tables]
        if missing:
            raise IncompleteGeneratorError(f"no table for points {missing}")
        tables = [tables[x] for x in labels]
    tables = list(tables)
    if len(tables) != len(labels):
        raise IncompleteGeneratorError(f"expected {len(labels)} tables, got {len(tables)}")
    g = [_grade_table(t, q, x) for t, x in zip(tables, labels)]

    values = []
    for e in family.elements:
        total = 0
        for gx, k in zip(g, e.numerators):
            total = add(total, gx[k])
        values.append(total)

    monotone = all(gx[k] <= gx[k + 1] for gx in g for k in range(q)) and all(
        v >= 0 for gx in g for v in gx
    )
    if monotone:
        return FuzzyMeasure(family, values)
    nu = SignedMeasure(family, values)
    nu.report = validate_signed_measure(nu)
    return nu


def linear_measure(family: FuzzyFamily, weights: Sequence) -> FuzzyMeasure | SignedMeasure:
    """``sum_x w_x * mu(x)``."""
    q = family.resolution
    return coordinatewise_measure(
        family, [[to_value(w) * Fraction(k, q) for k in range(q + 1)] for w in weights]
    )


def zero_measure(family: FuzzyFamily) -> FuzzyMeasure:
    return FuzzyMeasure(family, [0] * len(family))


def difference_measure(m1: _Table, m2: _Table) -> SignedMeasure:
    """``m1 - m2`` on a shared family, validated; the report is attached as ``.report``."""
    if m1.family != m2.family:
        raise ValueError("measures live on different families")
    if any(v == INF for v in m1.values) and any(v == INF for v in m2.values):
        raise IllDefinedDifferenceError("both measures attain +inf; their difference is undefined")
    nu = SignedMeasure(m1.family, [sub(a, b) for a, b in zip(m1.values, m2.values)])
    nu.report = validate_signed_measure(nu)
    return nu


def negate(nu: _Table) -> SignedMeasure:
    return SignedMeasure(nu.family, [-v for v in nu.values])


def as_signed(m: _Table) -> SignedMeasure:
    if isinstance(m, SignedMeasure):
        return m
    return SignedMeasure(m.family, m.values)


def map_values(m: _Table, fn: Callable) -> _Table:
    return type(m)(m.family, [fn(e, v) for e, v in m.items()])
