"""Positive and negative fuzzy sets, positive-subset extraction, Hahn decomposition.

A set ``S`` of the algebra is *positive* when every member of the algebra
below it has signed measure ``>= 0`` and *negative* when every such member has
measure ``<= 0``.  The bottom set is both; its verdict is "positive".

Nothing here presumes that the decomposition theorem holds.  The
constructors build the candidate sets, and the certificates say whether the
expected properties hold on the given instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BadInputError, DomainMismatchError, NotAMemberError, UnsupportedSignError
from .lattice import FuzzySet, complement, inf_of, leq, meet, sup_of
from .measures import _Table
from .report import ValidationReport
from .values import INF, fmt, is_finite

POSITIVE, NEGATIVE, NEITHER = "positive", "negative", "neither"
COMPLEMENT_MODE, LITERAL_MODE = "complement", "literal"


@dataclass(frozen=True)
class PositivityCertificate:
    """Verdict on one set plus the subsets that justify it.

    ``negative_witness``/``positive_witness`` are ``(subset, value)`` pairs with
    value ``< 0`` / ``> 0``; the first such subset in canonical order.
    """

    set: FuzzySet
    verdict: str
    is_positive: bool
    is_negative: bool
    negative_witness: tuple | None = None
    positive_witness: tuple | None = None

    def reverify(self, nu: _Table) -> bool:
        """Recheck the verdict and the witnesses against ``nu`` by enumeration."""
        below = [(e, v) for e, v in nu.items() if leq(e, self.set)]
        pos = all(v >= 0 for _, v in below)
        neg = all(v <= 0 for _, v in below)
        if (pos, neg) != (self.is_positive, self.is_negative):
            return False
        for w, sign in ((self.negative_witness, -1), (self.positive_witness, 1)):
            if w is not None:
                e, v = w
                if not leq(e, self.set) or nu(e) != v or v * sign <= 0:
                    return False
        if self.verdict == NEITHER:
            return self.negative_witness is not None and self.positive_witness is not None
        return self.verdict == (POSITIVE if pos else NEGATIVE)

    def to_json(self) -> dict:
        def w(x):
            return None if x is None else {"set": list(x[0].numerators), "value": fmt(x[1])}

        return {
            "set": list(self.set.numerators),
            "verdict": self.verdict,
            "is_positive": self.is_positive,
            "is_negative": self.is_negative,
            "negative_witness": w(self.negative_witness),
            "positive_witness": w(self.positive_witness),
        }


def classify(nu: _Table, s: FuzzySet) -> PositivityCertificate:
    """Positive, negative or neither, by enumerating the members of the algebra below ``s``."""
    fam = nu.family
    i = fam.index_of(s)
    neg_w = pos_w = None
    for j in np.flatnonzero(fam.leq_table[:, i]):
        v = nu.values[j]
        if v < 0 and neg_w is None:
            neg_w = (fam.elements[j], v)
        elif v > 0 and pos_w is None:
            pos_w = (fam.elements[j], v)
    is_pos, is_neg = neg_w is None, pos_w is None
    verdict = POSITIVE if is_pos else NEGATIVE if is_neg else NEITHER
    return PositivityCertificate(s, verdict, is_pos, is_neg, neg_w, pos_w)


def positive_mask(nu: _Table) -> np.ndarray:
    """Boolean mask over the algebra: which members are positive sets."""
    fam = nu.family
    neg = np.array([v < 0 for v in nu.values], dtype=bool)
    return ~np.any(fam.leq_table & neg[:, None], axis=0)


def negative_mask(nu: _Table) -> np.ndarray:
    fam = nu.family
    pos = np.array([v > 0 for v in nu.values], dtype=bool)
    return ~np.any(fam.leq_table & pos[:, None], axis=0)


def smallest_index(value) -> int:
    """Smallest positive integer ``n`` with ``value < -1/n``; ``value`` must be negative."""
    if not value < 0:
        raise ValueError(f"{value} is not negative")
    if not is_finite(value):
        return 1
    return math.floor(Fraction(-1) / Fraction(value)) + 1


@dataclass(frozen=True)
class ExtractionStep:
    n: int
    set: FuzzySet
    value: object
    frontier: FuzzySet


@dataclass
class ExtractionTrace:
    start: FuzzySet
    mode: str
    steps: list[ExtractionStep]
    candidate_A: FuzzySet
    value_A: object
    certificate: PositivityCertificate
    stop_reason: str

    @property
    def succeeded(self) -> bool:
        """Whether the candidate is a positive set with positive measure."""
        return self.certificate.is_positive and self.value_A > 0


def _next_frontier(start, chosen, mode):
    if not chosen:
        return start
    if mode == COMPLEMENT_MODE:
        return meet(start, inf_of([complement(e) for e in chosen]))
    return meet(start, inf_of(chosen))


def extract_positive_subset(nu: _Table, e: FuzzySet, mode: str = COMPLEMENT_MODE) -> ExtractionTrace:
    """Run the stepwise stripping of negative subsets from ``e``.

    Step ``k`` looks at the frontier ``e & ~E_1 & ... & ~E_{k-1}`` (or
    ``e & E_1 & ... & E_{k-1}`` with ``mode="literal"``).  If it is not
    positive, it picks the smallest ``n_k`` for which some not-yet-chosen member
    ``E_k`` below the frontier has ``nu(E_k) < -1/n_k``, taking the canonically
    first such ``E_k``.  The loop stops when the frontier is positive or nothing
    is eligible.  The candidate is ``e & ~(E_1 | ... | E_k)``; its certificate may
    well be non-positive.
    """
    if mode not in (COMPLEMENT_MODE, LITERAL_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    fam = nu.family
    if e not in fam:
        raise NotAMemberError(f"{e!r} is not in the algebra")
    ve = nu(e)
    if not (0 < ve and is_finite(ve)):
        raise BadInputError(f"need 0 < nu(E) < inf, got nu(E) = {ve}")

    steps: list[ExtractionStep] = []
    chosen: list[FuzzySet] = []
    chosen_idx: set[int] = set()
    while True:
        frontier = _next_frontier(e, chosen, mode)
        fi = fam.index_of(frontier)
        if classify(nu, frontier).is_positive:
            reason = "frontier positive"
            break
        eligible = [
            j
            for j in np.flatnonzero(fam.leq_table[:, fi])
            if j not in chosen_idx and nu.values[j] < 0
        ]
        if not eligible:
            reason = "no eligible set"
            break
        n = smallest_index(min(nu.values[j] for j in eligible))
        bound = Fraction(-1, n)
        j = next(j for j in eligible if nu.values[j] < bound)
        chosen.append(fam.elements[j])
        chosen_idx.add(int(j))
        steps.append(ExtractionStep(n, fam.elements[j], nu.values[j], frontier))

    cand = meet(e, complement(sup_of(chosen))) if chosen else e
    cert = classify(nu, cand)
    return ExtractionTrace(e, mode, steps, cand, nu(cand), cert, reason)


def check_trace(nu: _Table, trace: ExtractionTrace) -> ValidationReport:
    """Re-derive every step of an extraction trace by brute force."""
    rep = ValidationReport("positive-subset extraction trace")
    members = list(nu.items())
    chosen: list[FuzzySet] = []
    for k, st in enumerate(trace.steps):
        frontier = _next_frontier(trace.start, chosen, trace.mode)
        if st.frontier != frontier:
            rep.fail("frontier", [st.frontier, frontier], note=f"step {k + 1}")
        if all(v >= 0 for d, v in members if leq(d, frontier)):
            rep.fail("continued-past-positive", [frontier], note=f"step {k + 1}")
        if not leq(st.set, frontier):
            rep.fail("below-frontier", [st.set, frontier], note=f"step {k + 1}")
        if st.set in chosen:
            rep.fail("distinct", [st.set], note=f"step {k + 1}")
        if nu(st.set) != st.value or not st.value < Fraction(-1, st.n):
            rep.fail("bound", [st.set], st.value, Fraction(-1, st.n), note=f"step {k + 1}")
        eligible = [(d, v) for d, v in members if leq(d, frontier) and d not in chosen]
        for n in range(1, st.n):
            hit = next((d for d, v in eligible if v < Fraction(-1, n)), None)
            if hit is not None:
                rep.fail("n-minimal", [hit], nu(hit), Fraction(-1, n), note=f"step {k + 1}: n={n} admits a set")
                break
        first = next((d for d, v in eligible if v < Fraction(-1, st.n)), None)
        if first != st.set:
            rep.fail("canonical-tie-break", [st.set] + ([first] if first else []), note=f"step {k + 1}")
        chosen.append(st.set)

    frontier = _next_frontier(trace.start, chosen, trace.mode)
    positive = all(v >= 0 for d, v in members if leq(d, frontier))
    eligible = [d for d, v in members if leq(d, frontier) and d not in chosen and v < 0]
    if not positive and eligible:
        rep.fail("terminated-early", [frontier, eligible[0]])
    for ax in ("frontier", "continued-past-positive", "below-frontier", "distinct", "bound",
               "n-minimal", "canonical-tie-break", "terminated-early"):
        rep.ok(ax)

    cand = meet(trace.start, complement(sup_of(chosen))) if chosen else trace.start
    if cand != trace.candidate_A or nu(cand) != trace.value_A:
        rep.fail("candidate", [trace.candidate_A, cand])
    rep.ok("candidate")
    if trace.certificate.set != cand or not trace.certificate.reverify(nu):
        rep.fail("certificate", [cand])
    rep.ok("certificate")
    return rep


def oracle_positive_subset(nu: _Table, e: FuzzySet) -> PositivityCertificate | None:
    """Canonically first positive set ``A <= e`` in the algebra with ``nu(A) > 0``, by enumeration."""
    members = list(nu.items())
    for a, va in members:
        if not leq(a, e) or not va > 0:
            continue
        if all(v >= 0 for d, v in members if leq(d, a)):
            return classify(nu, a)
    return None


@dataclass
class HahnDecomposition:
    A: FuzzySet
    B: FuzzySet
    lam: object
    cert_A: PositivityCertificate
    cert_B: PositivityCertificate
    overlap_value: object
    partition_ok: bool
    nu_A: object
    positive_sets: list[FuzzySet] = field(repr=False, default_factory=list)

    def conclusions(self) -> dict[str, bool]:
        return {
            "A-positive": self.cert_A.is_positive,
            "B-negative": self.cert_B.is_negative,
            "overlap-zero": self.overlap_value == 0,
            "partition": self.partition_ok,
            "nu(A)=lambda": self.nu_A == self.lam,
        }

    @property
    def holds(self) -> bool:
        return all(self.conclusions().values())


def _reject_plus_inf(nu: _Table):
    if any(v == INF for v in nu.values):
        raise UnsupportedSignError("signed measure attains +inf; decompose its negation instead")


def hahn_decompose(nu: _Table) -> HahnDecomposition:
    """``A`` = join of every positive set, ``B = ~A``, ``lam`` = max of ``nu`` over positive sets."""
    _reject_plus_inf(nu)
    fam = nu.family
    mask = positive_mask(nu)
    positives = [fam.elements[i] for i in np.flatnonzero(mask)]
    a = sup_of(positives)
    if a not in fam:
        raise DomainMismatchError(f"join of the positive sets {a!r} is outside the family")
    b = complement(a)
    if b not in fam:
        raise DomainMismatchError(f"complement {b!r} is outside the family")
    lam = max(nu.values[i] for i in np.flatnonzero(mask))
    q = fam.resolution
    partition = all(x + y == q for x, y in zip(a.numerators, b.numerators))
    return HahnDecomposition(
        A=a,
        B=b,
        lam=lam,
        cert_A=classify(nu, a),
        cert_B=classify(nu, b),
        overlap_value=nu(meet(a, b)),
        partition_ok=partition,
        nu_A=nu(a),
        positive_sets=positives,
    )


def oracle_hahn(nu: _Table):
    """``(lam, argmax)`` by classifying every member independently of the numpy path."""
    _reject_plus_inf(nu)
    members = list(nu.items())
    positives = [(e, v) for e, v in members if all(w >= 0 for d, w in members if leq(d, e))]
    lam = max(v for _, v in positives)
    return lam, [e for e, v in positives if v == lam]


def hahn_report(nu: _Table, dec: HahnDecomposition | None = None) -> ValidationReport:
    """Decomposition conclusions plus the oracle cross-check, as one report."""
    dec = dec or hahn_decompose(nu)
    rep = ValidationReport("Hahn decomposition")
    checks = dec.conclusions()
    if not checks["A-positive"]:
        rep.fail("A-positive", [dec.A, dec.cert_A.negative_witness[0]], dec.cert_A.negative_witness[1], 0)
    if not checks["B-negative"]:
        rep.fail("B-negative", [dec.B, dec.cert_B.positive_witness[0]], dec.cert_B.positive_witness[1], 0)
    if not checks["overlap-zero"]:
        rep.fail("overlap-zero", [meet(dec.A, dec.B)], dec.overlap_value, 0)
    if not checks["partition"]:
        rep.fail("partition", [dec.A, dec.B])
    if not checks["nu(A)=lambda"]:
        rep.fail("nu(A)=lambda", [dec.A], dec.nu_A, dec.lam)
    for k in checks:
        rep.ok(k)
    lam, argmax = oracle_hahn(nu)
    if lam != dec.lam:
        rep.fail("oracle-lambda", [dec.A], dec.lam, lam)
    rep.ok("oracle-lambda")
    rep.notes["oracle_argmax"] = argmax
    return rep
