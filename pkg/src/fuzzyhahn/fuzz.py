"""Randomized campaigns over the positive-set, extension and decomposition claims.

Each trial builds a standalone instance dict (with a ``replay`` section naming
the check and its parameters) and evaluates it through :func:`evaluate`.  A
finding file is exactly that dict, so replaying it runs the same code path.

Trial outcome statuses: ``pass``; ``deviation`` when the mathematical claim
fails on the instance (an expected kind of result for fuzzy analogues); and
``error`` when an internal consistency check fails (trace invalid, oracle
disagreement), which indicates a bug.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import generators as gen
from .caratheodory import ADDITIVE, extend_measure, outer_from_covers, validate_outer
from .hahn import (
    check_trace,
    classify,
    extract_positive_subset,
    hahn_report,
    oracle_positive_subset,
    positive_mask,
)
from .instance import Instance, dumps, instance_dict, vec
from .sigma import full_cube
from .values import fmt

CHECKS = ("lemma1", "lemma2", "prop1", "thm2", "hahn")
PASS, DEVIATION, ERROR = "pass", "deviation", "error"


@dataclass
class Outcome:
    status: str
    details: dict = field(default_factory=dict)


def _lemma1(inst: Instance, rp: dict) -> Outcome:
    nu = inst.signed("nu")
    p1, p2 = inst.set(rp["sets"]["P1"]), inst.set(rp["sets"]["P2"])
    c1, c2 = classify(nu, p1), classify(nu, p2)
    if not (c1.is_positive and c2.is_positive):
        return Outcome(ERROR, {"reason": "replay sets are not positive"})
    cert = classify(nu, p1 | p2)
    return Outcome(PASS if cert.is_positive else DEVIATION, {"join": cert.to_json()})


def _lemma2(inst: Instance, rp: dict) -> Outcome:
    nu = inst.signed("nu")
    e = inst.set(rp["sets"]["E"])
    trace = extract_positive_subset(nu, e)
    trep = check_trace(nu, trace)
    oracle = oracle_positive_subset(nu, e)
    details = {
        "steps": [{"n": s.n, "set": vec(s.set), "value": fmt(s.value)} for s in trace.steps],
        "candidate_A": vec(trace.candidate_A),
        "value_A": fmt(trace.value_A),
        "certificate": trace.certificate.to_json(),
        "trace_valid": trep.passed,
        "oracle": None if oracle is None else oracle.to_json(),
    }
    if not trep.passed:
        details["trace_report"] = trep.to_json()
        return Outcome(ERROR, details)
    if oracle is not None and not oracle.reverify(nu):
        return Outcome(ERROR, details)
    if oracle is None:
        details["claim"] = "no positive subset of positive measure exists"
        return Outcome(DEVIATION, details)
    return Outcome(PASS if trace.succeeded else DEVIATION, details)


def _prop1(inst: Instance, rp: dict) -> Outcome:
    rep = validate_outer(outer_from_covers(inst.cover_system()))
    return Outcome(PASS if rep.passed else DEVIATION, {"outer": rep.to_json()})


def _thm2(inst: Instance, rp: dict) -> Outcome:
    m = inst.measure(rp.get("measure", "m"))
    res = extend_measure(m, rp.get("criterion", ADDITIVE))
    details = {"clauses": res.clauses()}
    for key, rep in (
        ("outer", res.outer_report),
        ("agreement", res.agreement_report),
        ("membership", res.membership_report),
        ("extension", res.extension_report),
    ):
        if not rep.passed:
            details[key] = rep.to_json()
    return Outcome(PASS if res.passed else DEVIATION, details)


def _hahn(inst: Instance, rp: dict) -> Outcome:
    rep = hahn_report(inst.signed("nu"))
    details = {"report": rep.to_json()}
    if not rep.verdicts["oracle-lambda"]:
        return Outcome(ERROR, details)
    return Outcome(PASS if rep.passed else DEVIATION, details)


_EVALUATORS = {"lemma1": _lemma1, "lemma2": _lemma2, "prop1": _prop1, "thm2": _thm2, "hahn": _hahn}


def evaluate(inst: Instance) -> Outcome:
    """Run the check named in the instance's ``replay`` section."""
    rp = inst.data["replay"]
    return _EVALUATORS[rp["check"]](inst, rp)


@dataclass
class FuzzOptions:
    check: str
    trials: int = 100
    seed: int = 0
    max_points: int = 3
    max_resolution: int = 3
    full_cube_only: bool = False
    signed_kind: str = "difference"
    criterion: str = ADDITIVE


def _draw(rng: random.Random, opts: FuzzOptions):
    u = gen.random_universe(rng, opts.max_points)
    q = rng.randint(1, opts.max_resolution)
    alg = gen.random_algebra(rng, u, q, 1.0 if opts.full_cube_only else 0.5)
    return u, q, alg


def make_trial(opts: FuzzOptions, trial: int) -> dict:
    """Instance dict for one trial, fully determined by ``(seed, check, trial)``."""
    rng = random.Random(f"{opts.seed}/{opts.check}/{trial}")
    check = opts.check
    while True:
        u, q, alg = _draw(rng, opts)
        if check == "prop1":
            cs = gen.random_cover_system(rng, u, q)
            return instance_dict(full_cube(q, u), cover_system=cs, replay={"check": "prop1"})
        if check == "thm2":
            m = gen.random_fuzzy_measure(rng, alg)
            return instance_dict(
                alg, measures={"m": m}, replay={"check": "thm2", "measure": "m", "criterion": opts.criterion}
            )
        nu = gen.random_signed_measure(rng, alg, opts.signed_kind)
        if check == "hahn":
            return instance_dict(alg, signed={"nu": nu}, replay={"check": "hahn"})
        if check == "lemma1":
            pos = [alg[i] for i in np.flatnonzero(positive_mask(nu))]
            p1, p2 = rng.choice(pos), rng.choice(pos)
            return instance_dict(
                alg, signed={"nu": nu}, replay={"check": "lemma1", "sets": {"P1": vec(p1), "P2": vec(p2)}}
            )
        if check == "lemma2":
            cands = [e for e, v in nu.items() if v > 0]
            if not cands:
                continue  # redraw: the extraction needs 0 < nu(E) < inf
            e = rng.choice(cands)
            return instance_dict(alg, signed={"nu": nu}, replay={"check": "lemma2", "sets": {"E": vec(e)}})
        raise ValueError(f"unknown check {check!r}")


def run_campaign(opts: FuzzOptions, findings_dir: str | Path | None = None) -> dict:
    """Run ``opts.trials`` trials; returns the report body (deterministic for a fixed seed)."""
    if opts.check not in CHECKS:
        raise ValueError(f"unknown check {opts.check!r}")
    counts = {PASS: 0, DEVIATION: 0, ERROR: 0}
    clause_failures: dict[str, int] = {}
    findings = []
    for t in range(opts.trials):
        data = make_trial(opts, t)
        out = evaluate(Instance(data))
        counts[out.status] += 1
        for k, ok in out.details.get("clauses", {}).items():
            if not ok:
                clause_failures[k] = clause_failures.get(k, 0) + 1
        if out.status != PASS:
            entry = {"trial": t, "status": out.status, "digest": Instance(data).digest}
            if findings_dir is not None:
                d = Path(findings_dir)
                d.mkdir(parents=True, exist_ok=True)
                name = f"{opts.check}-{len(findings) + 1:04d}.json"
                (d / name).write_text(dumps(data), encoding="utf-8")
                entry["file"] = name
            if len(findings) < 20:
                entry["details"] = out.details
            findings.append(entry)
    body = {
        "check": opts.check,
        "options": {
            "trials": opts.trials,
            "seed": opts.seed,
            "max_points": opts.max_points,
            "max_resolution": opts.max_resolution,
            "full_cube_only": opts.full_cube_only,
            "signed_kind": opts.signed_kind,
            "criterion": opts.criterion,
        },
        "counts": counts,
        "findings": findings,
    }
    if clause_failures:
        body["clause_failures"] = dict(sorted(clause_failures.items()))
    return body


def replay(path) -> Outcome:
    return evaluate(Instance.load(path))
