"""Acceptance criteria, one test each.

Every test records a one-line verdict that the terminal summary prints, so a
plain ``pytest`` run ends with a PASS/FAIL line per criterion.  Criteria that
fail here fail for mathematical reasons shown in the recorded counts; the
thresholds are the stated ones.
"""

import random
import time
from fractions import Fraction as F

from fuzzyhahn import (
    FuzzyMeasure,
    OuterMeasure,
    SignedMeasure,
    Universe,
    check_trace,
    classify,
    coordinatewise_measure,
    extract_positive_subset,
    full_cube,
    hahn_report,
    measurability_witness,
    negate,
    oracle_positive_subset,
    outer_from_covers,
    outer_from_measure,
    validate_fuzzy_measure,
    validate_outer,
    validate_signed_measure,
)
from fuzzyhahn import generators as gen
from fuzzyhahn.cli import main
from fuzzyhahn.fuzz import FuzzOptions, make_trial, run_campaign
from fuzzyhahn.instance import Instance

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str, elapsed: float, limit: float | None):
    timed = elapsed <= limit if limit is not None else True
    line = f"criterion {n}: {'PASS' if ok and timed else 'FAIL'}  {detail}  ({elapsed:.2f} s"
    line += f" / limit {limit:g} s)" if limit is not None else ")"
    RESULTS[n] = line
    assert ok, line
    assert timed, line


def zero_one(cube, cls):
    return cls(cube, [0 if e.is_bottom() else 1 for e in cube])


def test_criterion_1_zero_one_outer_not_measure():
    t0 = time.perf_counter()
    cube = full_cube(1, Universe(["a", "b"]))
    outer_ok = validate_outer(zero_one(cube, OuterMeasure)).passed
    rep = validate_fuzzy_measure(zero_one(cube, FuzzyMeasure))
    ws = rep.witnesses_for("measure-modular")
    ok = outer_ok and rep.failed_axioms() == ["measure-modular"] and bool(ws)
    if ws:
        mu, eta, jo, me = ws[0].sets
        v = {e: (0 if e.is_bottom() else 1) for e in cube}
        ok = ok and v[jo] + v[me] == ws[0].lhs and v[mu] + v[eta] == ws[0].rhs and ws[0].lhs != ws[0].rhs
    record(1, ok, f"outer={outer_ok}, measure failures={rep.failed_axioms()}", time.perf_counter() - t0, 1)


def test_criterion_2_cover_outer_measures():
    t0 = time.perf_counter()
    passed = 0
    for t in range(200):
        rng = random.Random(f"acceptance/prop1/{t}")
        u = gen.random_universe(rng, 3)
        q = rng.randint(1, 3)
        cs = gen.random_cover_system(rng, u, q, max_family=6)
        assert len(cs.family) <= 6
        passed += validate_outer(outer_from_covers(cs)).passed
    record(2, passed == 200, f"{passed}/200 cover systems give a valid outer measure", time.perf_counter() - t0, 30)


def test_criterion_3_outer_from_measure():
    t0 = time.perf_counter()
    outer_ok = agree_ok = 0
    for t in range(100):
        rng = random.Random(f"acceptance/thm2/{t}")
        u = gen.random_universe(rng, 3)
        q = rng.randint(1, 2)
        alg = gen.random_algebra(rng, u, q)
        m = gen.random_fuzzy_measure(rng, alg)
        o = outer_from_measure(m)
        outer_ok += validate_outer(o).passed
        agree_ok += all(o(e) == v for e, v in m.items())
    ok = outer_ok == 100 and agree_ok == 100
    record(
        3, ok, f"valid outer {outer_ok}/100, agreement on sigma {agree_ok}/100", time.perf_counter() - t0, 60
    )


ZERO_ONE_OUTER = {
    "format": "fuzzyhahn-instance/1",
    "universe": ["a", "b"],
    "resolution": 2,
    "algebra": {"mode": "generated", "generators": []},
    "measures": {"m": {"form": "table", "values": [[[0, 0], "0"], [[1, 1], "1"], [[2, 2], "1"]]}},
}


def test_criterion_4_measurability_criteria(tmp_path):
    import json

    t0 = time.perf_counter()
    path = tmp_path / "zero_one.json"
    path.write_text(json.dumps(ZERO_ONE_OUTER))
    inst = Instance.load(path)
    o = outer_from_measure(inst.measure("m"))
    assert all(o(e) == (0 if e.is_bottom() else 1) for e in o.family)

    codes, reps = {}, {}
    for crit in ("additive", "max"):
        out = tmp_path / f"{crit}.json"
        codes[crit] = main(["extend", str(path), "--measure", "m", "--criterion", crit, "--out", str(out)])
        reps[crit] = json.loads(out.read_text())

    add = reps["additive"]["reports"]["class-is-algebra"]
    add_ok = not add["passed"] and add["witnesses"][0]["axiom"] == "sigma-constants"
    half = inst.set(add["witnesses"][0]["sets"][0]) if add_ok else None
    # re-verify: the constant 1/2 really fails the additive split
    add_ok = add_ok and half.grades == (F(1, 2), F(1, 2)) and measurability_witness(o, half, "additive") is not None

    mx = reps["max"]
    mx_ok = mx["checks"]["class-is-algebra"] and mx["measurable_class_size"] == len(o.family)
    w = mx["reports"]["restriction-is-measure"]["witnesses"][0]
    mu, eta, jo, me = (inst.set(v) for v in w["sets"])
    mx_ok = mx_ok and w["axiom"] == "measure-modular" and o(jo) + o(me) != o(mu) + o(eta)

    ok = codes == {"additive": 3, "max": 3} and add_ok and mx_ok
    record(4, ok, f"exit codes {codes}, additive closure witness ok={add_ok}, max modularity witness ok={mx_ok}",
           time.perf_counter() - t0, 5)


def test_criterion_5_join_of_positive_sets():
    t0 = time.perf_counter()
    body = run_campaign(FuzzOptions("lemma1", trials=1000, seed=7))
    n = body["counts"]["pass"]
    record(5, n == 1000, f"{n}/1000 joins positive", time.perf_counter() - t0, 30)


def test_criterion_6_extraction_traces():
    t0 = time.perf_counter()
    valid = 0
    opts = FuzzOptions("lemma2", trials=500, seed=0)
    for t in range(500):
        inst = Instance(make_trial(opts, t))
        nu = inst.signed("nu")
        e = inst.set(inst.data["replay"]["sets"]["E"])
        valid += check_trace(nu, extract_positive_subset(nu, e)).passed

    cube = full_cube(2, Universe(["a", "b"]))
    nu = coordinatewise_measure(cube, [lambda t: t, lambda t: -t])
    e = cube.make((2, 1))
    tr = extract_positive_subset(nu, e)
    cert = tr.certificate
    b_ok = (
        cert.verdict == "neither"
        and cert.negative_witness[0].numerators == (0, 1)
        and cert.reverify(nu)
        and check_trace(nu, tr).passed
    )
    orc = oracle_positive_subset(nu, e)
    b_ok = b_ok and orc is not None and orc.reverify(nu) and orc.is_positive and nu(orc.set) > 0
    b_ok = b_ok and classify(nu, orc.set).is_positive
    ok = valid == 500 and b_ok
    record(6, ok, f"(a) {valid}/500 traces valid, (b) failure instance verified={b_ok}",
           time.perf_counter() - t0, 30)


def test_criterion_7_hahn_pipeline():
    t0 = time.perf_counter()
    passed = 0
    failures: dict[str, int] = {}
    for t in range(500):
        rng = random.Random(f"acceptance/hahn/{t}")
        cube = full_cube(rng.randint(1, 3), gen.random_universe(rng, 3))
        nu = gen.random_signed_measure(rng, cube, "difference")
        rep = hahn_report(nu)
        passed += rep.passed
        for ax in rep.failed_axioms():
            failures[ax] = failures.get(ax, 0) + 1
    record(7, passed == 500, f"{passed}/500 decompositions satisfy every conclusion; failures {failures}",
           time.perf_counter() - t0, 60)


def test_criterion_8_mutation_detection():
    t0 = time.perf_counter()
    caught = 0
    for t in range(100):
        rng = random.Random(f"acceptance/mutation/{t}")
        u = gen.random_universe(rng, 3, min_points=2)
        cube = full_cube(rng.randint(1, 3), u)
        m = gen.random_fuzzy_measure(rng, cube)
        signed = t % 2 == 1
        base = negate(m) if signed else m
        vals = list(base.values)
        i = rng.randrange(len(vals))
        vals[i] += F(rng.randint(1, 8), rng.randint(1, 4)) * rng.choice((1, -1))
        if signed:
            flagged = not validate_signed_measure(SignedMeasure(cube, vals)).passed
        else:
            flagged = not validate_fuzzy_measure(FuzzyMeasure(cube, vals)).passed
        caught += flagged
    record(8, caught == 100, f"{caught}/100 perturbations flagged", time.perf_counter() - t0, 30)


def test_criterion_9_fuzz_determinism(tmp_path, monkeypatch):
    t0 = time.perf_counter()
    blobs = []
    for k in range(2):
        d = tmp_path / f"run{k}"
        d.mkdir()
        monkeypatch.chdir(d)
        main(["fuzz", "--check", "hahn", "--trials", "100", "--seed", "42", "--out", "report.json"])
        files = sorted((d / "findings").iterdir()) if (d / "findings").exists() else []
        blobs.append([(d / "report.json").read_bytes()] + [p.read_bytes() for p in files])
    ok = blobs[0] == blobs[1]
    record(9, ok, f"two seeded runs byte-identical={ok} ({len(blobs[0]) - 1} finding files)",
           time.perf_counter() - t0, None)
