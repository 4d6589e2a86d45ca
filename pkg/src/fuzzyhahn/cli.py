"""Command line front end.

Exit codes: 0 all checks pass; 1 an axiom check failed (or an internal
consistency check did); 2 input error; 3 a mathematical deviation was found
and reported.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .caratheodory import CRITERIA, extend_measure
from .errors import FuzzyHahnError, InstanceError, UnsupportedSignError
from .fuzz import CHECKS, DEVIATION, ERROR, FuzzOptions, evaluate, run_campaign
from .generators import SIGNED_KINDS
from .hahn import hahn_decompose, hahn_report
from .instance import Instance, skeleton, vec
from .measures import as_signed, validate_fuzzy_measure, validate_signed_measure
from .sigma import is_algebra
from .values import fmt

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DEVIATION = 0, 1, 2, 3

# a signed measure is refused for decomposition only when one of these fails
CORE_SIGNED_AXIOMS = ("signed-infinity-sign", "signed-bottom", "signed-modular")


class _Run:
    def __init__(self, command: str, args):
        self.command = command
        self.args = args
        self.report: dict = {"tool": "fuzzyhahn", "version": __version__, "command": command}
        self.t0 = time.perf_counter()

    def finish(self, code: int) -> int:
        self.report["exit_code"] = code
        self.report["status"] = {0: "pass", 1: "fail", 2: "input-error", 3: "deviation"}[code]
        if getattr(self.args, "timing", False):
            self.report["timing_seconds"] = round(time.perf_counter() - self.t0, 6)
        text = json.dumps(self.report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        out = getattr(self.args, "out", None)
        if out:
            Path(out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return code


def _load(run: _Run) -> Instance:
    inst = Instance.load(run.args.instance)
    run.report["instance_digest"] = inst.digest
    return inst


def cmd_validate(args) -> int:
    run = _Run("validate", args)
    try:
        inst = _load(run)
        alg = inst.algebra
        reports = {"algebra": is_algebra(alg).to_json()}
        for name in inst.measure_names():
            reports[f"measures.{name}"] = validate_fuzzy_measure(inst.measure(name)).to_json()
        for name in inst.signed_names():
            reports[f"signed.{name}"] = validate_signed_measure(inst.signed(name)).to_json()
    except InstanceError as exc:
        run.report["error"] = str(exc)
        return run.finish(EXIT_INPUT)
    run.report["algebra_size"] = len(alg)
    run.report["checks"] = {k: r["passed"] for k, r in reports.items()}
    run.report["reports"] = reports
    return run.finish(EXIT_OK if all(run.report["checks"].values()) else EXIT_FAIL)


def cmd_extend(args) -> int:
    run = _Run("extend", args)
    run.report["criterion"] = args.criterion
    try:
        inst = _load(run)
        m = inst.measure(args.measure)
    except InstanceError as exc:
        run.report["error"] = str(exc)
        return run.finish(EXIT_INPUT)
    run.report["measure"] = args.measure
    vrep = validate_fuzzy_measure(m)
    if not vrep.passed:
        run.report["error"] = "not a fuzzy measure; refusing to extend"
        run.report["validation"] = vrep.to_json()
        return run.finish(EXIT_FAIL)
    res = extend_measure(m, args.criterion)
    run.report["checks"] = res.clauses()
    run.report["measurable_class_size"] = len(res.measurable_class)
    run.report["measurable_class"] = [vec(e) for e in res.measurable_class]
    run.report["outer"] = [[vec(e), fmt(v)] for e, v in res.outer.items()]
    run.report["reports"] = {
        "ext-outer": res.outer_report.to_json(),
        "ext-outer-sum-form": res.outer_sum_report.to_json(),
        "ext-agreement": res.agreement_report.to_json(),
        "ext-sigma-measurable": res.membership_report.to_json(),
        "ext-extension": res.extension_report.to_json(),
        "class-is-algebra": res.closure_report.to_json(),
        "restriction-is-measure": res.restriction_report.to_json(),
    }
    return run.finish(EXIT_OK if res.passed else EXIT_DEVIATION)


def cmd_hahn(args) -> int:
    run = _Run("hahn", args)
    try:
        inst = _load(run)
        if args.signed in inst.data.get("signed", {}):
            nu = inst.signed(args.signed)
        else:
            nu = as_signed(inst.measure(args.signed))
    except InstanceError as exc:
        run.report["error"] = str(exc)
        return run.finish(EXIT_INPUT)
    run.report["signed"] = args.signed
    vrep = validate_signed_measure(nu)
    run.report["validation"] = vrep.to_json()
    if not all(vrep.verdicts[a] for a in CORE_SIGNED_AXIOMS):
        run.report["error"] = "bottom, modularity or infinity-sign clause fails; refusing to decompose"
        return run.finish(EXIT_FAIL)
    try:
        dec = hahn_decompose(nu)
    except UnsupportedSignError as exc:
        run.report["error"] = str(exc)
        return run.finish(EXIT_INPUT)
    except FuzzyHahnError as exc:
        run.report["error"] = str(exc)
        return run.finish(EXIT_FAIL)
    rep = hahn_report(nu, dec)
    run.report["decomposition"] = {
        "A": vec(dec.A),
        "B": vec(dec.B),
        "lambda": fmt(dec.lam),
        "nu_A": fmt(dec.nu_A),
        "cert_A": dec.cert_A.to_json(),
        "cert_B": dec.cert_B.to_json(),
        "overlap_value": fmt(dec.overlap_value),
        "partition_ok": dec.partition_ok,
    }
    run.report["checks"] = dict(rep.verdicts)
    run.report["reports"] = {"hahn": rep.to_json()}
    if not rep.verdicts["oracle-lambda"]:
        return run.finish(EXIT_FAIL)
    return run.finish(EXIT_OK if rep.passed else EXIT_DEVIATION)


def cmd_fuzz(args) -> int:
    run = _Run("fuzz", args)
    run.report["seed"] = args.seed
    opts = FuzzOptions(
        check=args.check,
        trials=args.trials,
        seed=args.seed,
        max_points=args.max_points,
        max_resolution=args.max_resolution,
        full_cube_only=args.full_cube_only,
        signed_kind=args.signed_kind,
        criterion=args.criterion,
    )
    if args.trials < 0 or args.max_points < 1 or args.max_resolution < 1:
        run.report["error"] = "trials must be >= 0, bounds >= 1"
        return run.finish(EXIT_INPUT)
    if (args.max_resolution + 1) ** args.max_points > 4096:
        run.report["error"] = "bounds exceed the campaign size cap of 4096 sets per algebra"
        return run.finish(EXIT_INPUT)
    findings = None if args.no_findings else args.findings
    body = run_campaign(opts, findings)
    run.report.update(body)
    if findings is not None:
        run.report["findings_dir"] = str(findings)
    counts = body["counts"]
    if counts[ERROR]:
        return run.finish(EXIT_FAIL)
    return run.finish(EXIT_DEVIATION if counts[DEVIATION] else EXIT_OK)


def cmd_replay(args) -> int:
    run = _Run("replay", args)
    try:
        inst = _load(run)
        if "replay" not in inst.data:
            raise InstanceError("instance has no replay section", "$.replay")
        out = evaluate(inst)
    except InstanceError as exc:
        run.report["error"] = str(exc)
        return run.finish(EXIT_INPUT)
    run.report["check"] = inst.data["replay"]["check"]
    run.report["outcome"] = out.status
    run.report["details"] = out.details
    return run.finish({"pass": EXIT_OK, DEVIATION: EXIT_DEVIATION, ERROR: EXIT_FAIL}[out.status])


def cmd_cube(args) -> int:
    if args.resolution < 1:
        sys.stderr.write("resolution must be >= 1\n")
        return EXIT_INPUT
    text = json.dumps(skeleton(args.points, args.resolution), indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fuzzyhahn", description="Exact checks for fuzzy measures on finite universes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, instance=True):
        if instance:
            sp.add_argument("instance", help="instance JSON file")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical reports)")

    sp = sub.add_parser("validate", help="validate the algebra and every declared measure")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("extend", help="outer measure, measurable class and extension clauses")
    common(sp)
    sp.add_argument("--measure", required=True)
    sp.add_argument("--criterion", choices=CRITERIA, default="additive")
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("hahn", help="decompose a signed measure into positive and negative parts")
    common(sp)
    sp.add_argument("--signed", required=True, help="name under 'signed' (or under 'measures')")
    sp.set_defaults(func=cmd_hahn)

    sp = sub.add_parser("fuzz", help="randomized campaign over one claim")
    common(sp, instance=False)
    sp.add_argument("--check", choices=CHECKS, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-points", type=int, default=3)
    sp.add_argument("--max-resolution", type=int, default=3)
    sp.add_argument("--full-cube-only", action="store_true")
    sp.add_argument("--signed-kind", choices=SIGNED_KINDS, default="difference")
    sp.add_argument("--criterion", choices=CRITERIA, default="additive")
    sp.add_argument("--findings", default="findings", help="directory for deviation instances")
    sp.add_argument("--no-findings", action="store_true", help="do not write deviation instances")
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("replay", help="re-run the check recorded in a finding file")
    common(sp)
    sp.set_defaults(func=cmd_replay)

    sp = sub.add_parser("cube", help="emit a full-cube instance skeleton")
    sp.add_argument("--points", nargs="+", required=True)
    sp.add_argument("--resolution", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cube)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
