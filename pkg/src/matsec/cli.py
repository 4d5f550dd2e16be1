"""Command line front end.

Subcommands: simulate (one recorded trial), estimate (Monte Carlo acceptance
report), sweep (CSV over a parameter grid), replay (pinned single-run
fixtures), verify (randomized property suites), certify (exhaustive size-1
blocked-set refutation). Exit codes: 0 success, 1 failed check, 2 bad usage
or malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import os
import sys
from pathlib import Path

from . import instances
from .analysis import (OracleError, SUITE_NAMES, certify_no_size1_strong_fs,
                       estimate, run_suite, three_sigma)
from .instances import InstanceBundle
from .matroid import DomainError, PreconditionError, dump_instance, parse_instance
from .policies import POLICY_NAMES, PolicySpec, build_policy
from .simulate import (draw_schedule, dump_json_line, dump_schedule, dump_trace,
                       forced_schedule, json_ready, parse_schedule, run_trial,
                       trial_rng)

INSTANCE_FAMILIES = ("triangle", "double-triangle", "hat", "modified-hat",
                     "uniform", "random-graphic")


def _seed_default() -> int:
    return int(os.environ.get("MATSEC_SEED", "0"))


def _resolve_instance(args) -> tuple[InstanceBundle, str, int]:
    """Build the requested instance; returns (bundle, family, size parameter)."""
    if getattr(args, "instance_file", None):
        with open(args.instance_file) as fp:
            base, weights = parse_instance(fp)
        named = {weights.label(u): u for u in range(weights.count)}
        bundle = instances._bundle(base, weights, named)
        return bundle, Path(args.instance_file).stem, weights.count
    fam = args.instance
    n = args.n
    if fam == "triangle":
        return instances.triangle(), fam, 3
    if fam == "double-triangle":
        return instances.double_triangle(), fam, 6
    if fam == "hat":
        return instances.hat_graph(n), fam, n
    if fam == "modified-hat":
        return instances.modified_hat_graph(n), fam, n
    if fam == "uniform":
        return instances.uniform_instance(n, args.k if args.k is not None else 1), fam, n
    if fam == "random-graphic":
        rng = trial_rng(args.seed, 0xE5E5)
        return instances.random_graphic(args.vertices, args.edges, rng), fam, args.edges
    raise DomainError(f"unknown instance family: {fam!r}")


def _policy_spec(args) -> PolicySpec:
    k = args.k if args.policy in ("optimistic", "virtual-uniform") else None
    return PolicySpec(args.policy, k=k, reference=args.reference)


def _out_stream(path):
    return open(path, "w") if path else contextlib.nullcontext(sys.stdout)


def _add_instance_args(sp) -> None:
    sp.add_argument("--instance", choices=INSTANCE_FAMILIES, default="triangle",
                    help="named instance family (default: triangle)")
    sp.add_argument("--instance-file", metavar="PATH",
                    help="load the instance from a file instead")
    sp.add_argument("--n", type=int, default=5,
                    help="size parameter for hat, modified-hat, and uniform")
    sp.add_argument("--k", type=int, default=None,
                    help="rank of the uniform instance; slot-count policies reuse it")
    sp.add_argument("--vertices", type=int, default=5,
                    help="vertex count for random-graphic")
    sp.add_argument("--edges", type=int, default=8,
                    help="edge count for random-graphic")


def _add_policy_args(sp) -> None:
    sp.add_argument("--policy", default="virtual-msp",
                    choices=POLICY_NAMES + ("greedy", "virtual"),
                    help="acceptance policy (default: virtual-msp)")
    sp.add_argument("--reference", default="sample-contracted",
                    help="reference-set rule for greedy-framework")


def _add_run_args(sp) -> None:
    sp.add_argument("--p", type=float, default=0.5,
                    help="sampling cutoff; arrivals before p are samples")
    sp.add_argument("--seed", type=int, default=_seed_default(),
                    help="master seed (default: MATSEC_SEED or 0)")


# -- simulate ----------------------------------------------------------------


def _cmd_simulate(args) -> int:
    bundle, _, _ = _resolve_instance(args)
    spec = _policy_spec(args)
    if args.schedule_file:
        with open(args.schedule_file) as fp:
            schedule = parse_schedule(fp)
    else:
        schedule = draw_schedule(bundle.weights, trial_rng(args.seed, args.trial))
    trace = run_trial(spec, bundle.view, bundle.weights, schedule, args.p)
    with _out_stream(args.out) as fp:
        dump_trace(trace, fp)
    if args.schedule_out:
        with open(args.schedule_out, "w") as fp:
            dump_schedule(schedule, fp)
    if args.dump_instance:
        with open(args.dump_instance, "w") as fp:
            dump_instance(bundle.view.base, bundle.weights, fp)
    label = bundle.weights.label
    got = bundle.weights.total(trace.accepted)
    opt = bundle.weights.total(bundle.mwb)
    summary = (f"accepted {len(trace.accepted)} of {bundle.weights.count}: "
               f"{', '.join(sorted(label(u) for u in trace.accepted)) or '(none)'}"
               f"  value {got}/{opt}")
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return 0


# -- estimate ----------------------------------------------------------------


def _auto_bound(family: str, spec: PolicySpec, p: float):
    """Analytic reference bound when one is known for this combination."""
    canonical = build_policy(spec).name
    if family == "hat" and canonical in ("virtual-msp", "virtual-uniform"):
        if abs(p - 0.5) <= 1e-9:
            return 0.25, "lower"
    if canonical == "dynkin" and 0.0 < p < 1.0:
        return p * math.log(1.0 / p), "lower"
    return None, None


def _cmd_estimate(args) -> int:
    bundle, family, _ = _resolve_instance(args)
    spec = _policy_spec(args)
    bound, direction = args.bound, args.bound_direction
    if bound is None:
        bound, direction = _auto_bound(family, spec, args.p)
    report = estimate(spec, bundle, args.p, args.trials, args.seed,
                      analytic_bound=bound, bound_direction=direction)
    with _out_stream(args.out) as fp:
        dump_json_line(report.to_json_obj(), fp)
    return 0


# -- sweep -------------------------------------------------------------------


def _grid(text: str, cast):
    return [cast(part) for part in text.split(",") if part.strip()]


def _sweep_bound(family: str, canonical: str, label: str, p: float):
    if family == "hat" and canonical in ("virtual-msp", "virtual-uniform") \
            and label == "e_inf":
        return p * p * (1.0 - p)
    return None


def _cmd_sweep(args) -> int:
    spec = _policy_spec(args)
    canonical = build_policy(spec).name
    ps = _grid(args.p_grid, float)
    ns = _grid(args.n_grid, int) if args.n_grid else [None]
    if ns != [None] and args.instance not in ("hat", "modified-hat", "uniform"):
        raise DomainError(f"--n-grid does not apply to {args.instance}")
    rows = []
    for n in ns:
        if n is not None:
            args.n = n
        bundle, family, size = _resolve_instance(args)
        label = bundle.weights.label
        for p in ps:
            report = estimate(spec, bundle, p, args.trials, args.seed)
            for u, freq in sorted(report.per_element_accept_freq.items()):
                bound = _sweep_bound(family, canonical, label(u), p)
                rows.append([family, size, canonical, f"{p:.9g}", args.trials,
                             label(u), f"{freq:.9g}",
                             f"{three_sigma(freq, args.trials):.9g}",
                             "" if bound is None else f"{bound:.9g}"])
    with _out_stream(args.out) as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["instance", "n", "policy", "p", "trials",
                         "element", "freq", "ci", "bound"])
        writer.writerows(rows)
    return 0


# -- replay ------------------------------------------------------------------
#
# Each fixture pins one hand-checked run: the exact arrival schedule and, for
# every arrival, the expected (phase, accepted, kicked, kicked-was-sample)
# tuple. Replays recompute the run and fail loudly on any drift.


def _fx_triangle(policy_name):
    bundle = instances.triangle()
    sched = [("e3", 0.2), ("e2", 0.6), ("e1", 0.8)]
    if policy_name == "sample":
        expected = [("e3", "sample", False, None, None),
                    ("e2", "live", True, None, None),
                    ("e1", "live", True, None, None)]
    else:
        expected = [("e3", "sample", False, None, None),
                    ("e2", "live", True, None, None),
                    ("e1", "live", False, None, None)]
    return bundle, PolicySpec(policy_name), 0.5, sched, expected


def _fx_uniform_virtual():
    bundle = instances.uniform_instance(6, 2)
    sched = [("1", 0.05), ("3", 0.15), ("2", 0.40),
             ("4", 0.55), ("5", 0.70), ("6", 0.85)]
    expected = [("1", "sample", False, None, None),
                ("3", "sample", False, None, None),
                ("2", "live", True, "1", True),
                ("4", "live", False, "2", False),
                ("5", "live", True, "3", True),
                ("6", "live", False, "4", False)]
    return bundle, PolicySpec("virtual-msp"), 0.25, sched, expected


def _fx_hat_claw():
    bundle = instances.hat_graph(2)
    sched = [("t_1", 0.05), ("b_1", 0.15), ("t_2", 0.40),
             ("b_2", 0.55), ("e_inf", 0.80)]
    expected = [("t_1", "sample", False, None, None),
                ("b_1", "sample", False, None, None),
                ("t_2", "live", True, None, None),
                ("b_2", "live", False, None, None),
                ("e_inf", "live", True, "b_1", True)]
    return bundle, PolicySpec("virtual-msp"), 0.25, sched, expected


def _fx_modified_hat_trap():
    bundle = instances.modified_hat_graph(2)
    sched = [("2_1", 0.05), ("3_1", 0.10), ("4_1", 0.15), ("2_2", 0.20),
             ("1_2", 0.40), ("3_2", 0.50), ("4_2", 0.60),
             ("e_inf", 0.75), ("1_1", 0.90)]
    expected = [("2_1", "sample", False, None, None),
                ("3_1", "sample", False, None, None),
                ("4_1", "sample", False, None, None),
                ("2_2", "sample", False, None, None),
                ("1_2", "live", True, None, None),
                ("3_2", "live", False, "1_2", False),
                ("4_2", "live", True, "2_2", True),
                ("e_inf", "live", False, "2_1", True),
                ("1_1", "live", False, None, None)]
    return bundle, PolicySpec("virtual-msp"), 0.25, sched, expected


FIXTURES = {
    "triangle-sample": lambda: _fx_triangle("sample"),
    "triangle-greedy": lambda: _fx_triangle("greedy-framework"),
    "uniform-virtual-stream": _fx_uniform_virtual,
    "hat-claw": _fx_hat_claw,
    "modified-hat-trap": _fx_modified_hat_trap,
}


def _cmd_replay(args) -> int:
    bundle, spec, p, sched_pairs, expected = FIXTURES[args.fixture]()
    schedule = forced_schedule([(bundle.id_of(lab), t) for lab, t in sched_pairs])
    trace = run_trial(spec, bundle.view, bundle.weights, schedule, p)
    label = bundle.weights.label
    print(f"fixture {args.fixture}: policy={spec.name} p={p}")
    ok = True
    for rec, exp in zip(trace.records, expected, strict=True):
        got = (label(rec.element), rec.phase, rec.accepted,
               None if rec.kicked is None else label(rec.kicked),
               rec.kicked_was_sample)
        if rec.phase == "sample":
            verdict = "sample"
        else:
            verdict = "ACCEPT" if rec.accepted else "reject"
            if rec.kicked is not None:
                tag = "sample" if rec.kicked_was_sample else "live"
                verdict += f"  kicked {label(rec.kicked)} ({tag})"
        line = f"  t={rec.time:.2f}  {got[0]:<8} {verdict}"
        if got != exp:
            ok = False
            line += f"   << expected {exp[1:]}"
        print(line)
    print(f"accepted: {', '.join(sorted(label(u) for u in trace.accepted))}")
    if args.out:
        with open(args.out, "w") as fp:
            dump_trace(trace, fp)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


# -- verify ------------------------------------------------------------------


def _cmd_verify(args) -> int:
    result = run_suite(args.suite, cases=args.cases, trials=args.trials,
                       seed=args.seed, n=args.n, p=args.p)
    print(f"suite {result.name}: {result.cases} cases, "
          f"{len(result.failures)} failures")
    for failure in result.failures[:10]:
        print(f"  {failure}")
    if len(result.failures) > 10:
        print(f"  ... and {len(result.failures) - 10} more")
    return 0 if result.passed else 1


# -- certify -----------------------------------------------------------------


def _cmd_certify(args) -> int:
    cert = certify_no_size1_strong_fs()
    with _out_stream(args.out) as fp:
        fp.write(json.dumps(json_ready(cert.to_json_obj()), indent=2))
        fp.write("\n")
    stream = sys.stdout if args.out else sys.stderr
    print(f"checked {cert.checked_assignments} assignments, "
          f"{len(cert.violations)} violated", file=stream)
    if cert.complete:
        print("every size-1 blocked-set table fails on the doubled triangle",
              file=stream)
        return 0
    print("INCOMPLETE: some assignment survived", file=stream)
    return 1


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matsec",
        description="Matroid secretary simulation and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("simulate", help="run one recorded trial")
    _add_instance_args(sp)
    _add_policy_args(sp)
    _add_run_args(sp)
    sp.add_argument("--trial", type=int, default=0,
                    help="trial index within the seeded stream")
    sp.add_argument("--schedule-file", metavar="PATH",
                    help="replay a fixed arrival schedule")
    sp.add_argument("--out", metavar="PATH", help="trace JSONL destination")
    sp.add_argument("--schedule-out", metavar="PATH",
                    help="write the arrival schedule")
    sp.add_argument("--dump-instance", metavar="PATH",
                    help="write the instance definition")
    sp.set_defaults(func=_cmd_simulate)

    sp = sub.add_parser("estimate", help="Monte Carlo acceptance report")
    _add_instance_args(sp)
    _add_policy_args(sp)
    _add_run_args(sp)
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--bound", type=float, default=None,
                    help="override the analytic reference bound")
    sp.add_argument("--bound-direction", choices=("lower", "upper"), default=None)
    sp.add_argument("--out", metavar="PATH", help="report JSON destination")
    sp.set_defaults(func=_cmd_estimate)

    sp = sub.add_parser("sweep", help="CSV sweep over p (and n) grids")
    _add_instance_args(sp)
    _add_policy_args(sp)
    sp.add_argument("--seed", type=int, default=_seed_default())
    sp.add_argument("--trials", type=int, default=2000)
    sp.add_argument("--p-grid", default="0.25,0.5,0.75",
                    help="comma separated sampling cutoffs")
    sp.add_argument("--n-grid", default=None,
                    help="comma separated size parameters (hat, modified-hat, uniform)")
    sp.add_argument("--out", metavar="PATH", help="CSV destination")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("replay", help="re-run a pinned fixture")
    sp.add_argument("fixture", choices=sorted(FIXTURES))
    sp.add_argument("--out", metavar="PATH", help="trace JSONL destination")
    sp.set_defaults(func=_cmd_replay)

    sp = sub.add_parser("verify", help="run a randomized property suite")
    sp.add_argument("suite", choices=SUITE_NAMES)
    sp.add_argument("--cases", type=int, default=None)
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--seed", type=int, default=_seed_default())
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--p", type=float, default=0.5)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("certify", help="exhaustive size-1 blocked-set refutation")
    sp.add_argument("--out", metavar="PATH", help="certificate JSON destination")
    sp.set_defaults(func=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DomainError, PreconditionError, OracleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
