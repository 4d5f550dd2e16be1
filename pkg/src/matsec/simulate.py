"""Continuous-arrival simulation: schedules, the trial harness, and traces.

Each element of an instance draws an arrival time uniformly in [0, 1).
Arrivals strictly before the sampling cutoff p are shown to the policy as
samples (stored, never accepted); the rest are live decisions. The harness
re-checks independence of the accepted set after every acceptance and
raises instead of repairing, so a buggy policy fails loudly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

import numpy as np

from .matroid import DomainError, MatroidView, WeightedGroundSet
from .policies import (AcceptedSetTracker, Policy, PolicySpec, build_policy,
                       running_mwb)

PHASE_SAMPLE = "sample"
PHASE_LIVE = "live"


class HarnessViolation(RuntimeError):
    """A policy accepted an element that makes the accepted set dependent."""


@dataclass(frozen=True, eq=False)
class ArrivalSchedule:
    times: dict                 # element id -> arrival time in [0, 1]
    order: tuple                # ids sorted by (time, id)


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Stream for one trial, addressable by (seed, index) so trials give the
    same answers whatever order they run in."""
    return np.random.default_rng(np.random.SeedSequence((seed, trial_index)))


def draw_schedule(ground: WeightedGroundSet, rng: np.random.Generator) -> ArrivalSchedule:
    n = ground.count
    times = rng.random(n)
    # stable argsort breaks (measure-zero) time collisions by element id
    order = tuple(int(i) for i in np.argsort(times, kind="stable"))
    return ArrivalSchedule({i: float(times[i]) for i in range(n)}, order)


def forced_schedule(assignments: Iterable[tuple[int, float]]) -> ArrivalSchedule:
    """Schedule with exactly the given (element, time) pairs; times must be
    distinct and in [0, 1]."""
    pairs = list(assignments)
    times = {}
    for u, t in pairs:
        if u in times:
            raise ValueError(f"element {u} assigned twice")
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"time {t} outside [0, 1]")
        times[int(u)] = float(t)
    if len(set(times.values())) != len(times):
        raise ValueError("forced schedules need distinct times")
    order = tuple(sorted(times, key=lambda u: (times[u], u)))
    return ArrivalSchedule(times, order)


@dataclass(frozen=True)
class DecisionRecord:
    element: int
    time: float
    phase: str                  # "sample" or "live"
    accepted: bool
    in_current_mwb: bool        # u in MWB(arrived-so-far + u), harness-computed
    kicked: int | None = None
    kicked_was_sample: bool | None = None

    def to_json_obj(self) -> dict:
        return {
            "element": self.element,
            "time": self.time,
            "phase": self.phase,
            "accepted": self.accepted,
            "inCurrentMwb": self.in_current_mwb,
            "kicked": self.kicked,
            "kickedWasSample": self.kicked_was_sample,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DecisionRecord":
        return cls(int(obj["element"]), float(obj["time"]), obj["phase"],
                   bool(obj["accepted"]), bool(obj["inCurrentMwb"]),
                   obj.get("kicked"), obj.get("kickedWasSample"))


@dataclass(frozen=True, eq=False)
class DecisionTrace:
    """One trial's outcome. records is empty when the trial ran with
    record=False (bulk Monte Carlo); accepted/sample_set/schedule are
    always populated."""

    records: tuple
    accepted: frozenset
    sample_set: frozenset
    schedule: ArrivalSchedule


def run_trial(policy, view: MatroidView, weights: WeightedGroundSet,
              schedule: ArrivalSchedule, p: float, *, record: bool = True) -> DecisionTrace:
    """Deliver one schedule to a fresh (or reset) policy."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"sampling cutoff p={p} outside [0, 1]")
    if set(schedule.times) != set(view.ground):
        raise DomainError("schedule must cover exactly the effective ground set")
    policy = build_policy(policy)
    policy.start(view, weights, p)
    tracker = AcceptedSetTracker(view)
    running = running_mwb(view, weights) if record else None
    records = []
    accepted = []
    samples = []
    times = schedule.times
    for u in schedule.order:
        t = times[u]
        if t < p:
            samples.append(u)
            policy.observe_sample(u)
            if record:
                in_mwb, _ = running.insert(u)
                records.append(DecisionRecord(u, t, PHASE_SAMPLE, False, in_mwb))
        else:
            d = policy.decide(u)
            if d.accept:
                if not tracker.can_add(u):
                    raise HarnessViolation(
                        f"policy {policy.name!r} accepted element {u} but the "
                        f"accepted set would become dependent")
                tracker.add(u)
                accepted.append(u)
            if record:
                in_mwb, _ = running.insert(u)
                records.append(DecisionRecord(u, t, PHASE_LIVE, d.accept, in_mwb,
                                              d.kicked, d.kicked_was_sample))
    return DecisionTrace(tuple(records), frozenset(accepted),
                         frozenset(samples), schedule)


def trial_stream(policy, view: MatroidView, weights: WeightedGroundSet,
                 p: float, trials: int, seed: int, *,
                 record: bool = False) -> Iterator[DecisionTrace]:
    """One trace per trial; trial i always consumes trial_rng(seed, i)."""
    policy = build_policy(policy)
    for i in range(trials):
        schedule = draw_schedule(weights, trial_rng(seed, i))
        yield run_trial(policy, view, weights, schedule, p, record=record)


# -- serialization ------------------------------------------------------------


def json_ready(obj):
    """Normalize floats (9 significant digits) so dumps are byte-stable."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.9g}")
    if isinstance(obj, Fraction):
        return float(f"{float(obj):.9g}")
    if isinstance(obj, dict):
        return {k: json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_ready(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json_line(obj: dict, fp: TextIO) -> None:
    fp.write(json.dumps(json_ready(obj), separators=(",", ":")))
    fp.write("\n")


def dump_trace(trace: DecisionTrace, fp: TextIO) -> None:
    """One JSON object per record, arrival order, fixed field order."""
    for rec in trace.records:
        dump_json_line(rec.to_json_obj(), fp)


def load_records(fp: TextIO) -> tuple[DecisionRecord, ...]:
    records = []
    for line in fp:
        line = line.strip()
        if line:
            records.append(DecisionRecord.from_json_obj(json.loads(line)))
    return tuple(records)


def trace_from_records(records: Iterable[DecisionRecord]) -> DecisionTrace:
    """Rebuild a trace (including its schedule) from exported records."""
    records = tuple(records)
    times = {r.element: r.time for r in records}
    order = tuple(sorted(times, key=lambda u: (times[u], u)))
    return DecisionTrace(
        records,
        frozenset(r.element for r in records if r.accepted),
        frozenset(r.element for r in records if r.phase == PHASE_SAMPLE),
        ArrivalSchedule(times, order))


def dump_schedule(schedule: ArrivalSchedule, fp: TextIO) -> None:
    for u in schedule.order:
        fp.write(f"schedule {u} {schedule.times[u]!r}\n")


def parse_schedule(fp: TextIO) -> ArrivalSchedule:
    pairs = []
    for line in fp:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "schedule":
            raise ValueError(f"bad schedule line: {line!r}")
        pairs.append((int(parts[1]), float(parts[2])))
    return forced_schedule(pairs)
