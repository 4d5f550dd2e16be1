"""Oracles, Monte Carlo estimation, analytic bounds, trace checkers, and the
exhaustive size-1 impossibility certificate.

brute_force_mwb is the trusted oracle for everything greedy computes: it
enumerates subsets outright and never shares code with the greedy path.
The checker functions consume traces and re-derive what they need from the
schedule rather than trusting any policy bookkeeping.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.integrate import simpson

from .instances import (InstanceBundle, double_triangle, fuzz_corpus, hat_graph,
                        random_graphic, uniform_instance)
from .matroid import DomainError, GraphicMatroid, MatroidView, WeightedGroundSet
from .policies import PolicySpec
from .simulate import (PHASE_LIVE, DecisionRecord, DecisionTrace, draw_schedule,
                       run_trial, trial_stream)


class OracleError(ValueError):
    """A reference oracle misbehaved (tie, size overflow, bad blocked set)."""


# -- brute force -------------------------------------------------------------


def brute_force_mwb(view: MatroidView, weights: WeightedGroundSet,
                    S=None) -> frozenset:
    """Exhaustive max-weight independent subset of S; the trusted oracle.

    Enumerates every subset, so it is capped at 20 elements. Distinct
    weights make the optimum unique; uniqueness is asserted rather than
    assumed, and a tie raises OracleError.
    """
    S = view.ground if S is None else frozenset(S)
    if not S <= view.ground:
        raise DomainError(f"elements outside effective ground set: {sorted(S - view.ground)}")
    if len(S) > 20:
        raise OracleError("brute force capped at 20 elements")
    elems = sorted(S)
    best = frozenset()
    best_weight = Fraction(0)
    tie = None
    for r in range(1, len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            cand = frozenset(combo)
            if not view.is_independent(cand):
                continue
            w = weights.total(cand)
            if w > best_weight:
                best, best_weight, tie = cand, w, None
            elif w == best_weight:
                tie = cand
    if tie is not None:
        raise OracleError(f"maximum not unique: {sorted(best)} vs {sorted(tie)}")
    return best


# -- Monte Carlo estimation ----------------------------------------------------


def three_sigma(freq: float, trials: int) -> float:
    """Radius 3 * sqrt(f(1-f)/trials) of the binomial normal band."""
    return 3.0 * math.sqrt(freq * (1.0 - freq) / trials)


@dataclass(frozen=True, eq=False)
class EstimateReport:
    trials: int
    per_element_accept_freq: dict       # optimum element id -> acceptance frequency
    min_over_mwb: float
    utility_ratio_mean: float
    ci_radius_3sigma: float             # evaluated at the min_over_mwb frequency
    analytic_bound: float | None = None
    bound_direction: str | None = None  # "lower" | "upper"

    def to_json_obj(self) -> dict:
        return {
            "trials": self.trials,
            "perElementAcceptFreq": {str(u): f for u, f
                                     in sorted(self.per_element_accept_freq.items())},
            "minOverMwb": self.min_over_mwb,
            "utilityRatioMean": self.utility_ratio_mean,
            "ciRadius3Sigma": self.ci_radius_3sigma,
            "analyticBound": self.analytic_bound,
            "boundDirection": self.bound_direction,
        }


def estimate(policy, bundle: InstanceBundle, p: float, trials: int, seed: int,
             *, analytic_bound: float | None = None,
             bound_direction: str | None = None) -> EstimateReport:
    """Acceptance frequency of each optimum element plus the mean utility
    ratio, over `trials` independent schedules.

    Deterministic given (seed, trials): trial i always consumes the stream
    trial_rng(seed, i), whatever order trials execute in.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    counts = {u: 0 for u in sorted(bundle.mwb)}
    opt_value = bundle.weights.total(bundle.mwb)
    ratio_sum = Fraction(0)
    for trace in trial_stream(policy, bundle.view, bundle.weights, p, trials, seed):
        for u in trace.accepted:
            if u in counts:
                counts[u] += 1
        ratio_sum += bundle.weights.total(trace.accepted) / opt_value
    freqs = {u: c / trials for u, c in counts.items()}
    min_freq = min(freqs.values())
    return EstimateReport(trials, freqs, min_freq, float(ratio_sum / trials),
                          three_sigma(min_freq, trials),
                          analytic_bound, bound_direction)


# -- analytic values -----------------------------------------------------------


def alpha_p(k: int) -> tuple[float, float]:
    """Guarantee-and-cutoff pair for rank-k uniform blocked-set tables:
    (1/e, 1/e) at k=1, (k^(-k/(k-1)), k^(-1/(k-1))) beyond."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return (1.0 / math.e, 1.0 / math.e)
    return (k ** (-k / (k - 1.0)), k ** (-1.0 / (k - 1.0)))


def modified_hat_bounds(n: int, p: float) -> tuple[float, float]:
    """(p_n, rejection lower bound) for the modified hat family at cutoff p.

    p_n = 1 - (1 - p^3)^floor(n/2) is the chance some low-index claw has
    its 2_j, 3_j, 4_j edges all sampled; the rejection bound integrates the
    chance a high-index claw then traps the hub edge arriving at time t,
    q_{n,t} = 1 - (1 - p(t-p)^3/6)^floor(n/2), via composite Simpson
    quadrature with 1024 intervals.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie strictly between 0 and 1")
    half = n // 2
    p_n = 1.0 - (1.0 - p ** 3) ** half
    ts = np.linspace(p, 1.0, 1025)
    q = 1.0 - (1.0 - p * (ts - p) ** 3 / 6.0) ** half
    rejection = p + p_n * float(simpson(q, x=ts))
    return (float(p_n), rejection)


# -- blocked-set (forbidden-set) machinery --------------------------------------


@dataclass(frozen=True)
class ForbiddenSetOracle:
    """Strong-form blocked-set table: rule(Y, u) names the elements of
    Y - {u} whose earlier live arrival excuses rejecting u."""

    rule: Callable
    size_bound: int


def hat_forbidden_oracle(bundle: InstanceBundle) -> ForbiddenSetOracle:
    """Size-2 blocked-set table for hat instances under the virtual policy.

    Roles: the hub edge is blocked by the first claw's pair; a claw edge
    that would become the leftmost complete claw is blocked by the bottom
    edge of the next complete claw; any other top edge is blocked by its
    own bottom edge; any other bottom edge needs no blocker (if its arrival
    closes a cycle it is the lightest edge on it). Blocked sets are clipped
    to Y - {u}: unseen elements can never be earlier arrivals.
    """
    e_inf = bundle.named["e_inf"]
    n = (bundle.weights.count - 1) // 2
    top = {bundle.named[f"t_{i}"]: i for i in range(1, n + 1)}
    bottom = {bundle.named[f"b_{i}"]: i for i in range(1, n + 1)}
    t_of = {i: u for u, i in top.items()}
    b_of = {i: u for u, i in bottom.items()}

    def complete_claws(Y):
        return [i for i in range(1, n + 1) if t_of[i] in Y and b_of[i] in Y]

    def rule(Y: frozenset, u: int) -> frozenset:
        if u == e_inf:
            return frozenset({t_of[1], b_of[1]}) & (Y - {u})
        i = top.get(u)
        if i is not None:
            if e_inf not in Y:
                complete = complete_claws(Y)
                if complete and complete[0] == i:
                    later = [j for j in complete if j > i]
                    return frozenset({b_of[later[0]]}) if later else frozenset()
            return frozenset({b_of[i]}) & (Y - {u})
        i = bottom[u]
        if e_inf not in Y:
            complete = complete_claws(Y)
            if complete and complete[0] == i:
                later = [j for j in complete if j > i]
                return frozenset({b_of[later[0]]}) if later else frozenset()
        return frozenset()

    return ForbiddenSetOracle(rule, 2)


def check_forbidden_consistency(trace: DecisionTrace, oracle: ForbiddenSetOracle,
                                view: MatroidView, weights: WeightedGroundSet
                                ) -> tuple[bool, DecisionRecord | None]:
    """Replay a recorded trace against a blocked-set table.

    Whenever a live arrival u belongs to the max-weight basis of everything
    seen (recomputed here, not read from the trace) and no earlier live
    arrival lies in rule(seen + u, u), the trace must show u accepted.
    Returns (True, None) or (False, first offending record).
    """
    if not trace.records:
        raise ValueError("consistency check needs a recorded trace")
    arrived: set[int] = set()
    earlier_live: list[int] = []
    for rec in trace.records:
        u = rec.element
        Y = frozenset(arrived | {u})
        if rec.phase == PHASE_LIVE:
            blocked = oracle.rule(Y, u)
            if not blocked <= Y - {u}:
                raise OracleError("blocked set must be drawn from the seen elements")
            if len(blocked) > oracle.size_bound:
                raise OracleError(f"blocked set exceeds size bound {oracle.size_bound}")
            if u in view.greedy_mwb(weights, Y):
                if not rec.accepted and all(v not in blocked for v in earlier_live):
                    return (False, rec)
            earlier_live.append(u)
        arrived.add(u)
    return (True, None)


def check_first_live_accepted(trace: DecisionTrace, view: MatroidView,
                              weights: WeightedGroundSet) -> bool:
    """The first live arrival must be accepted whenever it belongs to the
    max-weight basis of the samples plus itself (no earlier live arrival
    can excuse rejecting it, whatever the blocked-set table says)."""
    if not trace.records:
        raise ValueError("check needs a recorded trace")
    seen: set[int] = set()
    for rec in trace.records:
        if rec.phase == PHASE_LIVE:
            premise = rec.element in view.greedy_mwb(weights, seen | {rec.element})
            return rec.accepted or not premise
        seen.add(rec.element)
    return True


# -- instance-specific trace checks ---------------------------------------------


def check_claw_blocker(trace: DecisionTrace, bundle: InstanceBundle) -> bool:
    """Hat instances: vacuously true unless the first claw was fully sampled
    and the hub edge arrived live; then the hub edge must be accepted and no
    claw may have both of its edges accepted before the hub edge arrives."""
    named = bundle.named
    e_inf = named["e_inf"]
    n = (bundle.weights.count - 1) // 2
    S = trace.sample_set
    if not (named["t_1"] in S and named["b_1"] in S and e_inf not in S):
        return True
    if e_inf not in trace.accepted:
        return False
    times = trace.schedule.times
    t_hub = times[e_inf]
    for i in range(1, n + 1):
        ti, bi = named[f"t_{i}"], named[f"b_{i}"]
        if (ti in trace.accepted and bi in trace.accepted
                and times[ti] < t_hub and times[bi] < t_hub):
            return False
    return True


def check_modified_hat_trap(trace: DecisionTrace, bundle: InstanceBundle) -> bool:
    """Modified hat instances: whenever claw i has 2_i sampled, its 1_i, 3_i,
    4_i and the hub edge all live in that time order, and some earlier claw
    j < i has 2_j, 3_j, 4_j all sampled, the trace must accept both 1_i and
    4_i (which together with the hub edge would close a cycle, trapping it)."""
    named = bundle.named
    e_inf = named["e_inf"]
    n = (bundle.weights.count - 1) // 4
    S = trace.sample_set
    times = trace.schedule.times
    if e_inf in S:
        return True
    t_hub = times[e_inf]
    sampled_claws = [j for j in range(1, n + 1)
                     if named[f"2_{j}"] in S and named[f"3_{j}"] in S
                     and named[f"4_{j}"] in S]
    for i in range(1, n + 1):
        if named[f"2_{i}"] not in S:
            continue
        if not any(j < i for j in sampled_claws):
            continue
        e1, e3, e4 = named[f"1_{i}"], named[f"3_{i}"], named[f"4_{i}"]
        if any(e in S for e in (e1, e3, e4)):
            continue
        if not times[e1] < times[e3] < times[e4] < t_hub:
            continue
        if e1 not in trace.accepted or e4 not in trace.accepted:
            return False
    return True


# -- impossibility certificate ---------------------------------------------------


@dataclass(frozen=True)
class CertifiedViolation:
    assignment: str             # pinned blocked sets, human-readable
    schedule: tuple             # ((element label, time), ...)
    accepted: tuple             # forced acceptances (labels), dependent in the instance

    def to_json_obj(self) -> dict:
        return {"assignment": self.assignment,
                "schedule": [[lab, t] for lab, t in self.schedule],
                "accepted": list(self.accepted)}


@dataclass(frozen=True, eq=False)
class ImpossibilityCertificate:
    checked_assignments: int
    violations: tuple

    @property
    def complete(self) -> bool:
        """True when every enumerated assignment produced a violation."""
        return len(self.violations) == self.checked_assignments

    def to_json_obj(self) -> dict:
        return {"checkedAssignments": self.checked_assignments,
                "violations": [v.to_json_obj() for v in self.violations]}


def _forced_acceptances(view, weights, schedule_pairs, p, pinned) -> frozenset:
    """Elements every policy honoring the pinned blocked sets must accept.

    An arrival is forced when it lies in the max-weight basis of the seen
    elements (brute-forced) and either no live element preceded it or its
    pinned blocked set avoids every earlier live arrival. Unpinned arrivals
    with live predecessors are never treated as forced: a size-1 table may
    block any single one of them, so only provable forcings count.
    """
    arrived: set[int] = set()
    earlier_live: list[int] = []
    forced: list[int] = []
    for u, t in sorted(schedule_pairs, key=lambda pair: pair[1]):
        if t >= p:
            Y = frozenset(arrived | {u})
            if u in brute_force_mwb(view, weights, Y):
                if not earlier_live:
                    forced.append(u)
                elif u in pinned and not any(v in pinned[u] for v in earlier_live):
                    forced.append(u)
            earlier_live.append(u)
        arrived.add(u)
    return frozenset(forced)


def certify_no_size1_strong_fs() -> ImpossibilityCertificate:
    """Exhaustively refute size-1 blocked-set tables on the doubled triangle.

    Stage 1: for each parallel pair, any blocked-set choice for the heavy
    copy other than its light twin (one other element, or nothing) admits a
    three-element schedule whose forced acceptances contain both copies of
    the pair, a dependent set. Stage 2: the single surviving table (each
    heavy copy blocked by its twin) forces all three heavy copies, a cycle,
    on the schedule that samples the three light copies. Every enumerated
    assignment therefore carries a recorded violation.
    """
    bundle = double_triangle()
    view, weights = bundle.view, bundle.weights
    label = weights.label
    p = 0.25
    violations = []
    checked = 0
    lights = [bundle.named[f"e_{i}_1"] for i in (1, 2, 3)]
    heavies = [bundle.named[f"e_{i}_2"] for i in (1, 2, 3)]
    for i in range(3):
        target, twin = heavies[i], lights[i]
        others = [f for f in sorted(view.ground) if f not in (target, twin)]
        for f in [None] + others:
            checked += 1
            pinned = {target: frozenset() if f is None else frozenset({f})}
            pairs = [(twin, 0.4), (target, 0.8)]
            if f is not None:
                pairs.insert(0, (f, 0.1))
            forced = _forced_acceptances(view, weights, pairs, p, pinned)
            if not view.is_independent(forced):
                blocked = "nothing" if f is None else label(f)
                violations.append(CertifiedViolation(
                    f"blocked({label(target)}) = {blocked}",
                    tuple((label(u), t) for u, t in pairs),
                    tuple(sorted(label(u) for u in forced))))
    checked += 1
    pinned = {heavies[i]: frozenset({lights[i]}) for i in range(3)}
    pairs = ([(lights[i], 0.05 * (i + 1)) for i in range(3)]
             + [(heavies[i], 0.4 + 0.2 * i) for i in range(3)])
    forced = _forced_acceptances(view, weights, pairs, p, pinned)
    if not view.is_independent(forced):
        violations.append(CertifiedViolation(
            "blocked(e_i_2) = e_i_1 for every pair i",
            tuple((label(u), t) for u, t in pairs),
            tuple(sorted(label(u) for u in forced))))
    return ImpossibilityCertificate(checked, tuple(violations))


# -- verification suites ----------------------------------------------------------


@dataclass(eq=False)
class SuiteResult:
    name: str
    cases: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_matroid_axioms(view: MatroidView) -> list[str]:
    """Exhaustive check of the independence axioms on a small view: empty
    set independent, downward closure, and the exchange property (checked
    for |S| = |T| + 1, which with downward closure implies the rest)."""
    ground = sorted(view.ground)
    if len(ground) > 10:
        raise ValueError("axiom check is exhaustive; cap is 10 elements")
    failures = []
    by_size: dict[int, list[frozenset]] = {}
    indep_set = set()
    for r in range(len(ground) + 1):
        for combo in itertools.combinations(ground, r):
            if view.is_independent(combo):
                by_size.setdefault(r, []).append(frozenset(combo))
                indep_set.add(frozenset(combo))
    if frozenset() not in indep_set:
        failures.append("empty set dependent")
    for I in indep_set:
        for u in I:
            if I - {u} not in indep_set:
                failures.append(f"downward closure fails at {sorted(I)} minus {u}")
    for r, bigger in by_size.items():
        for S in bigger:
            for T in by_size.get(r - 1, ()):
                if not any(T | {x} in indep_set for x in S - T):
                    failures.append(f"exchange fails for {sorted(S)}, {sorted(T)}")
    return failures


def _tiny_multigraph_views():
    """Every multigraph on 3 vertices with up to 3 edges (loops and parallels
    included), as full views."""
    pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    for ne in range(1, 4):
        for combo in itertools.combinations_with_replacement(pairs, ne):
            yield MatroidView.full(GraphicMatroid(3, combo))


def _suite_matroid_axioms(cases: int, seed: int) -> SuiteResult:
    result = SuiteResult("matroid-axioms", 0)
    for view in _tiny_multigraph_views():
        result.cases += 1
        result.failures += check_matroid_axioms(view)
    for n in range(1, 6):
        for k in range(n + 1):
            result.cases += 1
            result.failures += check_matroid_axioms(
                uniform_instance(n, k).view)
    rng = np.random.default_rng(np.random.SeedSequence((seed, 0xA1)))
    corpus = fuzz_corpus(max(cases, 1), seed)
    for bundle in corpus:
        view = bundle.view
        ground = sorted(view.ground)
        keep = [u for u in ground if rng.random() < 0.7]
        sub = view.restrict(keep)
        basis = view.greedy_mwb(bundle.weights, keep)
        pick = [u for u in sorted(basis) if rng.random() < 0.5]
        minor = sub.contract(pick)
        for v in (view, sub, minor):
            result.cases += 1
            result.failures += check_matroid_axioms(v)
    return result


def _random_subset(rng, elems, prob=0.5):
    return frozenset(u for u in elems if rng.random() < prob)


def _suite_mwb_lemmas(cases: int, seed: int) -> SuiteResult:
    """Randomized battery of the structural basis/span/rank properties that
    every policy implementation leans on."""
    result = SuiteResult("mwb-lemmas", cases)
    corpus = fuzz_corpus(30, seed)
    rng = np.random.default_rng(np.random.SeedSequence((seed, 0xB2)))
    for _ in range(cases):
        bundle = corpus[int(rng.integers(len(corpus)))]
        view, weights = bundle.view, bundle.weights
        ground = sorted(view.ground)
        if not ground:
            continue
        S = _random_subset(rng, ground)
        T = frozenset(u for u in S if rng.random() < 0.6)
        u = int(ground[int(rng.integers(len(ground)))])
        mwb_S = view.greedy_mwb(weights, S)
        mwb_T = view.greedy_mwb(weights, T)
        mwb_Su = view.greedy_mwb(weights, S | {u})

        if not (mwb_S & T) <= mwb_T:
            result.failures.append(f"basis-of-subset containment fails: S={sorted(S)} T={sorted(T)}")
        desc = weights.sort_desc(S)
        j = int(rng.integers(len(desc) + 1))
        prefix = frozenset(desc[:j])
        if (mwb_S & prefix) != view.greedy_mwb(weights, prefix):
            result.failures.append(f"weight-prefix basis equality fails: S={sorted(S)} j={j}")
        if len(mwb_S - mwb_Su) > 1:
            result.failures.append(f"single-displacement bound fails: S={sorted(S)} u={u}")
        if mwb_Su != view.greedy_mwb(weights, mwb_S | {u}):
            result.failures.append(f"basis-of-basis equality fails: S={sorted(S)} u={u}")
        if view.rank(S | {u}) - view.rank(S) not in (0, 1):
            result.failures.append(f"unit rank increment fails: S={sorted(S)} u={u}")

        A = _random_subset(rng, ground)
        B = _random_subset(rng, ground)
        if view.rank(A | B) + view.rank(A & B) > view.rank(A) + view.rank(B):
            result.failures.append(f"rank submodularity fails: A={sorted(A)} B={sorted(B)}")
        if not view.span(T) <= view.span(S):
            result.failures.append(f"span monotonicity fails: T={sorted(T)} S={sorted(S)}")

        # greedy takes exactly the elements outside the span of their heavier prefix
        taken = []
        for v in desc:
            if v not in view.span(taken):
                taken.append(v)
        if frozenset(taken) != mwb_S:
            result.failures.append(f"greedy span criterion fails: S={sorted(S)}")

        # same closure after swapping u for u' when u lies in span(I + u')
        I = mwb_S
        span_I = view.span(I)
        outside = [v for v in ground if v not in span_I]
        if len(outside) >= 2:
            u2 = int(outside[int(rng.integers(len(outside)))])
            span_Iu2 = view.span(I | {u2})
            swaps = [v for v in outside if v != u2 and v in span_Iu2]
            if swaps:
                u1 = int(swaps[int(rng.integers(len(swaps)))])
                if view.span(I | {u1}) != span_Iu2:
                    result.failures.append(
                        f"span swap equality fails: I={sorted(I)} u={u1} u'={u2}")
    return result


def _records_key(trace, with_kicks):
    if with_kicks:
        return [(r.element, r.accepted, r.kicked, r.kicked_was_sample)
                for r in trace.records]
    return [(r.element, r.accepted) for r in trace.records]


def _suite_equivalences(cases: int, seed: int) -> SuiteResult:
    """Trace-for-trace policy equivalences on seeded schedules: the
    contracted sampling rule against the reference-set framework on graphic
    instances, and the three uniform-matroid reductions."""
    result = SuiteResult("equivalences", cases)
    rng = np.random.default_rng(np.random.SeedSequence((seed, 0xC3)))
    for run in range(cases):
        p = 0.2 + 0.6 * float(rng.random())

        nv = int(rng.integers(3, 7))
        ne = int(rng.integers(3, 13))
        g = random_graphic(nv, ne, rng)
        sched = draw_schedule(g.weights, rng)
        t_sc = run_trial("sample-contracted", g.view, g.weights, sched, p)
        t_gf = run_trial(PolicySpec("greedy-framework"), g.view, g.weights, sched, p)
        if _records_key(t_sc, False) != _records_key(t_gf, False):
            result.failures.append(
                f"run {run}: contracted sampling != reference framework on {ne} edges")

        n = int(rng.integers(4, 13))
        k = int(rng.integers(1, 5))
        uni = uniform_instance(n, k)
        sched = draw_schedule(uni.weights, rng)
        t_vm = run_trial("virtual-msp", uni.view, uni.weights, sched, p)
        t_vu = run_trial("virtual-uniform", uni.view, uni.weights, sched, p)
        if _records_key(t_vm, True) != _records_key(t_vu, True):
            result.failures.append(f"run {run}: virtual twins diverge on {k}-uniform")
        t_sc = run_trial("sample-contracted", uni.view, uni.weights, sched, p)
        t_op = run_trial("optimistic", uni.view, uni.weights, sched, p)
        if _records_key(t_sc, False) != _records_key(t_op, False):
            result.failures.append(f"run {run}: optimistic diverges on {k}-uniform")

        one = uniform_instance(int(rng.integers(3, 10)), 1)
        sched = draw_schedule(one.weights, rng)
        t_dy = run_trial("dynkin", one.view, one.weights, sched, p)
        for other in ("sample", "sample-contracted"):
            t_other = run_trial(other, one.view, one.weights, sched, p)
            if _records_key(t_dy, False) != _records_key(t_other, False):
                result.failures.append(f"run {run}: {other} diverges from dynkin on 1-uniform")
    return result


def _suite_claw_blocker(trials: int, seed: int, n: int, p: float) -> SuiteResult:
    result = SuiteResult("claw-blocker", trials)
    bundle = hat_graph(n)
    for idx, trace in enumerate(trial_stream("virtual-msp", bundle.view,
                                             bundle.weights, p, trials, seed)):
        if not check_claw_blocker(trace, bundle):
            result.failures.append(f"trial {idx}: hub edge not protected")
    return result


def _suite_forbidden_consistency(trials: int, seed: int, n: int, p: float) -> SuiteResult:
    result = SuiteResult("forbidden-consistency", trials)
    bundle = hat_graph(n)
    oracle = hat_forbidden_oracle(bundle)
    for idx, trace in enumerate(trial_stream("virtual-msp", bundle.view,
                                             bundle.weights, p, trials, seed,
                                             record=True)):
        ok, rec = check_forbidden_consistency(trace, oracle, bundle.view, bundle.weights)
        if not ok:
            result.failures.append(
                f"trial {idx}: unexcused rejection of element {rec.element}")
        if not check_first_live_accepted(trace, bundle.view, bundle.weights):
            result.failures.append(f"trial {idx}: first live arrival wrongly rejected")
    return result


SUITE_NAMES = ("matroid-axioms", "mwb-lemmas", "equivalences",
               "claw-blocker", "forbidden-consistency")


def run_suite(name: str, *, cases: int | None = None, trials: int | None = None,
              seed: int = 0, n: int | None = None, p: float = 0.5) -> SuiteResult:
    if name == "matroid-axioms":
        return _suite_matroid_axioms(cases or 20, seed)
    if name == "mwb-lemmas":
        return _suite_mwb_lemmas(cases or 2000, seed)
    if name == "equivalences":
        return _suite_equivalences(cases or 200, seed)
    if name == "claw-blocker":
        return _suite_claw_blocker(trials or 2000, seed, n or 5, p)
    if name == "forbidden-consistency":
        return _suite_forbidden_consistency(trials or 1000, seed, n or 5, p)
    raise ValueError(f"unknown suite: {name!r}")
