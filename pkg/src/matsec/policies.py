"""Online accept/reject policies and the incremental max-weight-basis kernel.

Every policy sees elements one at a time in arrival order: sampling-phase
elements through observe_sample() (stored, never accepted) and the rest
through decide(). A policy is reset by start(), so one instance can serve
many sequential trials; build_policy() makes fresh instances for anything
concurrent.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .matroid import (DomainError, GraphicMatroid, MatroidView, UniformMatroid,
                      UnionFind, WeightedGroundSet)


@dataclass(frozen=True)
class Decision:
    accept: bool
    kicked: int | None = None
    kicked_was_sample: bool | None = None


class PolicyViolation(RuntimeError):
    """A policy or its reference rule broke one of its structural invariants."""


# -- incremental max-weight basis -------------------------------------------


class RunningMwb:
    """Maintains the max-weight basis of everything inserted so far.

    Inserting u replaces the basis B with the max-weight basis of B + u,
    which equals the max-weight basis of the whole inserted set: at most
    one element is displaced per insertion and a displaced element never
    returns, so the small update is exact. insert() reports whether u
    entered the basis and which element (if any) it displaced.
    """

    def insert(self, u: int) -> tuple[bool, int | None]:
        raise NotImplementedError

    def basis(self) -> frozenset:
        raise NotImplementedError


class _UniformRunningMwb(RunningMwb):
    def __init__(self, view: MatroidView, weights: WeightedGroundSet):
        self._ground = view.ground
        self._k = view.base.k - len(view.contraction)
        self._rank_of = weights.rank_of
        self._ranks: list[int] = []      # ascending rank values, heaviest first
        self._by_rank: dict[int, int] = {}

    def insert(self, u: int) -> tuple[bool, int | None]:
        if u not in self._ground:
            raise DomainError(f"element {u} outside effective ground set")
        r = self._rank_of(u)
        if r in self._by_rank:
            raise ValueError(f"element {u} inserted twice")
        if len(self._ranks) < self._k:
            bisect.insort(self._ranks, r)
            self._by_rank[r] = u
            return True, None
        if self._k == 0 or r > self._ranks[-1]:
            return False, None           # lighter than the whole basis
        kicked = self._by_rank.pop(self._ranks.pop())
        bisect.insort(self._ranks, r)
        self._by_rank[r] = u
        return True, kicked

    def basis(self) -> frozenset:
        return frozenset(self._by_rank.values())


class _GraphicRunningMwb(RunningMwb):
    def __init__(self, view: MatroidView, weights: WeightedGroundSet):
        base = view.base
        self._ground = view.ground
        self._endpoints = base.endpoints
        self._rank_of = weights.rank_of
        # collapse contracted edges so the basis forest lives on component roots
        uf = UnionFind(base.num_vertices)
        for e in view.contraction:
            uf.union(*base.endpoints[e])
        self._root = [uf.find(v) for v in range(base.num_vertices)]
        self._adj: dict[int, dict[int, int]] = {}   # root -> {root: edge id}
        self._edges: set[int] = set()

    def insert(self, u: int) -> tuple[bool, int | None]:
        if u not in self._ground:
            raise DomainError(f"element {u} outside effective ground set")
        if u in self._edges:
            raise ValueError(f"element {u} inserted twice")
        self._edges.add(u)
        ea, eb = self._endpoints[u]
        a, b = self._root[ea], self._root[eb]
        if a == b:
            return False, None           # loop after contraction: never independent
        path = self._path(a, b)
        adj = self._adj
        if path is None:
            adj.setdefault(a, {})[b] = u
            adj.setdefault(b, {})[a] = u
            return True, None
        # unique circuit = path + u; the lightest circuit edge leaves the basis
        rank_of = self._rank_of
        worst_edge, worst_rank, worst_ends = u, rank_of(u), None
        for x, y, e in path:
            r = rank_of(e)
            if r > worst_rank:
                worst_edge, worst_rank, worst_ends = e, r, (x, y)
        if worst_edge == u:
            return False, None
        x, y = worst_ends
        del adj[x][y]
        del adj[y][x]
        adj.setdefault(a, {})[b] = u
        adj.setdefault(b, {})[a] = u
        return True, worst_edge

    def _path(self, a: int, b: int):
        """Edges along the forest path a..b, or None if disconnected."""
        adj = self._adj
        if a not in adj or b not in adj:
            return None
        parent = {a: None}
        stack = [a]
        found = False
        while stack and not found:
            x = stack.pop()
            for y, e in adj[x].items():
                if y not in parent:
                    parent[y] = (x, e)
                    if y == b:
                        found = True
                        break
                    stack.append(y)
        if not found:
            return None
        path = []
        y = b
        while parent[y] is not None:
            x, e = parent[y]
            path.append((x, y, e))
            y = x
        return path

    def basis(self) -> frozenset:
        return frozenset(e for d in self._adj.values() for e in d.values())


def running_mwb(view: MatroidView, weights: WeightedGroundSet) -> RunningMwb:
    if isinstance(view.base, UniformMatroid):
        return _UniformRunningMwb(view, weights)
    return _GraphicRunningMwb(view, weights)


class AcceptedSetTracker:
    """Incremental independence check for a growing accepted set."""

    def __init__(self, view: MatroidView):
        if isinstance(view.base, UniformMatroid):
            self._slots = view.base.k - len(view.contraction)
            self._count = 0
            self._uf = None
        else:
            self._uf = UnionFind(view.base.num_vertices)
            for e in view.contraction:
                self._uf.union(*view.base.endpoints[e])
            self._endpoints = view.base.endpoints

    def can_add(self, u: int) -> bool:
        if self._uf is None:
            return self._count < self._slots
        a, b = self._endpoints[u]
        return self._uf.find(a) != self._uf.find(b)

    def add(self, u: int) -> None:
        if self._uf is None:
            if self._count >= self._slots:
                raise PolicyViolation("accepted past capacity")
            self._count += 1
        elif not self._uf.union(*self._endpoints[u]):
            raise PolicyViolation("accepted a dependence-creating element")


# -- policies ----------------------------------------------------------------


class Policy:
    """One online decision procedure; start() must fully reset state."""

    name = "?"

    def start(self, view: MatroidView, weights: WeightedGroundSet, p: float) -> None:
        raise NotImplementedError

    def observe_sample(self, u: int) -> None:
        raise NotImplementedError

    def decide(self, u: int) -> Decision:
        raise NotImplementedError


class SamplePolicy(Policy):
    """Accept u when the accepted set stays independent and u belongs to the
    max-weight basis of the samples plus u."""

    name = "sample"

    def start(self, view, weights, p):
        self.view = view
        self.weights = weights
        self.samples: set[int] = set()
        self.accepted: set[int] = set()
        self._tracker = AcceptedSetTracker(view)

    def observe_sample(self, u):
        self.samples.add(u)

    def decide(self, u):
        feasible = self._tracker.can_add(u)
        if feasible and u in self.view.greedy_mwb(self.weights, self.samples | {u}):
            self._tracker.add(u)
            self.accepted.add(u)
            return Decision(True)
        return Decision(False)


class SampleContractedPolicy(Policy):
    """Like SamplePolicy, but the basis query runs in the matroid contracted
    by the accepted set, so earlier acceptances consume capacity."""

    name = "sample-contracted"

    def start(self, view, weights, p):
        self.view = view
        self.weights = weights
        self.samples: set[int] = set()
        self.accepted: set[int] = set()

    def observe_sample(self, u):
        self.samples.add(u)

    def decide(self, u):
        minor = self.view.contract(self.accepted)
        if u in minor.greedy_mwb(self.weights, self.samples | {u}):
            self.accepted.add(u)
            return Decision(True)
        return Decision(False)


class _SampleContractedRule:
    """Reference set = accepted elements plus the max-weight basis of the
    samples in the matroid contracted by the accepted set."""

    name = "sample-contracted"

    def rebuild(self, view, weights, samples, accepted):
        minor = view.contract(accepted)
        return set(minor.greedy_mwb(weights, samples)) | set(accepted)


_REFERENCE_RULES = {"sample-contracted": _SampleContractedRule}


class GreedyFrameworkPolicy(Policy):
    """Reference-set framework: keep an independent reference set I with
    A <= I <= A + S whose span covers everything seen; accept u iff u enters
    the max-weight basis of I + u after contracting the accepted set.

    The rule's structural invariants are re-checked at every decision and
    a violation raises PolicyViolation instead of being repaired.
    """

    name = "greedy-framework"

    def __init__(self, reference: str = "sample-contracted"):
        if reference not in _REFERENCE_RULES:
            raise ValueError(f"unknown reference rule: {reference!r}")
        self._rule = _REFERENCE_RULES[reference]()

    def start(self, view, weights, p):
        self.view = view
        self.weights = weights
        self.samples: set[int] = set()
        self.accepted: set[int] = set()
        self.arrived: set[int] = set()
        self._reference: set[int] | None = None

    def observe_sample(self, u):
        self.samples.add(u)
        self.arrived.add(u)

    def decide(self, u):
        if self._reference is None:
            self._reference = self._rule.rebuild(
                self.view, self.weights, self.samples, self.accepted)
        ref = self._reference
        if not self.accepted <= ref <= (self.accepted | self.samples):
            raise PolicyViolation(
                "reference set must satisfy accepted <= reference <= accepted | samples")
        if not self.arrived <= self.view.span(ref):
            raise PolicyViolation("reference set fails to span the arrived elements")
        minor = self.view.restrict(ref | {u}).contract(self.accepted)
        accept = u in minor.greedy_mwb(self.weights)
        self.arrived.add(u)
        if accept:
            self.accepted.add(u)
            self._reference = self._rule.rebuild(
                self.view, self.weights, self.samples, self.accepted)
        return Decision(accept)


class VirtualMspPolicy(Policy):
    """Track the running max-weight basis of everything seen; accept u when
    the accepted set stays independent, u joins the running basis, and the
    element u displaces (if any) was a sample.

    cross_check=True recomputes the basis from scratch after every
    insertion; meant for tests, quadratic in the arrival count.
    """

    name = "virtual-msp"

    def __init__(self, cross_check: bool = False):
        self._cross_check = cross_check

    def start(self, view, weights, p):
        self.view = view
        self.weights = weights
        self._running = running_mwb(view, weights)
        self._tracker = AcceptedSetTracker(view)
        self._sampled: set[int] = set()
        self._seen: set[int] = set()
        self.accepted: set[int] = set()

    def _insert(self, u):
        result = self._running.insert(u)
        if self._cross_check:
            self._seen.add(u)
            expect = self.view.greedy_mwb(self.weights, self._seen)
            got = self._running.basis()
            if got != expect:
                raise PolicyViolation(
                    f"running basis drifted: {sorted(got)} != {sorted(expect)}")
        return result

    def observe_sample(self, u):
        self._sampled.add(u)
        self._insert(u)

    def decide(self, u):
        feasible = self._tracker.can_add(u)
        in_mwb, kicked = self._insert(u)
        kicked_was_sample = None if kicked is None else kicked in self._sampled
        if feasible and in_mwb and (kicked is None or kicked_was_sample):
            self._tracker.add(u)
            self.accepted.add(u)
            return Decision(True, kicked, kicked_was_sample)
        return Decision(False, kicked, kicked_was_sample)


def _effective_uniform_k(view: MatroidView, what: str) -> int:
    if not isinstance(view.base, UniformMatroid):
        raise ValueError(f"{what} runs on uniform matroids only")
    return view.base.k - len(view.contraction)


class DynkinPolicy(Policy):
    """Single-slot threshold rule: accept the first arrival heavier than
    every sample, then stop."""

    name = "dynkin"

    def start(self, view, weights, p):
        if _effective_uniform_k(view, "dynkin") != 1:
            raise ValueError("dynkin needs a 1-uniform instance")
        self._rank_of = weights.rank_of
        self._best_sample: int | None = None   # weight rank; lower is heavier
        self.accepted: set[int] = set()

    def observe_sample(self, u):
        r = self._rank_of(u)
        if self._best_sample is None or r < self._best_sample:
            self._best_sample = r

    def decide(self, u):
        if self.accepted:
            return Decision(False)
        r = self._rank_of(u)
        if self._best_sample is None or r < self._best_sample:
            self.accepted.add(u)
            return Decision(True)
        return Decision(False)


class OptimisticPolicy(Policy):
    """Threshold list of the heaviest samples, consumed lightest-first.

    With i acceptances so far, the next arrival must beat the (k-i)-th
    heaviest sample; when that sample does not exist the arrival is
    accepted on capacity alone, and the reference list is only popped
    when a threshold was actually consumed.
    """

    name = "optimistic"

    def __init__(self, k: int | None = None):
        self._k_param = k

    def start(self, view, weights, p):
        k_eff = _effective_uniform_k(view, "optimistic")
        if self._k_param is not None and self._k_param != k_eff:
            raise ValueError(f"k={self._k_param} does not match the {k_eff}-uniform instance")
        self._k = k_eff
        self._rank_of = weights.rank_of
        self._refs: list[int] = []          # ascending ranks, heaviest first
        self._ref_elem: dict[int, int] = {}
        self.accepted: set[int] = set()

    def observe_sample(self, u):
        r = self._rank_of(u)
        bisect.insort(self._refs, r)
        self._ref_elem[r] = u
        if len(self._refs) > self._k:
            self._ref_elem.pop(self._refs.pop())

    def decide(self, u):
        slots = self._k - len(self.accepted)
        if slots <= 0:
            return Decision(False)
        if slots > len(self._refs):
            self.accepted.add(u)            # no threshold to beat
            return Decision(True)
        if self._rank_of(u) < self._refs[slots - 1]:
            kicked = self._ref_elem.pop(self._refs.pop())
            self.accepted.add(u)
            return Decision(True, kicked, True)
        return Decision(False)


class VirtualUniformPolicy(Policy):
    """Top-k reference list with sample flags. The list always absorbs an
    arrival that beats its lightest entry, accepted or not; acceptance
    additionally requires the displaced entry to be a sample. Kept
    list-based on purpose as an independent twin of VirtualMspPolicy."""

    name = "virtual-uniform"

    def __init__(self, k: int | None = None):
        self._k_param = k

    def start(self, view, weights, p):
        k_eff = _effective_uniform_k(view, "virtual-uniform")
        if self._k_param is not None and self._k_param != k_eff:
            raise ValueError(f"k={self._k_param} does not match the {k_eff}-uniform instance")
        self._k = k_eff
        self._rank_of = weights.rank_of
        self._refs: list[int] = []
        self._ref_elem: dict[int, int] = {}
        self._sampled: set[int] = set()
        self.accepted: set[int] = set()

    def _absorb(self, u) -> tuple[bool, int | None]:
        r = self._rank_of(u)
        if len(self._refs) < self._k:
            bisect.insort(self._refs, r)
            self._ref_elem[r] = u
            return True, None
        if self._k == 0 or r > self._refs[-1]:
            return False, None
        kicked = self._ref_elem.pop(self._refs.pop())
        bisect.insort(self._refs, r)
        self._ref_elem[r] = u
        return True, kicked

    def observe_sample(self, u):
        self._sampled.add(u)
        self._absorb(u)

    def decide(self, u):
        feasible = len(self.accepted) < self._k
        in_top, kicked = self._absorb(u)
        kicked_was_sample = None if kicked is None else kicked in self._sampled
        if feasible and in_top and (kicked is None or kicked_was_sample):
            self.accepted.add(u)
            return Decision(True, kicked, kicked_was_sample)
        return Decision(False, kicked, kicked_was_sample)


# -- registry ----------------------------------------------------------------

_CANONICAL = {
    "greedy": "greedy-framework",
    "virtual": "virtual-msp",
}

POLICY_NAMES = ("dynkin", "optimistic", "virtual-uniform", "sample",
                "sample-contracted", "greedy-framework", "virtual-msp")


@dataclass(frozen=True)
class PolicySpec:
    """Names one policy family plus parameters; build() returns a fresh
    instance, so a single spec can seed many independent trials."""

    name: str
    k: int | None = None
    reference: str = "sample-contracted"

    def build(self) -> Policy:
        name = _CANONICAL.get(self.name, self.name)
        if name == "dynkin":
            return DynkinPolicy()
        if name == "optimistic":
            return OptimisticPolicy(self.k)
        if name == "virtual-uniform":
            return VirtualUniformPolicy(self.k)
        if name == "sample":
            return SamplePolicy()
        if name == "sample-contracted":
            return SampleContractedPolicy()
        if name == "greedy-framework":
            return GreedyFrameworkPolicy(self.reference)
        if name == "virtual-msp":
            return VirtualMspPolicy()
        raise ValueError(f"unknown policy: {self.name!r}")


def build_policy(spec) -> Policy:
    if isinstance(spec, Policy):
        return spec
    if isinstance(spec, str):
        spec = PolicySpec(spec)
    return spec.build()
