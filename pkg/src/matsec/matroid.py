"""Weighted ground sets, uniform and graphic matroids, minors, greedy bases.

Only the two matroid families needed by the simulator are implemented.
Graphic independence is union-find cycle detection, so parallel edges
(a 2-cycle) and self-loops (dependent singletons) work out of the box.
Views are immutable values: restrict() and contract() return new views,
and a view can be shared freely across simulation trials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TextIO, Union

WeightLike = Union[int, str, float, Fraction]


class DomainError(ValueError):
    """An element lies outside the effective ground set of a view."""


class PreconditionError(ValueError):
    """A structural precondition failed, e.g. contracting a dependent set."""


def _as_weight(value: WeightLike) -> Fraction:
    # Fraction(float) is exact; callers wanting decimal semantics pass strings.
    return Fraction(value)


@dataclass(frozen=True)
class WeightedGroundSet:
    """Elements 0..n-1 carrying strictly positive, pairwise distinct weights.

    Distinct weights make the max-weight basis unique and remove every
    tie-breaking question from greedy, so duplicates are rejected here
    rather than handled downstream.
    """

    weights: tuple[Fraction, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.weights):
            raise ValueError("labels and weights must have equal length")
        for w in self.weights:
            if not isinstance(w, Fraction):
                raise ValueError("weights must be Fractions; use from_weights()")
            if w <= 0:
                raise ValueError(f"weights must be positive, got {w}")
        if len(set(self.weights)) != len(self.weights):
            raise ValueError("weights must be pairwise distinct")
        order = tuple(sorted(range(len(self.weights)),
                             key=self.weights.__getitem__, reverse=True))
        rank = [0] * len(order)
        for pos, u in enumerate(order):
            rank[u] = pos
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def from_weights(cls, weights: Iterable[WeightLike],
                     labels: Iterable[str] | None = None) -> "WeightedGroundSet":
        ws = tuple(_as_weight(w) for w in weights)
        if labels is None:
            labels = tuple(f"u{i}" for i in range(len(ws)))
        return cls(ws, tuple(labels))

    @property
    def count(self) -> int:
        return len(self.weights)

    def weight(self, u: int) -> Fraction:
        return self.weights[u]

    def label(self, u: int) -> str:
        return self.labels[u]

    def order(self) -> tuple[int, ...]:
        """All element ids, heaviest first."""
        return self._order

    def rank_of(self, u: int) -> int:
        """Position of u in the descending weight order; 0 is the heaviest."""
        return self._rank[u]

    def heavier(self, u: int, v: int) -> bool:
        return self._rank[u] < self._rank[v]

    def sort_desc(self, elements: Iterable[int]) -> list[int]:
        return sorted(elements, key=self._rank.__getitem__)

    def total(self, elements: Iterable[int]) -> Fraction:
        return sum((self.weights[u] for u in elements), Fraction(0))


@dataclass(frozen=True)
class UniformMatroid:
    """Independent sets are exactly the subsets of size at most k."""

    size: int
    k: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be nonnegative")
        if not 0 <= self.k <= self.size:
            raise ValueError("k must satisfy 0 <= k <= size")


@dataclass(frozen=True)
class GraphicMatroid:
    """Edge set of an undirected multigraph; independent = acyclic."""

    num_vertices: int
    endpoints: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "endpoints",
                           tuple((int(a), int(b)) for a, b in self.endpoints))
        for a, b in self.endpoints:
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise ValueError(f"edge endpoint out of range: ({a}, {b})")

    @property
    def size(self) -> int:
        return len(self.endpoints)


BaseMatroid = Union[UniformMatroid, GraphicMatroid]


class UnionFind:
    """Array union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Join the components of a and b; False iff already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _base_independent(base: BaseMatroid, elements: frozenset) -> bool:
    if isinstance(base, UniformMatroid):
        return len(elements) <= base.k
    uf = UnionFind(base.num_vertices)
    for u in elements:
        if not uf.union(*base.endpoints[u]):
            return False
    return True


@dataclass(frozen=True)
class MatroidView:
    """A base matroid composed with a restriction and a contraction.

    The effective ground set is restriction minus contraction; querying
    anything outside it raises DomainError. A set S is independent in the
    view iff S together with the contraction is independent in the base.
    """

    base: BaseMatroid
    restriction: frozenset
    contraction: frozenset

    def __post_init__(self):
        object.__setattr__(self, "restriction", frozenset(self.restriction))
        object.__setattr__(self, "contraction", frozenset(self.contraction))
        n = self.base.size
        for u in self.restriction | self.contraction:
            if not 0 <= u < n:
                raise DomainError(f"element {u} outside base ground set")
        if not _base_independent(self.base, self.contraction):
            raise PreconditionError("contraction set must be independent in the base")
        object.__setattr__(self, "_ground", self.restriction - self.contraction)

    @classmethod
    def full(cls, base: BaseMatroid) -> "MatroidView":
        return cls(base, frozenset(range(base.size)), frozenset())

    @property
    def ground(self) -> frozenset:
        return self._ground

    def _check_domain(self, S: frozenset) -> None:
        if not S <= self._ground:
            bad = sorted(S - self._ground)
            raise DomainError(f"elements outside effective ground set: {bad}")

    def _seeded_union_find(self) -> UnionFind:
        uf = UnionFind(self.base.num_vertices)
        for u in self.contraction:
            uf.union(*self.base.endpoints[u])
        return uf

    def is_independent(self, S: Iterable[int]) -> bool:
        S = frozenset(S)
        self._check_domain(S)
        return _base_independent(self.base, S | self.contraction)

    def rank(self, S: Iterable[int]) -> int:
        S = frozenset(S)
        self._check_domain(S)
        if isinstance(self.base, UniformMatroid):
            return min(len(S), self.base.k - len(self.contraction))
        uf = self._seeded_union_find()
        return sum(1 for u in S if uf.union(*self.base.endpoints[u]))

    def span(self, S: Iterable[int]) -> frozenset:
        """Elements whose addition to S does not raise its rank.

        Always a superset of S; with an empty S it still contains every
        loop (self-loop edges, or everything when the view has no free
        capacity left).
        """
        S = frozenset(S)
        self._check_domain(S)
        if isinstance(self.base, UniformMatroid):
            k_eff = self.base.k - len(self.contraction)
            return frozenset(self._ground) if len(S) >= k_eff else S
        uf = self._seeded_union_find()
        for u in S:
            uf.union(*self.base.endpoints[u])
        spanned = []
        for u in self._ground:
            a, b = self.base.endpoints[u]
            if uf.find(a) == uf.find(b):
                spanned.append(u)
        return frozenset(spanned)

    def greedy_mwb(self, weights: WeightedGroundSet,
                   S: Iterable[int] | None = None) -> frozenset:
        """Max-weight basis of S (default: the whole effective ground set).

        Standard greedy: scan S heaviest first, keep whatever stays
        independent. Unique because weights are pairwise distinct.
        """
        S = self._ground if S is None else frozenset(S)
        self._check_domain(S)
        if isinstance(self.base, UniformMatroid):
            k_eff = self.base.k - len(self.contraction)
            return frozenset(weights.sort_desc(S)[:max(k_eff, 0)])
        uf = self._seeded_union_find()
        return frozenset(u for u in weights.sort_desc(S)
                         if uf.union(*self.base.endpoints[u]))

    def restrict(self, S: Iterable[int]) -> "MatroidView":
        S = frozenset(S)
        self._check_domain(S)
        return MatroidView(self.base, S, self.contraction)

    def contract(self, I: Iterable[int]) -> "MatroidView":
        I = frozenset(I)
        self._check_domain(I)
        if not self.is_independent(I):
            raise PreconditionError("cannot contract a dependent set")
        return MatroidView(self.base, self.restriction, self.contraction | I)


# -- instance file format ---------------------------------------------------
#
#   matroid uniform <n> <k>          followed by n lines   elem <id> <weight>
#   matroid graphic <V> <E>          followed by E lines   edge <id> <u> <v> <weight>
#
# Weights are decimal strings when exactly representable (every shipped
# generator emits integers), "num/den" otherwise; blank lines and lines
# starting with '#' are ignored.


def format_weight(w: Fraction) -> str:
    num, den = w.numerator, w.denominator
    if den == 1:
        return str(num)
    d = den
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    m = max(twos, fives)
    digits = str(num * 10 ** m // den).rjust(m + 1, "0")
    return f"{digits[:-m]}.{digits[-m:]}"


def dump_instance(base: BaseMatroid, weights: WeightedGroundSet, fp: TextIO) -> None:
    if isinstance(base, UniformMatroid):
        fp.write(f"matroid uniform {base.size} {base.k}\n")
        for u in range(base.size):
            fp.write(f"elem {u} {format_weight(weights.weight(u))}\n")
    else:
        fp.write(f"matroid graphic {base.num_vertices} {base.size}\n")
        for u, (a, b) in enumerate(base.endpoints):
            fp.write(f"edge {u} {a} {b} {format_weight(weights.weight(u))}\n")


def parse_instance(fp: TextIO) -> tuple[BaseMatroid, WeightedGroundSet]:
    lines = [ln.strip() for ln in fp]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty instance file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "matroid":
        raise ValueError(f"bad header: {lines[0]!r}")
    kind = header[1]
    if kind == "uniform":
        n, k = int(header[2]), int(header[3])
        weights: list[Fraction | None] = [None] * n
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3 or parts[0] != "elem":
                raise ValueError(f"bad elem line: {ln!r}")
            u = int(parts[1])
            if not 0 <= u < n or weights[u] is not None:
                raise ValueError(f"bad or duplicate element id {u}")
            weights[u] = Fraction(parts[2])
        if any(w is None for w in weights):
            raise ValueError("missing elem lines")
        return UniformMatroid(n, k), WeightedGroundSet.from_weights(weights)
    if kind == "graphic":
        nv, ne = int(header[2]), int(header[3])
        ends: list[tuple[int, int] | None] = [None] * ne
        weights = [None] * ne
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 5 or parts[0] != "edge":
                raise ValueError(f"bad edge line: {ln!r}")
            u = int(parts[1])
            if not 0 <= u < ne or ends[u] is not None:
                raise ValueError(f"bad or duplicate edge id {u}")
            ends[u] = (int(parts[2]), int(parts[3]))
            weights[u] = Fraction(parts[4])
        if any(e is None for e in ends):
            raise ValueError("missing edge lines")
        labels = tuple(f"e{u}" for u in range(ne))
        return (GraphicMatroid(nv, tuple(ends)),
                WeightedGroundSet.from_weights(weights, labels))
    raise ValueError(f"unknown matroid kind: {kind!r}")
