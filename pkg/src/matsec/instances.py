"""Benchmark instance families with their exact weight orders.

Every generator emits positive integer weights (pairwise distinct), so
utility ratios downstream stay exact rationals. Named elements let tests
and fixtures talk about edges by role ("e_inf", "t_3") instead of raw ids.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matroid import GraphicMatroid, MatroidView, UniformMatroid, WeightedGroundSet


@dataclass(frozen=True, eq=False)
class InstanceBundle:
    """A view, its weights, role names for elements, and the precomputed optimum."""

    view: MatroidView
    weights: WeightedGroundSet
    named: dict
    mwb: frozenset

    def id_of(self, name: str) -> int:
        return self.named[name]

    def ids_of(self, *names: str) -> list[int]:
        return [self.named[n] for n in names]


def _bundle(base, weights, named) -> InstanceBundle:
    view = MatroidView.full(base)
    return InstanceBundle(view, weights, dict(named), view.greedy_mwb(weights))


def triangle() -> InstanceBundle:
    """Three edges on a 3-cycle, weights 1 < 2 < 3; optimum is {e2, e3}."""
    base = GraphicMatroid(3, ((0, 1), (1, 2), (2, 0)))
    weights = WeightedGroundSet.from_weights([1, 2, 3], ("e1", "e2", "e3"))
    return _bundle(base, weights, {"e1": 0, "e2": 1, "e3": 2})


def double_triangle() -> InstanceBundle:
    """A 3-cycle with every edge doubled; weight of copy j of side i is i + 3(j-1)."""
    sides = ((0, 1), (1, 2), (2, 0))
    endpoints = []
    names = []
    weights = []
    for j in (1, 2):
        for i in (1, 2, 3):
            endpoints.append(sides[i - 1])
            names.append(f"e_{i}_{j}")
            weights.append(i + 3 * (j - 1))
    base = GraphicMatroid(3, tuple(endpoints))
    ws = WeightedGroundSet.from_weights(weights, tuple(names))
    return _bundle(base, ws, {name: u for u, name in enumerate(names)})


def hat_graph(n: int) -> InstanceBundle:
    """Two hub vertices joined by one heavy edge, plus n two-edge claws.

    Vertices: 0 (top hub), 1 (bottom hub), 1+i for claw i. Edge t_i joins
    the top hub to claw vertex i, b_i the bottom hub. The weight chain is
    e_inf > t_1 > ... > t_n > b_1 > ... > b_n, with the hub edge heavier
    than everything else combined (weight 1 + sum of the rest), so the
    optimum is e_inf plus all top edges.
    """
    if n < 1:
        raise ValueError("hat graph needs n >= 1")
    endpoints = [(0, 1)]
    names = ["e_inf"]
    weights = [1 + n * (2 * n + 1)]  # 1 + sum of all claw-edge weights
    for i in range(1, n + 1):
        endpoints.append((0, 1 + i))
        names.append(f"t_{i}")
        weights.append(2 * n - i + 1)
    for i in range(1, n + 1):
        endpoints.append((1, 1 + i))
        names.append(f"b_{i}")
        weights.append(n - i + 1)
    base = GraphicMatroid(n + 2, tuple(endpoints))
    ws = WeightedGroundSet.from_weights(weights, tuple(names))
    return _bundle(base, ws, {name: u for u, name in enumerate(names)})


def modified_hat_graph(n: int) -> InstanceBundle:
    """Hat variant with four edges per claw and a two-vertex claw path.

    Vertices: 0 (top hub), 1 (bottom hub), and per claw i the pair
    v_{i,1} = 2i, v_{i,2} = 2i+1. Claw i carries
        1_i = (top, v_{i,2}),  2_i = (top, v_{i,1}),
        3_i = (v_{i,1}, v_{i,2}),  4_i = (bottom, v_{i,2}),
    and the weight chain is
        e_inf > 4_1 > ... > 4_n > 3_1 > ... > 3_n > 2_1 > ... > 2_n > 1_1 > ... > 1_n.
    The optimum is e_inf plus every 4_i and 3_i.
    """
    if n < 1:
        raise ValueError("modified hat graph needs n >= 1")
    endpoints = [(0, 1)]
    names = ["e_inf"]
    weights = [1 + 2 * n * (4 * n + 1)]  # 1 + sum(1..4n)
    groups = (
        (1, lambda i: (0, 2 * i + 1)),
        (2, lambda i: (0, 2 * i)),
        (3, lambda i: (2 * i, 2 * i + 1)),
        (4, lambda i: (1, 2 * i + 1)),
    )
    for g, ends in groups:
        for i in range(1, n + 1):
            endpoints.append(ends(i))
            names.append(f"{g}_{i}")
            weights.append(g * n - i + 1)
    base = GraphicMatroid(2 * n + 2, tuple(endpoints))
    ws = WeightedGroundSet.from_weights(weights, tuple(names))
    return _bundle(base, ws, {name: u for u, name in enumerate(names)})


def uniform_instance(n: int, k: int, weights=None) -> InstanceBundle:
    """k-uniform matroid on n elements; default weight of element i is i+1,
    labels match the default weights so streams read naturally."""
    if weights is None:
        weights = list(range(1, n + 1))
    ws = WeightedGroundSet.from_weights(
        weights, tuple(str(w) for w in weights))
    named = {ws.label(u): u for u in range(n)}
    if len(named) != n:
        raise ValueError("weight labels collide; pass distinct weights")
    return _bundle(UniformMatroid(n, k), ws, named)


def random_graphic(num_vertices: int, num_edges: int, rng) -> InstanceBundle:
    """Uniformly random endpoints (parallel edges and self-loops allowed),
    weights a random permutation of 1..num_edges."""
    rng = np.random.default_rng(rng)
    endpoints = tuple(
        (int(rng.integers(num_vertices)), int(rng.integers(num_vertices)))
        for _ in range(num_edges))
    weights = [int(w) + 1 for w in rng.permutation(num_edges)]
    base = GraphicMatroid(num_vertices, endpoints)
    labels = tuple(f"e{u}" for u in range(num_edges))
    ws = WeightedGroundSet.from_weights(weights, labels)
    return _bundle(base, ws, {lab: u for u, lab in enumerate(labels)})


def fuzz_corpus(count: int, seed: int, max_vertices: int = 5,
                max_edges: int = 8) -> list[InstanceBundle]:
    """Seeded mix of small random graphic and uniform instances for
    property suites; deterministic for a given (count, seed)."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, 0xF0)))
    bundles = []
    for idx in range(count):
        if idx % 4 == 3:
            n = int(rng.integers(2, max_edges + 1))
            k = int(rng.integers(0, n + 1))
            bundles.append(uniform_instance(n, k))
        else:
            nv = int(rng.integers(2, max_vertices + 1))
            ne = int(rng.integers(1, max_edges + 1))
            bundles.append(random_graphic(nv, ne, rng))
    return bundles
