"""Matroids, views, minors, and the greedy optimum.

Builds a small graphic matroid, takes a restriction and a contraction,
and shows that greedy agrees with exhaustive search on all of them.
"""

from matsec import (GraphicMatroid, MatroidView, WeightedGroundSet,
                    brute_force_mwb)

# a 4-cycle with one chord; weights make the chord irresistible
base = GraphicMatroid(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
weights = WeightedGroundSet.from_weights(
    [4, 3, 2, 1, 5], ("ab", "bc", "cd", "da", "ac"))
view = MatroidView.full(base)

print("ground set:", ", ".join(
    f"{weights.label(u)}={weights.weight(u)}" for u in sorted(view.ground)))
print("rank of everything:", view.rank(view.ground))
print("span of {ab, bc}:", sorted(weights.label(u) for u in view.span([0, 1])))

mwb = view.greedy_mwb(weights)
print("\ngreedy optimum:", sorted(weights.label(u) for u in mwb),
      "value", weights.total(mwb))
assert mwb == brute_force_mwb(view, weights)
print("matches exhaustive search")

print("\n-- restriction to the outer cycle --")
sub = view.restrict([0, 1, 2, 3])
mwb = sub.greedy_mwb(weights)
print("optimum:", sorted(weights.label(u) for u in mwb))
assert mwb == brute_force_mwb(sub, weights)

print("\n-- contraction of the chord --")
minor = view.contract([4])
print("ac contracted; are ab and bc still jointly independent?",
      minor.is_independent([0, 1]))
mwb = minor.greedy_mwb(weights)
print("optimum in the minor:", sorted(weights.label(u) for u in mwb))
assert mwb == brute_force_mwb(minor, weights)
print("greedy and brute force agree on every view")
