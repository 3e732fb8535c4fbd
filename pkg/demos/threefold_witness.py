"""A reductive threefold without a Kaehler-Einstein metric.

The rank-5 toric Fano threefold obtained from projective 3-space by four
blow-ups has R(P) = -R(P) (so its automorphism group is reductive), yet
its barycenter is nonzero: reductivity does not travel back up the
implication chain.  Everything below is an exact rational computation.
"""

from fractions import Fraction

from toricsym import (
    alpha_invariant,
    delta_invariant,
    polytope_from_fan,
    roots,
    verify_implication_chain,
    volume_and_barycenter,
)
from toricsym.datasets import load_bundled

fan = load_bundled("fano3fold_5_2")
p = polytope_from_fan(fan)

print("rays:")
for r in fan.rays:
    print("  ", r)
print("facet system:", [(a, str(r)) for a, r in p.inequalities])

vol, bc = volume_and_barycenter(p)
print(f"volume   = {vol}")
print(f"barycenter = ({bc[0]}, {bc[1]}, {bc[2]})  -- nonzero, no KE metric")

rd = roots(fan)
print("roots:", sorted(rd.root_set), "-> centrally lattice symmetric:",
      rd.is_centrally_lattice_symmetric())

print(f"alpha (full symmetry group) = {alpha_invariant(fan)}")
print(f"delta = {delta_invariant(fan)}  (< 1: K-unstable)")

report = verify_implication_chain(fan, k_budget=4)
print("chain nodes:")
for node, value in report.nodes:
    print(f"  {node:22s} {value}")
print("chain consistent:", report.consistent)
assert report.node("lattice_symmetric") and not report.node("bc_zero")
print("\nwitness: the last implication of the chain is strictly one-way.")
