"""Quantized barycenters, counting polynomials, and the rigidity theorem.

Bc_k averages the lattice points of the k-th dilation and converges to
the continuous barycenter.  Each coordinate of Bc_k is a fixed rational
function of k whose numerator has degree at most n; as soon as n+1 of the
Bc_k vanish, all of them do, together with the continuous barycenter.
"""

from toricsym import (
    barycenter_rational_function,
    ehrhart_polynomial,
    polytope_from_fan,
    quantized_barycenter,
    rigidity_verdict,
    volume_and_barycenter,
)
from toricsym.datasets import load_bundled

fan = load_bundled("dp1")
p = polytope_from_fan(fan)
_, bc = volume_and_barycenter(p)

print("one-point blow-up of the plane")
print("continuous barycenter:", tuple(str(x) for x in bc))
print("quantized barycenters (all on the diagonal fixed line):")
for k in range(1, 9):
    bck = quantized_barycenter(p, k)
    print(f"  k={k}:  ({bck[0]}, {bck[1]})")

e = ehrhart_polynomial(p)
print("counting polynomial:", " + ".join(
    f"({c})k^{d}" for d, c in enumerate(e.coefficients)))

brf = barycenter_rational_function(p)
print("numerator of k -> Bc_k, coordinate 1:",
      tuple(str(c) for c in brf.numerator(0)))
for k in (5, 10, 20):
    assert brf.barycenter_at(k) == quantized_barycenter(p, k)
print("closed form agrees with direct counts at k = 5, 10, 20")

print()
print("rigidity on the hexagon (all barycenters vanish):")
hexagon = polytope_from_fan(load_bundled("dp3"))
verdict = rigidity_verdict(hexagon, [1, 2, 3])
print("  identically zero:", verdict.identically_zero)
print("  continuous barycenter:", verdict.continuous_barycenter)

print("rigidity on the blow-up (a single nonzero witness settles it):")
verdict = rigidity_verdict(p, [1, 2, 3])
print("  witnesses:", [(k, tuple(str(x) for x in b)) for k, b in verdict.witnesses])
