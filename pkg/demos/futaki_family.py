"""Blow-ups of projective space along two disjoint linear subspaces.

Every member is smooth Fano with reductive symmetry; the barycenter
vanishes exactly when the two subspaces have equal dimension.  The
unequal members were the first examples separating reductivity from the
existence of a Kaehler-Einstein metric.
"""

from fractions import Fraction

from toricsym import (
    generate_futaki,
    is_complete,
    is_fano,
    is_smooth,
    polytope_from_fan,
    roots,
    volume_and_barycenter,
)

for n1, n2 in ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3)):
    fan = generate_futaki(n1, n2)
    assert is_complete(fan) and is_smooth(fan) and is_fano(fan)
    p = polytope_from_fan(fan)
    vol, bc = volume_and_barycenter(p)
    rd = roots(fan)
    zero = (Fraction(0),) * fan.dim
    print(
        f"(n1,n2)=({n1},{n2})  dim {fan.dim}  rays {len(fan.rays)}  "
        f"reductive={rd.is_centrally_lattice_symmetric()}  "
        f"Bc{'=0' if bc == zero else '!=0'}"
    )
    if bc != zero:
        print("    barycenter:", tuple(str(x) for x in bc))
