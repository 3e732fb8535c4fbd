"""Parametric families of Fano fans used as worked counterexamples."""

from .errors import ValidationError
from .fan import Fan


def futaki_rays(n1, n2):
    """Ray matrix of the blow-up of projective space along two disjoint
    linear subspaces of dimensions n1-1 and n2-1.

    Columns: the n1+n2+2 projective-space rays (standard basis plus the
    all-minus-ones vector), then the two blow-up rays supported on the
    last n2+1 coordinates.  Dimension is n1+n2+1; the variety is smooth
    Fano with reductive symmetry for every n1, n2 >= 1, and its barycenter
    vanishes exactly when n1 = n2.
    """
    if n1 < 1 or n2 < 1:
        raise ValidationError("both parameters must be positive")
    n = n1 + n2 + 1
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append((-1,) * n)
    rays.append((0,) * n1 + (-1,) * (n2 + 1))
    rays.append((0,) * n1 + (1,) * (n2 + 1))
    return tuple(rays)


def generate_futaki(n1, n2):
    """The fan of the two-subspace blow-up, via the face-fan construction."""
    return Fan.from_rays(futaki_rays(n1, n2))
