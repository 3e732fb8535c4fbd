"""Exact rational polytopes: dual description, faces, volume, barycenter.

Both descriptions are always carried together: facet inequalities
(integer normals, rational right-hand sides, meaning <y, normal> <= rhs)
and the irredundant vertex list, linked by a facet x vertex incidence
table.  All coordinates are Fractions; every computation is exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, gcd

from .errors import UnboundedPolytopeError, ValidationError
from .linalg import (
    det,
    dot,
    kernel_basis,
    primitive_vector,
    rank,
    solve_integer_cramer,
    vec_scale,
)


def _frac_vec(v):
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class HPolytope:
    """Inequality description: <y, normal> <= rhs for each (normal, rhs)."""

    dim: int
    inequalities: tuple  # of (normal: tuple[int], rhs: Fraction)

    @staticmethod
    def make(dim, inequalities):
        ineqs = []
        for normal, rhs in inequalities:
            if len(normal) != dim:
                raise ValidationError("inequality normal has wrong dimension")
            ineqs.append((tuple(int(x) for x in normal), Fraction(rhs)))
        return HPolytope(dim=dim, inequalities=tuple(ineqs))


@dataclass(frozen=True)
class VPolytope:
    """Irredundant vertex list."""

    vertices: tuple  # of tuple[Fraction]


@dataclass(frozen=True)
class Polytope:
    """Paired H- and V-description with facet x vertex incidence.

    `incidence[i]` is the frozenset of vertex indices lying on facet i.
    `dropped_inequalities` records redundant input rows removed during
    vertex enumeration.
    """

    h: HPolytope
    v: VPolytope
    incidence: tuple  # of frozenset[int]
    dropped_inequalities: tuple = field(default=(), compare=False)

    @property
    def dim(self):
        return self.h.dim

    @property
    def vertices(self):
        return self.v.vertices

    @property
    def inequalities(self):
        return self.h.inequalities


def _recession_is_trivial(normals, n):
    """True iff {d : <d, normal> <= 0 for all normals} = {0}."""
    if rank(normals) < n:
        return False
    if n == 1:
        return any(a[0] > 0 for a in normals) and any(a[0] < 0 for a in normals)
    for subset in combinations(normals, n - 1):
        kb = kernel_basis(subset)
        if len(kb) != 1:
            continue
        d = kb[0]
        for cand in (d, vec_scale(-1, d)):
            if all(dot(a, cand) <= 0 for a in normals):
                return False
    return True


def vertices_from_inequalities(h):
    """Vertex enumeration by exhaustive n-subset facet intersection.

    Raises UnboundedPolytopeError for a nontrivial recession cone and
    ValidationError when the feasible set is not full-dimensional.
    Redundant inequalities are dropped and reported on the result.
    """
    n = h.dim
    ineqs = h.inequalities
    normals = [a for a, _ in ineqs]
    if not _recession_is_trivial(normals, n):
        raise UnboundedPolytopeError("inequality system is unbounded")

    verts = {}
    for subset in combinations(range(len(ineqs)), n):
        a = tuple(ineqs[i][0] for i in subset)
        b = tuple(ineqs[i][1] for i in subset)
        x = solve_integer_cramer(a, b)
        if x is None:
            continue
        if all(dot(normal, x) <= rhs for normal, rhs in ineqs):
            verts[x] = True
    vertices = sorted(verts)
    if not vertices:
        raise ValidationError("inequality system has empty interior")
    if affine_rank(vertices) < n:
        raise ValidationError("feasible set is not full-dimensional")

    kept = []
    dropped = []
    incidence = []
    seen = {}
    for normal, rhs in ineqs:
        tight = frozenset(
            i for i, vtx in enumerate(vertices) if dot(normal, vtx) == rhs
        )
        if len(tight) == 0:
            dropped.append((normal, rhs))
            continue
        pts = [vertices[i] for i in tight]
        aff = affine_rank(pts)
        if aff < n - 1:
            dropped.append((normal, rhs))
            continue
        key = primitive_vector(normal)
        scale = next(Fraction(a, b) for a, b in zip(normal, key) if b)
        canon = (key, Fraction(rhs) / scale)
        if canon in seen:
            dropped.append((normal, rhs))
            continue
        seen[canon] = True
        kept.append((normal, Fraction(rhs)))
        incidence.append(tight)

    return Polytope(
        h=HPolytope(dim=n, inequalities=tuple(kept)),
        v=VPolytope(vertices=tuple(vertices)),
        incidence=tuple(incidence),
        dropped_inequalities=tuple(dropped),
    )


def affine_rank(points):
    """Dimension of the affine hull of the given points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    diffs = [tuple(Fraction(c) - Fraction(d) for c, d in zip(p, base)) for p in points[1:]]
    return rank(diffs)


def polytope_from_vertices(points):
    """Build the paired description of conv(points).

    Facets are found by scanning n-subsets for supporting hyperplanes;
    adequate at this package's scale (a few dozen points, dim <= 8).
    Input points interior to the hull (or to a face) are discarded.
    """
    pts = sorted(set(_frac_vec(p) for p in points))
    if not pts:
        raise ValidationError("empty point set")
    n = len(pts[0])
    if affine_rank(pts) < n:
        raise ValidationError("point set is not full-dimensional")

    facets = {}
    for subset in combinations(range(len(pts)), n):
        chosen = [pts[i] for i in subset]
        base = chosen[0]
        diffs = [tuple(c - d for c, d in zip(p, base)) for p in chosen[1:]]
        kb = kernel_basis(diffs) if diffs else kernel_basis([tuple([0] * n)])
        if len(kb) != 1:
            continue
        normal = kb[0]
        rhs = Fraction(dot(normal, base))
        side = [dot(normal, p) - rhs for p in pts]
        if any(s > 0 for s in side):
            normal = tuple(-x for x in normal)
            rhs = -rhs
            side = [-s for s in side]
        if any(s > 0 for s in side):
            continue  # points on both sides: not a supporting hyperplane
        if (normal, rhs) not in facets:
            facets[(normal, rhs)] = frozenset(
                i for i, s in enumerate(side) if s == 0
            )

    ineqs = sorted(facets)
    # A point is a vertex exactly when its tight facet normals span.
    vertex_idx = []
    for i in range(len(pts)):
        tight_normals = [a for (a, rhs) in ineqs if i in facets[(a, rhs)]]
        if len(tight_normals) >= n and rank(tight_normals) == n:
            vertex_idx.append(i)
    renumber = {old: new for new, old in enumerate(vertex_idx)}
    vertices = tuple(pts[i] for i in vertex_idx)
    incidence = tuple(
        frozenset(renumber[i] for i in facets[key] if i in renumber)
        for key in ineqs
    )
    return Polytope(
        h=HPolytope(dim=n, inequalities=tuple(ineqs)),
        v=VPolytope(vertices=vertices),
        incidence=incidence,
    )


def is_lattice_polytope(p):
    return all(x.denominator == 1 for v in p.vertices for x in v)


def contains(p, x, strict=False):
    if len(x) != p.dim:
        raise ValidationError("point has wrong dimension")
    xv = _frac_vec(x)
    if strict:
        return all(dot(a, xv) < rhs for a, rhs in p.inequalities)
    return all(dot(a, xv) <= rhs for a, rhs in p.inequalities)


def dilate(p, k):
    """The dilation kP: vertices and right-hand sides scale by k."""
    if k <= 0:
        raise ValidationError("dilation factor must be a positive integer")
    return Polytope(
        h=HPolytope(
            dim=p.dim,
            inequalities=tuple((a, rhs * k) for a, rhs in p.inequalities),
        ),
        v=VPolytope(vertices=tuple(vec_scale(Fraction(k), v) for v in p.vertices)),
        incidence=p.incidence,
    )


def translate(p, t):
    tv = _frac_vec(t)
    return Polytope(
        h=HPolytope(
            dim=p.dim,
            inequalities=tuple((a, rhs + dot(a, tv)) for a, rhs in p.inequalities),
        ),
        v=VPolytope(vertices=tuple(vec_add_frac(v, tv) for v in p.vertices)),
        incidence=p.incidence,
    )


def vec_add_frac(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _face_children(face, incidence):
    """Facets of a face, as maximal proper intersections with polytope facets."""
    children = []
    for tight in incidence:
        c = face & tight
        if c and c != face:
            children.append(c)
    maximal = []
    for c in children:
        if any(c < other for other in children):
            continue
        if c not in maximal:
            maximal.append(c)
    return maximal


def _boundary_simplices(p):
    """Triangulate the polytope into simplices (as vertex index tuples).

    Cones each recursively triangulated facet to the lexicographically
    smallest vertex; vertices are already sorted, so index 0 is the base.
    """
    n = p.dim
    nverts = len(p.vertices)
    memo = {}

    def tri(face, d):
        key = face
        if key in memo:
            return memo[key]
        idx = sorted(face)
        if len(idx) == d + 1:
            memo[key] = [tuple(idx)]
            return memo[key]
        base = idx[0]
        out = []
        for child in _face_children(face, p.incidence):
            if base in child:
                continue
            for s in tri(child, d - 1):
                out.append((base,) + s)
        memo[key] = out
        return out

    if nverts == n + 1:
        return [tuple(range(nverts))]
    base = 0
    simplices = []
    for tight in p.incidence:
        if base in tight:
            continue
        for s in tri(tight, n - 1):
            simplices.append((base,) + s)
    return simplices


@lru_cache(maxsize=256)
def volume_and_barycenter(p):
    """Exact Euclidean volume and barycenter of a full-dimensional polytope.

    Triangulates from the lex-smallest vertex; each simplex contributes
    |det|/n! to the volume and its vertex average, volume-weighted, to the
    barycenter.
    """
    n = p.dim
    verts = p.vertices
    if affine_rank(verts) < n:
        raise ValidationError("polytope is lower-dimensional")
    fact = factorial(n)
    total = Fraction(0)
    moment = [Fraction(0)] * n

    for s in _boundary_simplices(p):
        base = verts[s[0]]
        mat = tuple(
            tuple(verts[i][j] - base[j] for j in range(n)) for i in s[1:]
        )
        vol = abs(Fraction(det(mat))) / fact
        if vol == 0:
            continue
        centroid = tuple(
            sum(verts[i][j] for i in s) / Fraction(n + 1) for j in range(n)
        )
        total += vol
        for j in range(n):
            moment[j] += vol * centroid[j]
    if total == 0:
        raise ValidationError("degenerate polytope")
    return total, tuple(m / total for m in moment)


@dataclass(frozen=True)
class SubspaceSlice:
    """A slice P intersect span(basis), in basis coordinates.

    `polytope` is None exactly when the slice degenerated to the single
    point 0 (`is_point` True) or to nothing (`is_point` False).
    `ambient_vertices` maps the slice vertices back into ambient space;
    downstream norms are always taken there.
    """

    ambient_dim: int
    basis: tuple
    polytope: object
    is_point: bool

    @property
    def is_empty(self):
        return self.polytope is None and not self.is_point

    def ambient_vertices(self):
        if self.polytope is None:
            if self.is_point:
                return ((Fraction(0),) * self.ambient_dim,)
            return ()
        out = []
        for t in self.polytope.vertices:
            amb = [Fraction(0)] * self.ambient_dim
            for coeff, bvec in zip(t, self.basis):
                for j, b in enumerate(bvec):
                    amb[j] += coeff * Fraction(b)
            out.append(tuple(amb))
        return tuple(out)


def intersect_with_subspace(p, basis):
    """Slice P by the span of the given linearly independent vectors."""
    n = p.dim
    basis = tuple(_frac_vec(b) for b in basis)
    zero_inside = contains(p, (0,) * n)
    if not basis:
        return SubspaceSlice(ambient_dim=n, basis=(), polytope=None, is_point=zero_inside)
    if rank(basis) != len(basis):
        raise ValidationError("basis vectors are linearly dependent")
    s = len(basis)
    rows = []
    for a, rhs in p.inequalities:
        coeffs = tuple(dot(_frac_vec(a), b) for b in basis)
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return SubspaceSlice(ambient_dim=n, basis=basis, polytope=None, is_point=False)
            continue
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        rows.append((tuple(int(c * den) for c in coeffs), Fraction(rhs) * den))
    try:
        sliced = vertices_from_inequalities(HPolytope(dim=s, inequalities=tuple(rows)))
    except ValidationError:
        return SubspaceSlice(ambient_dim=n, basis=basis, polytope=None, is_point=zero_inside)
    return SubspaceSlice(ambient_dim=n, basis=basis, polytope=sliced, is_point=False)
