from fractions import Fraction
from itertools import product

import pytest

from toricsym.errors import NonLatticePolytopeError
from toricsym.fan import Fan, polytope_from_fan
from toricsym.latticecount import enumerate_lattice_points
from toricsym.linalg import dot, mat_vec, transpose
from toricsym.polytope import polytope_from_vertices
from toricsym.symmetry import (
    aut0_subgroup,
    classify_symmetry,
    dual_group,
    fan_automorphisms,
    fixed_subspace,
    polytope_automorphisms,
    roots,
    trivial_subgroup,
)


def brute_force_lattice_maps(point_set, bound=4):
    """Oracle: all 2x2 integer matrices with |entries| <= bound and
    det +-1 mapping the point set onto itself."""
    pts = set(point_set)
    found = []
    for a, b, c, d in product(range(-bound, bound + 1), repeat=4):
        if a * d - b * c not in (1, -1):
            continue
        if {(a * x + b * y, c * x + d * y) for x, y in pts} == pts:
            found.append(((a, b), (c, d)))
    return found


def test_aut_p2(p2_fan):
    p = polytope_from_fan(p2_fan)
    g = polytope_automorphisms(p)
    assert g.order == 6
    verts = tuple(tuple(int(x) for x in v) for v in p.vertices)
    assert len(brute_force_lattice_maps(verts)) == 6


def test_aut_dp1(dp1_fan):
    p = polytope_from_fan(dp1_fan)
    g = polytope_automorphisms(p)
    assert g.order == 2
    swap = ((0, 1), (1, 0))
    assert swap in g.elements


def test_aut_square(p1xp1_fan):
    p = polytope_from_fan(p1xp1_fan)
    assert polytope_automorphisms(p).order == 8


def test_aut_dp3(dp3_fan):
    assert polytope_automorphisms(polytope_from_fan(dp3_fan)).order == 12


def test_aut_rejects_rational_polytope():
    half = polytope_from_vertices(
        [(0, 1), (0, -1), (Fraction(1, 2), 0), (Fraction(-1, 2), 0)]
    )
    with pytest.raises(NonLatticePolytopeError):
        polytope_automorphisms(half)


def test_group_axioms(del_pezzo_fans):
    for f in del_pezzo_fans.values():
        g = polytope_automorphisms(polytope_from_fan(f))
        assert g.check_group_axioms()


def test_fan_aut_matches_polytope_aut(del_pezzo_fans):
    for name, f in del_pezzo_fans.items():
        gf = fan_automorphisms(f)  # transpose duality asserted inside
        gp = polytope_automorphisms(polytope_from_fan(f))
        assert gf.order == gp.order, name
        assert {transpose(g) for g in gf.elements} == set(gp.elements)


def test_fan_aut_weighted_112(w112_fan):
    # Brute force over bounded unimodular candidates finds exactly the
    # identity and one involution exchanging the two weight-1 rays (the
    # swap composed with a shear), so the order is 2.
    g = fan_automorphisms(w112_fan)
    assert g.order == 2
    rays = set(w112_fan.rays)
    cones = {frozenset(w112_fan.rays[i] for i in c) for c in w112_fan.max_cones}
    brute = []
    for a, b, c, d in product(range(-4, 5), repeat=4):
        if a * d - b * c not in (1, -1):
            continue
        img = {(a * x + b * y, c * x + d * y) for x, y in rays}
        if img != rays:
            continue
        imgcones = {
            frozenset((a * x + b * y, c * x + d * y) for x, y in cone)
            for cone in cones
        }
        if imgcones == cones:
            brute.append(((a, b), (c, d)))
    assert len(brute) == 2
    assert set(brute) == set(g.elements)


def test_fixed_subspace_p2(p2_fan):
    g = dual_group(fan_automorphisms(p2_fan))
    assert fixed_subspace(g) == ()


def test_fixed_subspace_dp1(dp1_fan):
    g = dual_group(fan_automorphisms(dp1_fan))
    assert fixed_subspace(g) == ((1, 1),)


def test_fixed_subspace_trivial_group():
    g = trivial_subgroup(2)
    basis = fixed_subspace(g)
    assert len(basis) == 2


def test_roots_p2(p2_fan):
    rd = roots(p2_fan)
    assert rd.root_set == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
    assert len(rd.semisimple) == 6 and not rd.unipotent
    assert rd.is_centrally_lattice_symmetric()


def test_roots_dp1(dp1_fan):
    rd = roots(dp1_fan)
    assert {m for m, _ in rd.semisimple} == {(1, -1), (-1, 1)}
    assert {m for m, _ in rd.unipotent} == {(1, 0), (0, 1)}
    assert not rd.is_centrally_lattice_symmetric()


def test_roots_dp2(dp2_fan):
    rd = roots(dp2_fan)
    assert {m for m, _ in rd.semisimple} == set()
    assert {m for m, _ in rd.unipotent} == {(-1, 0), (0, -1)}


def test_roots_p1xp1(p1xp1_fan):
    rd = roots(p1xp1_fan)
    assert rd.root_set == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(rd.semisimple) == 4 and not rd.unipotent


def test_roots_dp3_empty(dp3_fan):
    assert roots(dp3_fan).roots == ()
    assert roots(dp3_fan).is_centrally_lattice_symmetric()


def test_roots_pair_to_exactly_one_ray(del_pezzo_fans, fano52_fan):
    fans = list(del_pezzo_fans.values()) + [fano52_fan]
    for f in fans:
        rd = roots(f)
        for m, i in rd.roots:
            pairings = [dot(m, v) for v in f.rays]
            assert pairings[i] == -1
            assert sum(1 for x in pairings if x == -1) == 1
            assert all(x >= 0 for j, x in enumerate(pairings) if j != i)


def test_roots_equal_facet_interior_points(del_pezzo_fans, fano52_fan):
    # Second route: roots are the lattice points interior to exactly one
    # facet of the polytope.
    fans = list(del_pezzo_fans.values()) + [fano52_fan]
    for f in fans:
        p = polytope_from_fan(f)
        interior_pts = set()
        for pt in enumerate_lattice_points(p):
            tight = [
                j
                for j, (a, rhs) in enumerate(p.inequalities)
                if dot(a, pt) == rhs
            ]
            if len(tight) == 1:
                interior_pts.add(pt)
        assert roots(f).root_set == interior_pts


def test_aut_permutes_root_sets(del_pezzo_fans):
    for f in del_pezzo_fans.values():
        rd = roots(f)
        for g in dual_group(fan_automorphisms(f)):
            for part in (rd.root_set,
                         frozenset(m for m, _ in rd.semisimple),
                         frozenset(m for m, _ in rd.unipotent)):
                assert frozenset(tuple(mat_vec(g, m)) for m in part) == part


def test_classification_table(p1xp1_fan, p2_fan, dp1_fan, dp2_fan, dp3_fan):
    expected = {
        id(p1xp1_fan): (True, True, True),
        id(p2_fan): (False, True, True),
        id(dp1_fan): (False, False, False),
        id(dp2_fan): (False, False, False),
        id(dp3_fan): (True, True, True),
    }
    for f in (p1xp1_fan, p2_fan, dp1_fan, dp2_fan, dp3_fan):
        cls = classify_symmetry(f)
        assert (
            cls.centrally_symmetric,
            cls.bs_symmetric,
            cls.centrally_lattice_symmetric,
        ) == expected[id(f)]


def test_classification_rejects_non_fano():
    f = Fan.from_rays([(1, 0), (0, 1), (-1, -3)])
    from toricsym.errors import NonFanoError

    with pytest.raises(NonFanoError):
        classify_symmetry(f)


def test_aut0_orders(p2_fan, p1xp1_fan, dp1_fan, dp2_fan, dp3_fan):
    expected = {
        id(p2_fan): 6,
        id(p1xp1_fan): 4,
        id(dp3_fan): 1,
        id(dp1_fan): 2,
        id(dp2_fan): 1,
    }
    for f in (p2_fan, p1xp1_fan, dp1_fan, dp2_fan, dp3_fan):
        p = polytope_from_fan(f)
        sub = aut0_subgroup(p, root_data=roots(f))
        assert sub.order == expected[id(f)]
        full = polytope_automorphisms(p)
        assert set(sub.elements) <= set(full.elements)


def test_aut0_dp1_is_full_group(dp1_fan):
    p = polytope_from_fan(dp1_fan)
    assert aut0_subgroup(p).order == polytope_automorphisms(p).order


def test_fan_aut_fano52(fano52_fan):
    g = fan_automorphisms(fano52_fan)
    fixed = fixed_subspace(dual_group(g))
    assert len(fixed) == 1  # alpha < 1 comes from this one fixed line
