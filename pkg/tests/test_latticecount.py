import random
from fractions import Fraction
from itertools import product

import pytest

from toricsym.errors import NonLatticePolytopeError, ValidationError
from toricsym.fan import polytope_from_fan
from toricsym.latticecount import (
    barycenter_rational_function,
    count_lattice_points,
    ehrhart_polynomial,
    enumerate_lattice_points,
    quantized_barycenter,
    rigidity_verdict,
)
from toricsym.linalg import mat_vec
from toricsym.polytope import (
    contains,
    dilate,
    polytope_from_vertices,
    volume_and_barycenter,
)
from toricsym.symmetry import dual_group, fan_automorphisms


def box_oracle(p, k=1):
    """Independent enumeration: scan the bounding box and filter."""
    q = dilate(p, k) if k > 1 else p
    los = [min(v[i] for v in q.vertices) for i in range(q.dim)]
    his = [max(v[i] for v in q.vertices) for i in range(q.dim)]
    out = []
    for pt in product(*[range(int(-(-lo // 1)), int(hi // 1) + 1) for lo, hi in zip(los, his)]):
        if contains(q, pt):
            out.append(pt)
    return sorted(out)


def test_enumerate_square():
    p = polytope_from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    pts = enumerate_lattice_points(p)
    assert len(pts) == 9
    assert pts == tuple(sorted(pts))


def test_enumerate_p2_matches_box_oracle(p2_fan):
    p = polytope_from_fan(p2_fan)
    pts = enumerate_lattice_points(p)
    assert list(pts) == box_oracle(p)
    assert len(pts) == 10


def test_enumerate_hexagon(dp3_fan):
    p = polytope_from_fan(dp3_fan)
    pts = enumerate_lattice_points(p)
    assert len(pts) == 7
    assert (0, 0) in pts


def test_enumeration_agrees_with_box_oracle_randomized():
    rng = random.Random(424242)
    done = 0
    while done < 25:
        n = rng.randint(2, 3)
        pts = {tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(n + 2)}
        try:
            p = polytope_from_vertices(sorted(pts))
        except ValidationError:
            continue
        done += 1
        assert list(enumerate_lattice_points(p)) == box_oracle(p)


def test_quantized_barycenter_p2(p2_fan):
    p = polytope_from_fan(p2_fan)
    assert quantized_barycenter(p, 1) == (Fraction(0), Fraction(0))


def test_quantized_barycenter_dp1(dp1_fan):
    # Hand count: the 9 points of P sum to (1, 1).
    p = polytope_from_fan(dp1_fan)
    pts = enumerate_lattice_points(p)
    assert len(pts) == 9
    sums = tuple(sum(x[i] for x in pts) for i in range(2))
    assert sums == (1, 1)
    bc1 = quantized_barycenter(p, 1)
    assert bc1 == (Fraction(1, 9), Fraction(1, 9))
    assert bc1[0] == bc1[1]  # pinned to the diagonal by the symmetry


def test_quantized_barycenter_equivariance(del_pezzo_fans):
    for f in del_pezzo_fans.values():
        p = polytope_from_fan(f)
        aut = dual_group(fan_automorphisms(f))
        for k in (1, 2, 3):
            bc = quantized_barycenter(p, k)
            for g in aut:
                assert tuple(mat_vec(g, bc)) == bc


def test_ehrhart_segment():
    seg = polytope_from_vertices([(-1,), (1,)])
    poly = ehrhart_polynomial(seg)
    assert poly.coefficients == (Fraction(1), Fraction(2))


def test_ehrhart_p2(p2_fan):
    p = polytope_from_fan(p2_fan)
    poly = ehrhart_polynomial(p)
    assert poly.coefficients == (Fraction(1), Fraction(9, 2), Fraction(9, 2))
    assert poly(1) == 10


def test_ehrhart_fano52_leading_coefficient(fano52_fan):
    p = polytope_from_fan(fano52_fan)
    poly = ehrhart_polynomial(p)
    assert poly.coefficients[-1] == 6


def test_ehrhart_out_of_sample(del_pezzo_fans, fano52_fan):
    fans = list(del_pezzo_fans.values()) + [fano52_fan]
    for f in fans:
        p = polytope_from_fan(f)
        poly = ehrhart_polynomial(p)
        n = p.dim
        for k in (n + 1, n + 2):
            assert poly(k) == count_lattice_points(p, k)


def test_ehrhart_rejects_rational_polytope():
    half = polytope_from_vertices(
        [(0, 1), (0, -1), (Fraction(1, 2), 0), (Fraction(-1, 2), 0)]
    )
    with pytest.raises(NonLatticePolytopeError):
        ehrhart_polynomial(half)


def test_rational_function_segment():
    seg = polytope_from_vertices([(-1,), (1,)])
    brf = barycenter_rational_function(seg)
    assert brf.is_identically_zero()


def test_rational_function_dp1(dp1_fan):
    p = polytope_from_fan(dp1_fan)
    brf = barycenter_rational_function(p)
    assert brf.barycenter_at(1) == (Fraction(1, 9), Fraction(1, 9))
    for k in (2, 3, 4):
        assert brf.barycenter_at(k) == quantized_barycenter(p, k)


def test_rational_function_p2(p2_fan):
    p = polytope_from_fan(p2_fan)
    brf = barycenter_rational_function(p)
    assert brf.is_identically_zero()


def test_numerator_shape(dp1_fan, dp2_fan):
    # The numerators are Q/k for a Q with zero constant term (asserted at
    # construction), so each has exactly n+1 stored coefficients.
    for f in (dp1_fan, dp2_fan):
        p = polytope_from_fan(f)
        brf = barycenter_rational_function(p)
        for coeffs in brf.numerators:
            assert len(coeffs) == p.dim + 1


def test_rigidity_square():
    sq = polytope_from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    verdict = rigidity_verdict(sq, [1, 2, 3])
    assert verdict.identically_zero
    assert verdict.continuous_barycenter == (Fraction(0), Fraction(0))


def test_rigidity_dp1_witness(dp1_fan):
    p = polytope_from_fan(dp1_fan)
    verdict = rigidity_verdict(p, [1, 2, 3])
    assert not verdict.identically_zero
    assert verdict.witnesses[0] == (1, (Fraction(1, 9), Fraction(1, 9)))


def test_rigidity_p2(p2_fan):
    p = polytope_from_fan(p2_fan)
    verdict = rigidity_verdict(p, [1, 2, 3])
    assert verdict.identically_zero
    assert verdict.continuous_barycenter == (Fraction(0), Fraction(0))


def test_rigidity_needs_enough_samples(p2_fan):
    p = polytope_from_fan(p2_fan)
    with pytest.raises(ValidationError):
        rigidity_verdict(p, [1, 2])


def test_weak_convergence_sanity(del_pezzo_fans):
    # Bc_k approaches Bc; by k = 25 each coordinate is within 1/10 on the
    # two-dimensional examples.
    for f in del_pezzo_fans.values():
        p = polytope_from_fan(f)
        _, bc = volume_and_barycenter(p)
        bck = quantized_barycenter(p, 25)
        for a, b in zip(bck, bc):
            assert abs(a - b) < Fraction(1, 10)


def test_dilation_consistency(dp2_fan):
    # Counting in kP directly equals evaluating the plan at k.
    p = polytope_from_fan(dp2_fan)
    for k in (1, 2, 3, 4):
        assert count_lattice_points(p, k) == len(box_oracle(p, k))


def test_thread_count_does_not_change_results(fano52_fan, monkeypatch):
    from toricsym.latticecount import plan_count_and_sum, plan_for_polytope

    p = polytope_from_fan(fano52_fan)
    plan = plan_for_polytope(p)
    monkeypatch.delenv("TORICSYM_THREADS", raising=False)
    base = [plan_count_and_sum(plan, k) for k in (1, 2, 3)]
    for threads in ("2", "4"):
        monkeypatch.setenv("TORICSYM_THREADS", threads)
        assert [plan_count_and_sum(plan, k) for k in (1, 2, 3)] == base
