"""Exact lattice-point enumeration, quantized barycenters, Ehrhart data.

The workhorse is an EnumerationPlan: a one-time Fourier-Motzkin elimination
of the inequality system A*x <= c0 + ck*k (right-hand sides linear in the
dilation factor k), pruned per level, then scanned depth-first with exact
integer interval bounds.  Counting and coordinate sums close the innermost
level in constant time per prefix, which is what makes dilations of
7-dimensional polytopes tractable.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    InvariantViolation,
    NonLatticePolytopeError,
    UnboundedPolytopeError,
    ValidationError,
)
from .polytope import is_lattice_polytope, volume_and_barycenter


@dataclass(frozen=True)
class PlanRow:
    """sum(coeffs[i] * x[i] for i <= level) <= c0 + ck * k, all integers."""

    coeffs: tuple
    c0: int
    ck: int


@dataclass(frozen=True)
class EnumerationPlan:
    """Per-coordinate bound systems from successive variable elimination.

    `levels[j]` bounds x_j given x_0..x_{j-1}; rows at level j have a
    nonzero trailing coefficient.  `constants` are the fully eliminated
    rows 0 <= c0 + ck*k.  Bounds are sound at every level and exact at the
    last one.
    """

    dim: int
    levels: tuple  # levels[j]: tuple of PlanRow with len(coeffs) == j+1
    constants: tuple  # of (c0, ck)

    def feasible_constants(self, k):
        return all(c0 + ck * k >= 0 for c0, ck in self.constants)


def _normalize_row(coeffs, c0, c1):
    """Scale to integers and divide out the gcd of the coefficients."""
    den = 1
    for x in (*coeffs, c0, c1):
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    ic = [int(Fraction(x) * den) for x in coeffs]
    c0i = Fraction(c0) * den
    c1i = Fraction(c1) * den
    g = 0
    for x in ic:
        g = gcd(g, abs(x))
    if g > 1:
        ic = [x // g for x in ic]
        c0i = c0i / g
        c1i = c1i / g
    return tuple(ic), c0i, c1i


def build_plan(dim, rows):
    """Fourier-Motzkin elimination from the last variable down.

    `rows` are (coeffs, c0, ck) triples over rationals.  Redundancy is
    pruned per level: exact duplicates keep only the Pareto-tightest
    right-hand sides, and Imbert's cardinality rule discards derived rows
    combining too many original ones.
    """
    work = []
    for i, (coeffs, c0, ck) in enumerate(rows):
        coeffs = tuple(Fraction(c) for c in coeffs)
        work.append((coeffs, Fraction(c0), Fraction(ck), frozenset([i]), frozenset()))

    levels = [None] * dim
    constants = []

    for j in range(dim - 1, -1, -1):
        here, below, free = [], [], []
        for row in work:
            coeffs = row[0]
            if coeffs[j] != 0:
                here.append(row)
            elif any(coeffs[i] != 0 for i in range(j)):
                below.append(row)
            else:
                free.append((row[1], row[2]))
        constants.extend(free)

        pruned = {}
        for coeffs, c0, ck, hist, elim in here:
            key_coeffs, c0n, ckn = _normalize_row(coeffs[: j + 1], c0, ck)
            entry = pruned.setdefault(key_coeffs, [])
            dominated = False
            keep = []
            for (e0, e1, eh, ee) in entry:
                if e0 <= c0n and e1 <= ckn:
                    dominated = True
                    keep.append((e0, e1, eh, ee))
                elif not (c0n <= e0 and ckn <= e1):
                    keep.append((e0, e1, eh, ee))
            if not dominated:
                keep.append((c0n, ckn, hist, elim))
            pruned[key_coeffs] = keep
        level_rows = []
        here2 = []
        for key_coeffs, entries in sorted(pruned.items()):
            for c0n, ckn, hist, elim in entries:
                den = c0n.denominator * ckn.denominator // gcd(
                    c0n.denominator, ckn.denominator
                )
                level_rows.append(
                    PlanRow(
                        coeffs=tuple(x * den for x in key_coeffs),
                        c0=_as_int(c0n * den),
                        ck=_as_int(ckn * den),
                    )
                )
                here2.append((key_coeffs, c0n, ckn, hist, elim))
        if not any(r.coeffs[j] > 0 for r in level_rows) or not any(
            r.coeffs[j] < 0 for r in level_rows
        ):
            raise UnboundedPolytopeError(
                f"variable {j} is unbounded in the inequality system"
            )
        levels[j] = tuple(level_rows)

        new_rows = list(below)
        pos = [r for r in here2 if r[0][j] > 0]
        neg = [r for r in here2 if r[0][j] < 0]
        for pc, p0, p1, ph, pe in pos:
            for nc, n0, n1, nh, ne in neg:
                hist = ph | nh
                elim = pe | ne | {j}
                # Imbert's acceleration: a combination of more originals
                # than eliminated variables plus one is redundant.
                if len(hist) > len(elim) + 1:
                    continue
                a, b = pc[j], -nc[j]
                coeffs = tuple(
                    b * (pc[i] if i < len(pc) else 0) + a * (nc[i] if i < len(nc) else 0)
                    for i in range(j)
                ) + (Fraction(0),) * (dim - j)
                c0 = b * p0 + a * n0
                ck = b * p1 + a * n1
                new_rows.append((coeffs, c0, ck, hist, elim))
        work = new_rows

    scaled_constants = []
    for c0, ck in constants:
        c0, ck = Fraction(c0), Fraction(ck)
        den = c0.denominator * ck.denominator // gcd(
            c0.denominator, ck.denominator
        )
        scaled_constants.append((_as_int(c0 * den), _as_int(ck * den)))
    return EnumerationPlan(
        dim=dim,
        levels=tuple(levels),
        constants=tuple(scaled_constants),
    )


def _as_int(x):
    f = Fraction(x)
    if f.denominator != 1:
        raise InvariantViolation("plan row failed to normalize to integers")
    return int(f)


def _plan_rows_for_polytope(p):
    return [(a, 0, rhs) for a, rhs in p.inequalities]


@lru_cache(maxsize=256)
def plan_for_polytope(p):
    """Build (and cache) the enumeration plan whose k-th evaluation is kP."""
    return build_plan(p.dim, _plan_rows_for_polytope(p))


def _threads():
    try:
        return max(1, int(os.environ.get("TORICSYM_THREADS", "1")))
    except ValueError:
        return 1


def _scan_setup(plan, k):
    """Per-level divisor lists, residuals, and update fanouts for a scan.

    `res[j][r]` holds c - sum(a_i x_i) over the assigned prefix for row r
    of level j; `updates[i]` lists (level, row, coeff) touched when x_i
    moves, so each bound evaluation is a single exact division.
    """
    n = plan.dim
    divisors = []
    res = []
    for level in plan.levels:
        divisors.append([row.coeffs[-1] for row in level])
        res.append([row.c0 + row.ck * k for row in level])
    updates = []
    for i in range(n):
        ups = []
        for j in range(i + 1, n):
            for r, row in enumerate(plan.levels[j]):
                if row.coeffs[i]:
                    ups.append((j, r, row.coeffs[i]))
        updates.append(ups)
    return divisors, res, updates


def _level_bounds(divisors_j, res_j):
    lo, hi = None, None
    for a, s in zip(divisors_j, res_j):
        if a > 0:
            b = s // a
            if hi is None or b < hi:
                hi = b
        else:
            b = -(s // (-a))
            if lo is None or b > lo:
                lo = b
    return lo, hi


def plan_count_and_sum(plan, k):
    """(#points, coordinate sums) of the k-th dilation, exactly.

    The innermost coordinate is closed in constant time per prefix via an
    arithmetic series.  With TORICSYM_THREADS > 1 the outermost range is
    split into slabs merged in order; integer sums make this deterministic.
    """
    n = plan.dim
    if not plan.feasible_constants(k):
        return 0, (0,) * n
    divisors0, res0, _ = _scan_setup(plan, k)
    lo0, hi0 = _level_bounds(divisors0[0], res0[0])
    if lo0 is None or hi0 is None or lo0 > hi0:
        return 0, (0,) * n
    if n == 1:
        cnt = hi0 - lo0 + 1
        return cnt, ((hi0 + lo0) * cnt // 2,)

    nthreads = _threads()
    ranges = [(lo0, hi0)]
    if nthreads > 1 and hi0 > lo0:
        width = hi0 - lo0 + 1
        step = -(-width // nthreads)
        ranges = [
            (lo0 + i * step, min(hi0, lo0 + (i + 1) * step - 1))
            for i in range(nthreads)
            if lo0 + i * step <= hi0
        ]

    def scan(r0, r1):
        divisors, res, updates = _scan_setup(plan, k)
        count = 0
        sums = [0] * n
        prefix = [0] * (n - 1)
        last = n - 1

        def rec(j):
            nonlocal count
            lo, hi = _level_bounds(divisors[j], res[j])
            if lo is None or hi is None or lo > hi:
                return
            if j == last:
                c = hi - lo + 1
                count += c
                sums[j] += (hi + lo) * c // 2
                for i in range(last):
                    sums[i] += prefix[i] * c
                return
            ups = updates[j]
            for jj, r, a in ups:
                res[jj][r] -= a * lo
            prefix[j] = lo
            rec(j + 1)
            x = lo
            while x < hi:
                x += 1
                for jj, r, a in ups:
                    res[jj][r] -= a
                prefix[j] = x
                rec(j + 1)
            for jj, r, a in ups:
                res[jj][r] += a * hi

        ups0 = updates[0]
        for x0 in range(r0, r1 + 1):
            for jj, r, a in ups0:
                res[jj][r] -= a * x0
            prefix[0] = x0
            rec(1)
            for jj, r, a in ups0:
                res[jj][r] += a * x0
        return count, sums

    if len(ranges) == 1:
        count, sums = scan(*ranges[0])
        return count, tuple(sums)
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=len(ranges)) as ex:
        parts = list(ex.map(lambda r: scan(*r), ranges))
    count = sum(c for c, _ in parts)
    sums = tuple(sum(s[i] for _, s in parts) for i in range(n))
    return count, sums


def plan_points(plan, k):
    """All lattice points of the k-th dilation, in lexicographic order."""
    n = plan.dim
    if not plan.feasible_constants(k):
        return
    divisors, res, updates = _scan_setup(plan, k)
    prefix = [0] * n

    def rec(j):
        lo, hi = _level_bounds(divisors[j], res[j])
        if lo is None or hi is None or lo > hi:
            return
        if j == n - 1:
            for x in range(lo, hi + 1):
                prefix[j] = x
                yield tuple(prefix)
            return
        ups = updates[j]
        for x in range(lo, hi + 1):
            for jj, r, a in ups:
                res[jj][r] -= a * x
            prefix[j] = x
            yield from rec(j + 1)
            for jj, r, a in ups:
                res[jj][r] += a * x

    yield from rec(0)


# ---------------------------------------------------------------------------
# public operations


def enumerate_lattice_points(p):
    """The integer points of the polytope, each once, lexicographically."""
    plan = plan_for_polytope(p)
    return tuple(plan_points(plan, 1))


def count_lattice_points(p, k=1):
    return plan_count_and_sum(plan_for_polytope(p), k)[0]


def quantized_barycenter(p, k):
    """Average of the lattice points of kP, divided by k."""
    if k < 1:
        raise ValidationError("k must be a positive integer")
    count, sums = plan_count_and_sum(plan_for_polytope(p), k)
    if count == 0:
        raise ValidationError(f"{k}-th dilation contains no lattice points")
    return tuple(Fraction(s, k * count) for s in sums)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Counting polynomial of a lattice polytope; coefficients low to high."""

    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, k):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc


def _interpolate(samples):
    """Exact polynomial through (k, value) samples, coefficients low to high."""
    n = len(samples) - 1
    mat = tuple(tuple(Fraction(k) ** j for j in range(n + 1)) for k, _ in samples)
    from .linalg import solve_rational

    sol = solve_rational(mat, tuple(Fraction(v) for _, v in samples))
    if sol is None:
        raise InvariantViolation("interpolation nodes are degenerate")
    return tuple(sol)


def ehrhart_polynomial(p):
    """Interpolate #(kP cap M) from exact counts at k = 0..n.

    Only defined for lattice polytopes (rational ones have mere
    quasi-polynomials).  The forced values a0 = 1 and a_n = vol(P) are
    asserted on every call.
    """
    if not is_lattice_polytope(p):
        raise NonLatticePolytopeError(
            "Ehrhart polynomial requires a lattice polytope"
        )
    n = p.dim
    plan = plan_for_polytope(p)
    samples = [(k, plan_count_and_sum(plan, k)[0] if k else 1) for k in range(n + 1)]
    coeffs = _interpolate(samples)
    poly = EhrhartPolynomial(coefficients=coeffs)
    if poly.coefficients[0] != 1:
        raise InvariantViolation("Ehrhart constant term is not 1")
    vol, _ = volume_and_barycenter(p)
    if poly.coefficients[-1] != vol:
        raise InvariantViolation("Ehrhart leading coefficient differs from volume")
    return poly


def _lifted_plan(p, i, c_i):
    """Plan for P_i = {(u, h) : u in P, 0 <= h <= u_i + C_i} in dim n+1."""
    n = p.dim
    rows = [(tuple(a) + (0,), 0, rhs) for a, rhs in p.inequalities]
    rows.append(((0,) * n + (-1,), 0, 0))  # h >= 0
    rows.append((tuple(-1 if j == i else 0 for j in range(n)) + (1,), 0, c_i))
    return build_plan(n + 1, rows)


@dataclass(frozen=True)
class BarycenterRationalFunction:
    """Bc_{k,i}(P) = numerators[i](k) / ehrhart(k), exactly, for all k >= 1."""

    numerators: tuple  # per coordinate: coefficient tuple, low to high
    ehrhart: EhrhartPolynomial

    def numerator(self, i):
        return self.numerators[i]

    def barycenter_at(self, k):
        e = self.ehrhart(k)
        out = []
        for coeffs in self.numerators:
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * k + c
            out.append(acc / e)
        return tuple(out)

    def is_identically_zero(self):
        return all(all(c == 0 for c in coeffs) for coeffs in self.numerators)


def barycenter_rational_function(p):
    """Closed form for every quantized barycenter at once.

    For each coordinate i, lift P to P_i by a height between 0 and
    u_i + C_i (C_i the smallest nonnegative integer making that height
    nonnegative on P), interpolate the lifted counting polynomial, and
    divide out one factor of k from the difference.  The result is checked
    against a directly enumerated barycenter at k = 1.
    """
    if not is_lattice_polytope(p):
        raise NonLatticePolytopeError(
            "barycenter rational function requires a lattice polytope"
        )
    n = p.dim
    e_p = ehrhart_polynomial(p)
    numerators = []
    for i in range(n):
        m = min(v[i] for v in p.vertices)
        c_i = max(0, int(-m))
        lifted = _lifted_plan(p, i, c_i)
        samples = [
            (k, plan_count_and_sum(lifted, k)[0] if k else 1) for k in range(n + 2)
        ]
        e_pi = _interpolate(samples)
        # Q_i(k) = E_{P_i}(k) - (C_i k + 1) E_P(k); degree <= n+1, Q_i(0) = 0.
        q = [Fraction(0)] * (n + 2)
        for d, c in enumerate(e_pi):
            q[d] += c
        for d, c in enumerate(e_p.coefficients):
            q[d] -= c
            q[d + 1] -= c_i * c
        if q[0] != 0:
            raise InvariantViolation("lifted count difference has nonzero constant")
        numerators.append(tuple(q[1:]))
    brf = BarycenterRationalFunction(
        numerators=tuple(numerators), ehrhart=e_p
    )
    k1 = quantized_barycenter(p, 1)
    if brf.barycenter_at(1) != k1:
        raise InvariantViolation("rational barycenter disagrees with direct count")
    return brf


@dataclass(frozen=True)
class RigidityVerdict:
    identically_zero: bool
    witnesses: tuple  # of (k, nonzero Bc_k) pairs
    continuous_barycenter: tuple  # filled when identically zero
    rational_function: object


def rigidity_verdict(p, ks):
    """Vanishing of n+1 quantized barycenters forces all of them to vanish.

    Given n+1 distinct positive k with Bc_k(P) = 0, the numerators of the
    barycenter rational function must be identically zero (a degree bound)
    and Bc(P) = 0 follows; this is asserted.  Otherwise the nonzero
    witnesses are returned.
    """
    ks = sorted(set(int(k) for k in ks))
    if len(ks) < p.dim + 1 or any(k < 1 for k in ks):
        raise ValidationError("need at least n+1 distinct positive dilations")
    if not is_lattice_polytope(p):
        raise NonLatticePolytopeError("rigidity verdict requires a lattice polytope")
    witnesses = []
    zero = (Fraction(0),) * p.dim
    for k in ks:
        bc = quantized_barycenter(p, k)
        if bc != zero:
            witnesses.append((k, bc))
    if witnesses:
        return RigidityVerdict(
            identically_zero=False,
            witnesses=tuple(witnesses),
            continuous_barycenter=(),
            rational_function=None,
        )
    brf = barycenter_rational_function(p)
    if not brf.is_identically_zero():
        raise InvariantViolation(
            "n+1 vanishing quantized barycenters but nonzero numerator"
        )
    _, bc = volume_and_barycenter(p)
    if bc != zero:
        raise InvariantViolation("quantized barycenters vanish but Bc(P) != 0")
    return RigidityVerdict(
        identically_zero=True,
        witnesses=(),
        continuous_barycenter=bc,
        rational_function=brf,
    )


def enumerate_system(dim, rows):
    """Lattice points of {x : coeffs*x <= rhs} for constant integer systems."""
    plan = build_plan(dim, [(a, rhs, 0) for a, rhs in rows])
    return tuple(plan_points(plan, 1))
