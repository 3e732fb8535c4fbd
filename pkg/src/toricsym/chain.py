"""Verifier for the full chain of symmetry implications on a Fano fan.

The nine nodes, in order:

  1 centrally_symmetric      P = -P
  2 bs_symmetric             only 0 in M is fixed by Aut P
  3 alpha_one                alpha for the full symmetry group equals 1
  4 bck_zero_all_k           Bc_k(P) = 0 for every k
  5 bck_zero_large_k         Bc_k(P) = 0 for all large k
  6 bck_zero_n_plus_1        Bc_k(P) = 0 for at least n+1 values of k
  7 bc_zero                  Bc(P) = 0  (= KE existence = delta 1)
  8 lattice_symmetric        R(P) = -R(P)
  9 reductive                identity component reductive (= node 8)

Expected: 1 => 2 <=> 3 => 4 <=> 5 <=> 6 => 7 => 8 <=> 9, plus 7 => 2 in
dimension at most 6.  Nodes 4-6 are decided exactly: a single nonzero
quantized barycenter rules all three out (n+1 vanishing values would force
all to vanish), and n+1 vanishing values, checked through the barycenter
rational function, rule all three in.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonFanoError
from .fan import is_fano, polytope_from_fan
from .latticecount import quantized_barycenter, rigidity_verdict
from .polytope import volume_and_barycenter
from .stability import alpha_invariant
from .symmetry import classify_symmetry, roots


CHAIN_IMPLICATIONS = (
    ("centrally_symmetric", "bs_symmetric"),
    ("bs_symmetric", "alpha_one"),
    ("alpha_one", "bs_symmetric"),
    ("alpha_one", "bck_zero_all_k"),
    ("bck_zero_all_k", "bck_zero_large_k"),
    ("bck_zero_large_k", "bck_zero_all_k"),
    ("bck_zero_large_k", "bck_zero_n_plus_1"),
    ("bck_zero_n_plus_1", "bck_zero_large_k"),
    ("bck_zero_n_plus_1", "bc_zero"),
    ("bc_zero", "lattice_symmetric"),
    ("lattice_symmetric", "reductive"),
    ("reductive", "lattice_symmetric"),
)

LOW_DIMENSION_IMPLICATION = ("bc_zero", "bs_symmetric")  # valid for n <= 6


@dataclass(frozen=True)
class ChainReport:
    nodes: tuple  # of (name, bool)
    violations: tuple  # of (premise, conclusion)
    quantized: tuple  # of (k, Bc_k) actually computed
    barycenter: tuple

    @property
    def consistent(self):
        return not self.violations

    def node(self, name):
        return dict(self.nodes)[name]


def verify_implication_chain(f, k_budget=None):
    """Evaluate every chain node exactly and check every implication.

    `k_budget` bounds the quantized barycenters computed directly; at
    least n+1 are always needed (and suffice) to decide nodes 4-6.
    """
    if not is_fano(f):
        raise NonFanoError("chain verification requires a Fano fan")
    n = f.dim
    kmax = max(k_budget or 0, n + 1)
    p = polytope_from_fan(f)
    cls = classify_symmetry(f)
    alpha = alpha_invariant(f)
    zero = (Fraction(0),) * n
    quantized = tuple((k, quantized_barycenter(p, k)) for k in range(1, kmax + 1))
    all_vanish = all(bc == zero for _, bc in quantized)
    if all_vanish:
        verdict = rigidity_verdict(p, [k for k, _ in quantized[: n + 1]])
        assert verdict.identically_zero
    _, bc = volume_and_barycenter(p)

    nodes = (
        ("centrally_symmetric", cls.centrally_symmetric),
        ("bs_symmetric", cls.bs_symmetric),
        ("alpha_one", alpha == 1),
        ("bck_zero_all_k", all_vanish),
        ("bck_zero_large_k", all_vanish),
        ("bck_zero_n_plus_1", all_vanish),
        ("bc_zero", bc == zero),
        ("lattice_symmetric", cls.centrally_lattice_symmetric),
        ("reductive", roots(f).is_centrally_lattice_symmetric()),
    )
    values = dict(nodes)
    implications = list(CHAIN_IMPLICATIONS)
    if n <= 6:
        implications.append(LOW_DIMENSION_IMPLICATION)
    violations = tuple(
        (a, b) for a, b in implications if values[a] and not values[b]
    )
    return ChainReport(
        nodes=nodes,
        violations=violations,
        quantized=quantized,
        barycenter=bc,
    )
