"""Generator for the diagonal affine ADE model instances.

Given an affine ADE type with marks ``(a_0, ..., a_n)`` and positive integers
``r`` and ``a``, the lattice ``N`` with Gram ``(xi_i, xi_j) = -a_ij + 2ra``
carries the polarization ``H = sum a_i xi_i`` and the Mukai vectors
``v_i = (r, xi_i, a)``, ``v = sum a_i v_i``.  The construction forces the
whole dictionary of identities used by the singularity classification:
``<v_i, v_j> = -a_ij``, ``v`` primitive isotropic, ``H^perp`` negative
definite without (-2)-classes, and so on.  ``generate_example`` re-verifies
every identity by direct computation and raises on any failure, which would
indicate a bug, not bad input.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import lattice as lat
from . import linalg
from . import mukai as mk
from . import roots
from .strata import StratumData

EMBEDDING_CAVEAT = (
    "assumes N embeds primitively into the K3 lattice (-E8)^2 + U^3; known for "
    "extended A/D types of rank <= 18 and the extended E types, not verified here"
)

#: (family, n) pairs covered by the standard sweep.
SWEEP_TYPES = ([("A", n) for n in range(1, 19)]
               + [("D", n) for n in range(4, 19)]
               + [("E", n) for n in (6, 7, 8)])


@dataclass(frozen=True)
class ExampleSpec:
    family: str
    n: int
    r: int
    a: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"family must be A, D or E, got {self.family!r}")
        if self.family == "A" and self.n < 1:
            raise ValueError("extended A needs n >= 1")
        if self.family == "D" and self.n < 4:
            raise ValueError("extended D needs n >= 4")
        if self.family == "E" and self.n not in (6, 7, 8):
            raise ValueError("extended E needs n in {6, 7, 8}")
        if self.r < 1 or self.a < 1:
            raise ValueError("r and a must be positive integers")


@dataclass(frozen=True)
class ExampleInstance:
    spec: ExampleSpec
    lattice: lat.PicardLattice
    polarization: tuple
    v_list: tuple
    v: mk.MukaiVector
    affine_matrix: roots.CartanMatrix
    marks: tuple
    verification: dict
    caveat: str = EMBEDDING_CAVEAT

    def stratum(self):
        """The stratum data ``[(v_i, a_i)]`` of the singular point."""
        return StratumData(self.lattice, self.polarization, self.v,
                           tuple(zip(self.v_list, self.marks)))


def _check(verification, name, ok):
    verification[name] = bool(ok)
    if not ok:
        raise RuntimeError(f"model instance identity failed: {name}")


def generate_example(spec):
    """Build and verify one diagonal model instance."""
    matrix = roots.standard_affine_matrix(spec.family, spec.n)
    marks = roots.classify_affine(matrix).marks
    n_nodes = matrix.n_nodes
    shift = 2 * spec.r * spec.a
    gram = [[-matrix.entries[i][j] + shift for j in range(n_nodes)] for i in range(n_nodes)]
    lattice = lat.PicardLattice(gram, [f"xi{i}" for i in range(n_nodes)])
    h = marks
    mark_sum = sum(marks)
    v_list = tuple(mk.MukaiVector(spec.r, lattice.basis_vector(i), spec.a, lattice)
                   for i in range(n_nodes))
    v = mk.MukaiVector(spec.r * mark_sum, h, spec.a * mark_sum, lattice)

    verification = {}
    _check(verification, "h_pairs_constant",
           all(lat.pairing(lattice, h, lattice.basis_vector(j)) == shift * mark_sum
               for j in range(n_nodes)))
    _check(verification, "h_square",
           lat.pairing(lattice, h, h) == shift * mark_sum ** 2 > 0)

    h_perp = lat.orthogonal_complement(lattice, [h])
    diffs = [linalg.vec_sub(lattice.basis_vector(i), lattice.basis_vector(i + 1))
             for i in range(n_nodes - 1)]
    diff_sub = lat.Sublattice(lattice, diffs)
    _check(verification, "h_perp_span",
           h_perp.rank == len(diffs)
           and all(diff_sub.contains(b) for b in h_perp.basis)
           and all(h_perp.contains(d) for d in diffs))
    _check(verification, "h_perp_negative_definite", lat.is_negative_definite(h_perp))
    _check(verification, "h_perp_no_minus_two",
           lat.enumerate_norm_vectors(h_perp, -2, -2) == [])

    _check(verification, "stratum_gram",
           all(mk.mukai_pairing(v_list[i], v_list[j]) == -matrix.entries[i][j]
               for i in range(n_nodes) for j in range(n_nodes)))
    _check(verification, "v_orthogonal",
           all(mk.mukai_pairing(v, vj) == 0 for vj in v_list))
    h_hat = mk.delta_map(v, h)
    _check(verification, "h_hat_orthogonal",
           all(mk.mukai_pairing(h_hat, vj) == 0 for vj in v_list))
    _check(verification, "v_isotropic", mk.mukai_square(v) == 0)
    _check(verification, "v_primitive", mk.is_primitive(v))

    root_host = lat.PicardLattice(matrix.entries,
                                  [f"alpha{i}" for i in range(n_nodes)])
    phi_image = lat.Sublattice(
        root_host,
        [linalg.vec_sub(root_host.basis_vector(i), root_host.basis_vector(i + 1))
         for i in range(n_nodes - 1)])
    _check(verification, "phi_image_no_norm_two",
           lat.enumerate_norm_vectors(phi_image, 2, 2) == [])

    return ExampleInstance(spec, lattice, h, v_list, v, matrix, marks, verification)


def build_n1_lattice(family, n):
    """The abstract rank n+2 lattice hosting the embedding construction.

    Basis ``beta_0..beta_n, sigma`` with ``(beta_i, beta_j) = -a_ij``,
    ``(sigma, beta_0) = 1``, ``(sigma, beta_i) = 0`` for i > 0 and
    ``(sigma, sigma) = 0``.  Its signature is (1, n+1), which is what lets a
    positive-square vector be split off orthogonally.
    """
    matrix = roots.standard_affine_matrix(family, n)
    size = matrix.n_nodes + 1
    gram = [[0] * size for _ in range(size)]
    for i in range(matrix.n_nodes):
        for j in range(matrix.n_nodes):
            gram[i][j] = -matrix.entries[i][j]
    gram[matrix.n_nodes][0] = gram[0][matrix.n_nodes] = 1
    labels = [f"beta{i}" for i in range(matrix.n_nodes)] + ["sigma"]
    lattice = lat.PicardLattice(gram, labels)
    sig = lat.signature(lattice)
    if sig != (1, matrix.n_nodes, 0):
        raise RuntimeError(f"embedding lattice has signature {sig}, expected (1, {matrix.n_nodes}, 0)")
    return lattice


def fundamental_alpha(instance, scale=1):
    """A twist parameter with all retained pairings equal to ``scale`` > 0.

    Solves for a rational divisor ``D`` with ``(xi_j, D) = scale`` for j >= 1
    and ``(H, D) = 0``; the resulting ``delta(D)`` lies in the fundamental
    chamber and satisfies the equal-pairing sufficient condition for the
    slope inequality.
    """
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    marks = instance.marks
    rest = sum(marks[1:])
    target = [-scale * rest] + [scale] * (len(marks) - 1)
    d = linalg.solve_rational([list(r) for r in instance.lattice.gram], target)
    if d is None:
        raise RuntimeError("model instance Gram matrix is singular")
    alpha = mk.MukaiVector(0, d, 0, instance.lattice)
    return mk.TwistParameter(alpha, instance.v, instance.polarization)
