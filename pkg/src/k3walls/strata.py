"""S-equivalence stratum data and its affine ADE classification.

A stratum records a polystable class ``sum_i a_i u_i`` (Mukai vectors with
multiplicities) supported on a singular point of the numerical moduli
problem.  Valid data forces ``(-<u_i, u_j>)`` to be an affine ADE Cartan
matrix whose marks are exactly the multiplicities; deleting a mark-1 node
leaves the finite type of the singularity, and the retained classes give the
dual graph of the exceptional curves with intersection numbers
``(C_i, C_j) = <u_i, u_j>`` and self-intersection -2.
"""

from dataclasses import dataclass

from . import mukai as mk
from . import roots
from .errors import Inconsistent, MarksMismatch, TriplePoint
from .lattice import pairing as picard_pairing


@dataclass(frozen=True)
class StratumData:
    """Context ``(P, H, v)`` plus the list of ``(u_i, multiplicity)`` pairs."""

    lattice: object
    polarization: tuple
    v: mk.MukaiVector
    strata: tuple

    def __post_init__(self):
        object.__setattr__(self, "polarization", tuple(self.polarization))
        object.__setattr__(self, "strata",
                           tuple((u, int(m)) for u, m in self.strata))

    @property
    def vectors(self):
        return tuple(u for u, _ in self.strata)

    @property
    def multiplicities(self):
        return tuple(m for _, m in self.strata)


@dataclass(frozen=True)
class DualGraph:
    """Nodes are retained input indices; edges carry intersection numbers."""

    nodes: tuple
    edges: tuple
    self_intersection: int = -2

    def node_labels(self):
        return tuple(f"C{i}" for i in self.nodes)


@dataclass(frozen=True)
class SingularityReport:
    affine: roots.AffineDiagram
    deleted_node: int
    finite: roots.FiniteDiagram
    marks: tuple
    dual_graph: DualGraph


def validate_stratum(data):
    """Check every stratum invariant; returns the full list of violations."""
    violations = []
    v = data.v
    vecs = data.vectors
    mults = data.multiplicities
    if not vecs:
        return ["stratum list is empty"]
    if len(set(vecs)) != len(vecs):
        violations.append("stratum vectors are not pairwise distinct")
    for k, m in enumerate(mults):
        if m <= 0:
            violations.append(f"multiplicity {k} is not positive")
    for k, u in enumerate(vecs):
        if not u.is_integral():
            violations.append(f"stratum vector {k} is not integral")
        if not u.r > 0:
            violations.append(f"stratum vector {k} has rank {u.r}, expected > 0")
        sq = mk.mukai_square(u)
        if sq != -2:
            violations.append(f"<u_{k}, u_{k}> = {sq}, expected -2")
        pv = mk.mukai_pairing(v, u)
        if pv != 0:
            violations.append(f"<v, u_{k}> = {pv}, expected 0")
    h_hat = mk.delta_map(v, data.polarization)
    for k, u in enumerate(vecs):
        ph = mk.mukai_pairing(h_hat, u)
        if ph != 0:
            violations.append(f"<H^, u_{k}> = {ph}, expected 0")
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            pij = mk.mukai_pairing(vecs[i], vecs[j])
            if pij < 0:
                violations.append(f"<u_{i}, u_{j}> = {pij}, expected >= 0")
    total = None
    for u, m in data.strata:
        term = m * u
        total = term if total is None else total + term
    if total != v:
        violations.append("sum of a_i u_i differs from v")
    return violations


def cartan_matrix_of(data):
    """The candidate affine Cartan matrix ``(-<u_i, u_j>)`` in input order."""
    vecs = data.vectors
    return roots.CartanMatrix([[-mk.mukai_pairing(x, y) for y in vecs] for x in vecs])


def retained_vectors(data, deleted=0):
    return tuple(u for k, u in enumerate(data.vectors) if k != deleted)


def classify_singularity(data, deleted_node=0):
    """Affine type, finite type after node deletion, and the dual graph.

    The marks of the recognized affine diagram must equal the input
    multiplicities (:class:`MarksMismatch` otherwise — for honestly
    constructed strata this cannot happen).  ``deleted_node`` designates
    which mark-1 node to remove; extended diagrams with several mark-1 nodes
    genuinely depend on this choice only up to diagram symmetry, so the
    choice is surfaced rather than hidden.
    """
    matrix = cartan_matrix_of(data)
    affine = roots.classify_affine(matrix)
    if affine.marks != data.multiplicities:
        raise MarksMismatch(
            f"multiplicities {data.multiplicities} differ from marks {affine.marks}")
    finite = roots.delete_node(matrix, deleted_node)
    retained = [k for k in range(len(data.strata)) if k != deleted_node]
    vecs = data.vectors
    edges = []
    for a in range(len(retained)):
        for b in range(a + 1, len(retained)):
            i, j = retained[a], retained[b]
            m = mk.mukai_pairing(vecs[i], vecs[j])
            if m > 0:
                edges.append((i, j, int(m)))
    graph = DualGraph(tuple(retained), tuple(edges))
    return SingularityReport(affine, deleted_node, finite, affine.marks, graph)


def strata_orthogonality(first, second):
    """Compare two strata for the same ``(P, H, v)``: equal or orthogonal.

    Distinct strata of one polystable class must span mutually orthogonal
    sublattices; a nonzero cross pairing means the inputs cannot both be
    genuine, which raises :class:`Inconsistent`.
    """
    if first.lattice != second.lattice or first.v != second.v \
            or tuple(first.polarization) != tuple(second.polarization):
        raise ValueError("strata live in different (P, H, v) contexts")
    if sorted(first.strata, key=_stratum_key) == sorted(second.strata, key=_stratum_key):
        return "equal"
    for u in first.vectors:
        for w in second.vectors:
            p = mk.mukai_pairing(u, w)
            if p != 0:
                raise Inconsistent(
                    f"distinct strata with <u, u'> = {p}; inputs cannot both be "
                    "valid S-equivalence data for this v")
    return "orthogonal"


def _stratum_key(pair):
    u, m = pair
    return (u.r, u.c1, u.s, m)


def no_triple_point_check(data, deleted=0):
    """Assert no three retained classes pair like a triangle.

    ``<(u_i + u_j + u_k)^2> = 0`` forces three mutual edges, which ADE dual
    graphs exclude; anything >= 0 is reported as :class:`TriplePoint`.
    """
    vecs = retained_vectors(data, deleted)
    n = len(vecs)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = vecs[i] + vecs[j] + vecs[k]
                sq = mk.mukai_square(total)
                if sq >= 0:
                    raise TriplePoint(
                        f"<(u_{i}+u_{j}+u_{k})^2> = {sq}; not negative definite data")
    return True


def psi_sets(data, deleted=0):
    """The origin walls inside the stratum span: ``Psi_+`` and ``v - Psi_+``.

    ``Psi_+`` is the positive-root combinations of the retained classes; both
    lists are re-verified to be (-2)-classes with rank strictly between 0 and
    rk v.  Output is ordered by the root coefficient vectors.
    """
    matrix = cartan_matrix_of(data)
    affine = roots.classify_affine(matrix)
    if affine.marks[deleted] != 1:
        raise MarksMismatch(f"node {deleted} has mark {affine.marks[deleted]}, expected 1")
    keep = [k for k in range(len(data.strata)) if k != deleted]
    sub = roots.CartanMatrix(
        tuple(tuple(matrix.entries[a][b] for b in keep) for a in keep))
    finite = roots.classify_finite(sub)
    vecs = data.vectors
    v = data.v
    psi_plus = []
    for coeffs in roots.positive_roots(finite):
        total = None
        for c, k in zip(coeffs, keep):
            if c:
                term = c * vecs[k]
                total = term if total is None else total + term
        psi_plus.append(total)
    complement = [v - u for u in psi_plus]
    for u in psi_plus + complement:
        assert mk.mukai_square(u) == -2
        assert 0 < u.r < v.r
    return psi_plus, complement
