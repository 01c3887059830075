"""Even integer lattices: Gram arithmetic, signatures, complements, enumeration.

A :class:`PicardLattice` is an abstract even lattice given by a symmetric
integer Gram matrix with labelled basis vectors.  Vectors are plain tuples of
``int`` (or ``Fraction`` where an operation documents rational inputs) in the
lattice basis.  All arithmetic is exact.
"""

from fractions import Fraction

from . import linalg
from .errors import NotDefinite
from .linalg import normalize_number, normalize_vector, vec_is_integral


class PicardLattice:
    """An even lattice with a fixed basis.

    ``gram`` must be a symmetric integer matrix with even diagonal.  The
    basis labels are cosmetic but must be distinct; they surface in reports
    and DOT output.
    """

    __slots__ = ("rank", "gram", "basis_labels")

    def __init__(self, gram, basis_labels=None):
        gram = tuple(tuple(int(e) for e in row) for row in gram)
        n = len(gram)
        for i, row in enumerate(gram):
            if len(row) != n:
                raise ValueError(f"gram row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if gram[i][i] % 2 != 0:
                raise ValueError(f"gram[{i}][{i}] = {gram[i][i]} is odd; the lattice must be even")
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"gram is not symmetric at ({i},{j})")
        if basis_labels is None:
            basis_labels = tuple(f"e{i}" for i in range(n))
        else:
            basis_labels = tuple(str(s) for s in basis_labels)
            if len(basis_labels) != n:
                raise ValueError("basis_labels length does not match rank")
            if len(set(basis_labels)) != n:
                raise ValueError("basis_labels must be distinct")
        object.__setattr__(self, "rank", n)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "basis_labels", basis_labels)

    def __setattr__(self, name, value):
        raise AttributeError("PicardLattice is immutable")

    def __eq__(self, other):
        return (isinstance(other, PicardLattice)
                and self.gram == other.gram and self.basis_labels == other.basis_labels)

    def __hash__(self):
        return hash((self.gram, self.basis_labels))

    def __repr__(self):
        return f"PicardLattice(rank={self.rank}, labels={list(self.basis_labels)})"

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self):
        return (0,) * self.rank


def pairing(lattice, x, y):
    """Evaluate the bilinear form ``x^T G y``; exact, integer for integer input."""
    n = lattice.rank
    if len(x) != n or len(y) != n:
        raise ValueError(f"vector length does not match lattice rank {n}")
    gram = lattice.gram
    total = 0
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        row = gram[i]
        total += xi * sum(row[j] * y[j] for j in range(n) if y[j] != 0)
    return normalize_number(total)


def norm(lattice, x):
    return pairing(lattice, x, x)


def signature(lattice):
    """Inertia ``(pos, neg, null)`` of the Gram matrix, computed exactly."""
    return linalg.signature([list(row) for row in lattice.gram])


class Sublattice:
    """A sublattice given by an independent integer basis in ambient coordinates."""

    __slots__ = ("ambient", "basis", "saturated")

    def __init__(self, ambient, basis, saturated=False):
        basis = tuple(tuple(int(a) for a in v) for v in basis)
        for v in basis:
            if len(v) != ambient.rank:
                raise ValueError("basis vector length does not match ambient rank")
        if basis and linalg.integer_kernel([list(v) for v in zip(*basis)], len(basis)):
            raise ValueError("sublattice basis is linearly dependent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "saturated", bool(saturated))

    def __setattr__(self, name, value):
        raise AttributeError("Sublattice is immutable")

    def __repr__(self):
        return f"Sublattice(rank={self.rank}, saturated={self.saturated})"

    @property
    def rank(self):
        return len(self.basis)

    def restricted_gram(self):
        """Gram matrix of the basis under the ambient form."""
        return [[pairing(self.ambient, v, w) for w in self.basis] for v in self.basis]

    def from_coefficients(self, coeffs):
        """Map a coefficient vector on the basis to ambient coordinates."""
        n = self.ambient.rank
        out = [0] * n
        for c, v in zip(coeffs, self.basis):
            if c != 0:
                for j in range(n):
                    out[j] += c * v[j]
        return normalize_vector(out)

    def coefficients_of(self, x):
        """Rational coefficients of ``x`` on the basis, or None when outside the span."""
        if not self.basis:
            return () if linalg.vec_is_zero(x) else None
        cols = [list(col) for col in zip(*self.basis)]
        return linalg.solve_rational(cols, list(x))

    def contains(self, x, over_z=True):
        c = self.coefficients_of(x)
        if c is None:
            return False
        return vec_is_integral(c) if over_z else True


def full_sublattice(lattice):
    return Sublattice(lattice, [lattice.basis_vector(i) for i in range(lattice.rank)],
                      saturated=True)


def orthogonal_complement(lattice, vectors):
    """The saturated sublattice pairing to zero against every input vector."""
    if not vectors:
        return full_sublattice(lattice)
    rows = [linalg.mat_mul_vec(lattice.gram, v) for v in vectors]
    kernel = linalg.integer_kernel([list(r) for r in rows], lattice.rank)
    return Sublattice(lattice, kernel, saturated=True)


def saturate(sub):
    """Primitive closure: rational span intersected with the ambient lattice."""
    if not sub.basis:
        return Sublattice(sub.ambient, (), saturated=True)
    n = sub.ambient.rank
    # Vectors orthogonal (dot product) to the span, then their dot-kernel.
    dot_kernel = linalg.integer_kernel([list(v) for v in sub.basis], n)
    if not dot_kernel:
        return full_sublattice(sub.ambient)
    closure = linalg.integer_kernel([list(v) for v in dot_kernel], n)
    return Sublattice(sub.ambient, closure, saturated=True)


def definiteness(sub):
    """+1 positive definite, -1 negative definite, 0 neither.  Rank 0 gives +1."""
    if sub.rank == 0:
        return 1
    pos, neg, null = linalg.signature(sub.restricted_gram())
    if null == 0 and neg == 0:
        return 1
    if null == 0 and pos == 0:
        return -1
    return 0


def is_negative_definite(sub):
    """True iff the restricted form is negative definite (vacuously for rank 0)."""
    if sub.rank == 0:
        return True
    pos, neg, null = linalg.signature(sub.restricted_gram())
    return pos == 0 and null == 0


def enumerate_norm_vectors(sub, norm_min, norm_max):
    """All ``x`` in a definite sublattice with ``norm_min <= (x,x) <= norm_max``.

    Exactly one of ``x, -x`` is returned for nonzero ``x`` (the representative
    whose first nonzero ambient coordinate is positive); the zero vector is
    included iff 0 lies in the range.  Output is sorted lexicographically on
    ambient coordinates.
    """
    if norm_min > norm_max:
        raise ValueError("norm_min exceeds norm_max")
    sign = definiteness(sub)
    if sign == 0:
        raise NotDefinite("sublattice is not definite")
    out = []
    if norm_min <= 0 <= norm_max:
        out.append(sub.ambient.zero())
    if sub.rank:
        if sign > 0:
            gram = sub.restricted_gram()
            lo, hi = norm_min, norm_max
        else:
            gram = [[-e for e in row] for row in sub.restricted_gram()]
            lo, hi = -norm_max, -norm_min
        if hi > 0:
            seen = set()
            for coeffs, value in linalg.short_vectors(gram, hi):
                if value < lo:
                    continue
                seen.add(linalg.sign_normalize(sub.from_coefficients(coeffs)))
            out.extend(seen)
    return sorted(out)
