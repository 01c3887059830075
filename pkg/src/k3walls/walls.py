"""Wall enumeration, chamber location, reflections, wall-crossing.

For a primitive isotropic Mukai vector ``v`` of positive rank over a Picard
lattice of signature (1, rank-1) and a polarization ``H`` of positive square,
the wall vectors are the integral classes ``u`` with

    <u, u> = -2,   0 < rk u < rk v,   <H^, u> = 0,   <v, u> <= 0,

a finite set.  Walls ``W_u`` are the loci ``<v + alpha, u> = 0`` in the space
of twist parameters; the chambers of the complement index the distinct
numerical stability notions.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import lattice as lat
from . import linalg
from . import mukai as mk
from . import roots
from .errors import (NonIsotropicV, NonPositivePolarization, NotMinusTwo,
                     RankZeroImage, UOnUPrime, WrongSignature)


@dataclass(frozen=True)
class WallVector:
    """A (-2)-class cutting a wall for the active ``(v, H)`` pair."""

    u: mk.MukaiVector

    def __repr__(self):
        return f"WallVector({self.u!r})"


@dataclass(frozen=True)
class ChamberPosition:
    """Signs of ``<v + alpha, u>`` over a wall list.

    ``signs[k]`` is -1/0/+1 for ``walls[k]``; ``on_walls`` holds the indices
    with sign 0.  ``weyl_word`` is filled when a stratum context identifies
    the finite Weyl geometry (see :func:`locate`).
    """

    walls: tuple
    signs: tuple
    on_walls: tuple
    weyl_word: tuple = None
    reduced_values: tuple = None
    on_chamber_wall: bool = None

    @property
    def is_generic(self):
        return not self.on_walls

    def sign_of(self, wall):
        return self.signs[self.walls.index(wall)]


@dataclass(frozen=True)
class CurveClass:
    """An exceptional curve class in v-perp, normalized modulo Zv.

    ``hom_side`` records which Hom-space cuts the curve locus: "from" for
    ``Hom(F_i, E) != 0`` (positive-rank Weyl image), "to" for
    ``Hom(E, F_i) != 0`` (negative-rank image).
    """

    representative: mk.MukaiVector
    hom_side: str
    image: mk.MukaiVector


def _check_context(p, h, v):
    if not v.is_integral():
        raise ValueError("wall enumeration needs an integral Mukai vector")
    if v.r <= 0:
        raise ValueError("wall enumeration needs rk v > 0")
    if not mk.is_primitive(v):
        raise ValueError("wall enumeration needs a primitive Mukai vector")
    if mk.mukai_square(v) != 0:
        raise NonIsotropicV(f"<v, v> = {mk.mukai_square(v)}, expected 0")
    if lat.pairing(p, h, h) <= 0:
        raise NonPositivePolarization(f"(H, H) = {lat.pairing(p, h, h)}, expected > 0")
    sig = lat.signature(p)
    if sig != (1, p.rank - 1, 0):
        raise WrongSignature(f"Picard signature {sig}, expected (1, {p.rank - 1}, 0)")


def enumerate_walls(p, h, v):
    """The finite wall set for ``(Pic, H, v)``, sorted by (rank, lex divisor).

    For ``u = (s, eta, b)`` the divisor ``D := rk(v) * eta - s * c1(v)`` is
    forced into the negative definite lattice H-perp within Pic with
    ``(D, D) = -2 rk(v)^2 - 2 rk(v) s <u, v>  in  [-2 rk(v)^2, 0]``, and eta
    is integral exactly when ``D = -s c1(v) (mod rk v)`` componentwise.  For
    each rank ``s`` the search therefore enumerates that congruence coset of
    H-perp directly (shifted bound propagation), recovers ``eta`` by the
    exact division, fixes ``b`` from ``<u, u> = -2``, and keeps u exactly
    when ``<v, u> <= 0``.
    """
    _check_context(p, h, v)
    r = int(v.r)
    if r == 1:
        return []
    xi = tuple(int(c) for c in v.c1)
    a_v = int(v.s)
    xi_sq = lat.pairing(p, xi, xi)
    g_xi = linalg.mat_mul_vec(p.gram, xi)
    h_perp = lat.orthogonal_complement(p, [h])
    k = h_perp.rank
    rho = p.rank

    # D = W c over the H-perp basis; the congruence c1-part condition
    # "W c = -s xi (mod r)" is handled per s: one particular solution plus
    # the fixed sublattice {c : W c = 0 (mod r)}.
    w_cols = h_perp.basis
    a_rows = [[w_cols[j][i] for j in range(k)] + [r if t == i else 0 for t in range(rho)]
              for i in range(rho)]
    kernel = linalg.integer_kernel(a_rows, k + rho)
    lam_basis = [vec[:k] for vec in kernel]
    assert len(lam_basis) == k
    gw = [[-e for e in row] for row in h_perp.restricted_gram()]
    qpp = [[sum(bi[a] * gw[a][b] * bj[b] for a in range(k) for b in range(k))
            for bj in lam_basis] for bi in lam_basis]

    results = []
    for s in range(1, r):
        sol = linalg.solve_integer(a_rows, [-s * x for x in xi])
        if sol is None:
            continue
        c0 = sol[:k]
        lin = [sum(bi[a] * gw[a][b] * c0[b] for a in range(k) for b in range(k))
               for bi in lam_basis]
        const = sum(c0[a] * gw[a][b] * c0[b] for a in range(k) for b in range(k))
        center = linalg.solve_rational(qpp, lin) if k else ()
        floor_const = const - sum(t * l for t, l in zip(center, lin))
        budget = 2 * r * r - floor_const
        for z, value in linalg.coset_vectors(qpp, center, budget):
            q = value + floor_const
            assert q == int(q)
            d2 = -int(q)
            c = [a + sum(zj * bj[idx] for zj, bj in zip(z, lam_basis))
                 for idx, a in enumerate(c0)]
            d = h_perp.from_coefficients(c)
            d_xi = sum(d[i] * g_xi[i] for i in range(rho) if d[i])
            num = d2 + 2 * s * d_xi + s * s * xi_sq
            assert num % (r * r) == 0 and (d_xi + s * xi_sq) % r == 0
            eta_sq = num // (r * r)
            if (eta_sq + 2) % (2 * s):
                continue
            b = (eta_sq + 2) // (2 * s)
            pv = (d_xi + s * xi_sq) // r - r * b - a_v * s
            if pv <= 0:
                results.append((s, d, b))
    results.sort()
    out = []
    for s, d, b in results:
        eta = tuple((c + s * x) // r for c, x in zip(d, xi))
        out.append(WallVector(mk.MukaiVector(s, eta, b, p)))
    return out


def u_prime(walls, v):
    """The sub-collection of walls through the origin: ``<v, u> = 0``."""
    return [w for w in walls if mk.mukai_pairing(v, w.u) == 0]


def is_generic_polarization(p, h, v):
    """Sufficient lattice-level genericity test: the wall set is empty.

    An empty wall set certainly makes every twist give the same stability;
    the converse is not claimed.
    """
    return not enumerate_walls(p, h, v)


def locate(alpha, walls, v, strata_basis=None):
    """Exact chamber position of a twist parameter against a wall list.

    With ``strata_basis`` (the retained stratum vectors ``v_1..v_n``, e.g.
    from :func:`k3walls.strata.retained_vectors`), the position also carries
    the Weyl word reducing ``alpha`` into the closed fundamental chamber of
    the corresponding finite geometry.
    """
    a = alpha.alpha if isinstance(alpha, mk.TwistParameter) else alpha
    signs = []
    on = []
    for k, w in enumerate(walls):
        val = mk.mukai_pairing(v + a, w.u)
        sign = 0 if val == 0 else (1 if val > 0 else -1)
        signs.append(sign)
        if sign == 0:
            on.append(k)
    word = reduced = on_chamber_wall = None
    if strata_basis is not None:
        values = [mk.mukai_pairing(b, a) for b in strata_basis]
        gram = [[-mk.mukai_pairing(x, y) for y in strata_basis] for x in strata_basis]
        diagram = roots.classify_finite(roots.CartanMatrix(gram))
        word, reduced, on_chamber_wall = roots.reduce_to_fundamental(diagram, values)
    return ChamberPosition(tuple(walls), tuple(signs), tuple(on),
                           word, reduced, on_chamber_wall)


def small_twist_violations(position, v):
    """Indices of walls separating the located twist from the origin.

    Walls through the origin never separate (the sign of ``<v + t a, u>`` is
    constant for t > 0); a wall with ``<v, u> < 0`` separates exactly when the
    located sign is >= 0.  An empty result is the exact replacement for the
    informal requirement that the twist be "small enough": every statement
    tied to a chamber adjacent to the origin applies verbatim.
    """
    out = []
    for k, w in enumerate(position.walls):
        if mk.mukai_pairing(v, w.u) < 0 and position.signs[k] >= 0:
            out.append(k)
    return tuple(out)


def is_small_twist(position, v):
    """True iff no wall separates the located twist from the origin."""
    return not small_twist_violations(position, v)


def reflect(u, x):
    """Reflection in a (-2)-class: ``x -> x + <x, u> u``; an involution."""
    uu = u.u if isinstance(u, WallVector) else u
    if mk.mukai_square(uu) != -2:
        raise NotMinusTwo(f"<u, u> = {mk.mukai_square(uu)}, expected -2")
    return x + mk.mukai_pairing(x, uu) * uu


def fm_cohomological(u_f, x):
    """Cohomological action of the associated derived equivalence: ``-R_u``."""
    return -reflect(u_f, x)


def cross_wall(v, u):
    """Reflect ``v`` across a wall not through the origin.

    Requires ``<v, u> != 0`` (crossing back across the same wall is the same
    reflection, so applying this twice is the identity); the result is again
    isotropic and primitive.  The identification of the two sides leaves the
    class bookkeeping in v-perp modulo Zv unchanged.
    """
    uu = u.u if isinstance(u, WallVector) else u
    pv = mk.mukai_pairing(v, uu)
    if pv == 0:
        raise UOnUPrime("wall passes through the origin; crossing is undefined")
    v_prime = reflect(uu, v)
    assert mk.mukai_square(v_prime) == 0
    return v_prime


def apply_weyl_word(word, x, basis):
    """Apply a Weyl word to a Mukai vector, rightmost letter first.

    Letters are 1-based indices into ``basis``; letter j acts as the
    reflection in ``basis[j-1]``.
    """
    for letter in reversed(word):
        x = reflect(basis[letter - 1], x)
    return x


def normalize_mod_v(v, x):
    """The representative of ``x + Zv`` with rank component in ``[0, rk v)``."""
    if v.r <= 0:
        raise ValueError("normalization needs rk v > 0")
    k = -(int(x.r) // int(v.r))
    return x + k * v


def curve_classes(v, strata_basis, word):
    """Exceptional curve classes ``-w(v_i)`` for a chamber ``w(D)``.

    ``strata_basis`` holds the retained stratum vectors ``v_1..v_n``; the
    Weyl word ``w`` is applied through the Mukai-lattice reflections.  Each
    image must have nonzero rank (:class:`RankZeroImage` otherwise) and the
    sign of that rank selects which Hom-space cuts the curve locus.
    """
    out = []
    for b in strata_basis:
        image = apply_weyl_word(word, b, strata_basis)
        if image.r == 0:
            raise RankZeroImage(f"Weyl image of {b!r} has rank 0")
        rep = normalize_mod_v(v, -image)
        assert mk.mukai_pairing(v, rep) == 0
        side = "from" if image.r > 0 else "to"
        out.append(CurveClass(rep, side, image))
    return out


def slope_condition(alpha, v, strata, deleted=0):
    """Exact test of the slope inequality singling out the special chamber.

    ``strata`` is the full list of ``(u_i, a_i)``; the node ``deleted`` is
    the one removed from the extended diagram.  Checks, for every retained i,

        <v_i, alpha>/rk v_i  >  <v + sum_j a_j v_j, alpha> / rk(v + sum a_j v_j).
    """
    a = alpha.alpha if isinstance(alpha, mk.TwistParameter) else alpha
    retained = [(u, m) for k, (u, m) in enumerate(strata) if k != deleted]
    total = v
    for u, m in retained:
        total = total + m * u
    rhs = Fraction(mk.mukai_pairing(total, a)) / Fraction(total.r)
    for u, _ in retained:
        lhs = Fraction(mk.mukai_pairing(u, a)) / Fraction(u.r)
        if not lhs > rhs:
            return False
    return True
