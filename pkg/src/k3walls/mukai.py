"""The algebraic Mukai lattice Z + Pic(X) + Z*rho over a Picard lattice.

A Mukai vector is a triple ``(r, c1, s)``: rank component, divisor component
in Picard coordinates, and point component.  Rational components are first
class citizens (twist parameters and orthogonal projections need them);
integrality is a predicate, not a type split.  The pairing is

    <x, y> = (c1(x), c1(y)) - r(x) s(y) - s(x) r(y).
"""

from fractions import Fraction
from math import gcd

from .errors import InvalidTwist
from .lattice import pairing as picard_pairing
from .linalg import normalize_number, normalize_vector, vec_add, vec_scale, vec_sub


class MukaiVector:
    """Element of H^0 + Pic + H^4 with exact rational components."""

    __slots__ = ("r", "c1", "s", "lattice")

    def __init__(self, r, c1, s, lattice):
        c1 = normalize_vector(c1)
        if len(c1) != lattice.rank:
            raise ValueError("c1 length does not match Picard rank")
        object.__setattr__(self, "r", normalize_number(Fraction(r)))
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "s", normalize_number(Fraction(s)))
        object.__setattr__(self, "lattice", lattice)

    def __setattr__(self, name, value):
        raise AttributeError("MukaiVector is immutable")

    def __eq__(self, other):
        return (isinstance(other, MukaiVector) and self.r == other.r
                and self.c1 == other.c1 and self.s == other.s
                and self.lattice == other.lattice)

    def __hash__(self):
        return hash((self.r, self.c1, self.s))

    def __repr__(self):
        return f"MukaiVector(r={self.r}, c1={list(self.c1)}, s={self.s})"

    def __add__(self, other):
        self._check_ambient(other)
        return MukaiVector(self.r + other.r, vec_add(self.c1, other.c1),
                           self.s + other.s, self.lattice)

    def __sub__(self, other):
        self._check_ambient(other)
        return MukaiVector(self.r - other.r, vec_sub(self.c1, other.c1),
                           self.s - other.s, self.lattice)

    def __neg__(self):
        return MukaiVector(-self.r, vec_scale(-1, self.c1), -self.s, self.lattice)

    def __rmul__(self, c):
        return MukaiVector(c * self.r, vec_scale(c, self.c1), c * self.s, self.lattice)

    def _check_ambient(self, other):
        if self.lattice != other.lattice:
            raise ValueError("Mukai vectors live over different Picard lattices")

    def is_integral(self):
        return (self.r == int(self.r) and self.s == int(self.s)
                and all(c == int(c) for c in self.c1))

    def is_zero(self):
        return self.r == 0 and self.s == 0 and all(c == 0 for c in self.c1)


def rho(lattice):
    """The point class (0, 0, 1)."""
    return MukaiVector(0, lattice.zero(), 1, lattice)


def unit(lattice):
    """The class (1, 0, 0)."""
    return MukaiVector(1, lattice.zero(), 0, lattice)


def mukai_pairing(x, y):
    """<x, y> = (c1 x, c1 y) - r(x) s(y) - s(x) r(y); symmetric, exact."""
    x._check_ambient(y)
    return normalize_number(
        Fraction(picard_pairing(x.lattice, x.c1, y.c1)) - x.r * y.s - x.s * y.r)


def mukai_square(x):
    return mukai_pairing(x, x)


def euler_pairing(x, y):
    """Euler form chi(x, y) = -<x, y>."""
    return normalize_number(-Fraction(mukai_pairing(x, y)))


def mukai_vector_from_chern(rank, c1, c2, lattice):
    """Mukai vector of Chern data: ``(rank, c1, (c1,c1)/2 - c2 + rank)``."""
    if rank < 0:
        raise ValueError("rank must be non-negative")
    half_square = Fraction(picard_pairing(lattice, c1, c1), 2)
    return MukaiVector(rank, c1, half_square - c2 + rank, lattice)


def chern_data(x):
    """Inverse of :func:`mukai_vector_from_chern`: returns ``(rank, c1, c2)``."""
    half_square = Fraction(picard_pairing(x.lattice, x.c1, x.c1), 2)
    return x.r, x.c1, normalize_number(half_square + x.r - x.s)


def is_isotropic(x):
    return mukai_square(x) == 0


def is_primitive(x):
    """True iff the gcd of all integer components is 1.  Input must be integral."""
    if not x.is_integral():
        raise ValueError("primitivity is only defined for integral Mukai vectors")
    g = gcd(int(x.r), int(x.s))
    for c in x.c1:
        g = gcd(g, int(c))
    return g == 1


def delta_map(v, d):
    """Isometric embedding of divisor classes, ``D -> (0, D, (D, c1(v))/r)``.

    The image is orthogonal to both ``v`` and the point class, which gives the
    orthogonal decomposition  Q v + Q rho  perp  delta(Pic tensor Q).
    """
    if v.r == 0:
        raise ValueError("delta map needs a Mukai vector of positive rank")
    d = normalize_vector(d)
    s = Fraction(picard_pairing(v.lattice, d, v.c1)) / Fraction(v.r)
    return MukaiVector(0, d, s, v.lattice)


def h_hat(v, h):
    """The image of the polarization under the delta map."""
    return delta_map(v, h)


def decompose(v, x):
    """Write ``x = cv*v + cr*rho + delta(D)``; returns ``(cv, cr, D)``.

    The decomposition exists and is unique whenever ``v.r != 0``; it is the
    orthogonal decomposition when ``v`` is isotropic.
    """
    if v.r == 0:
        raise ValueError("decompose needs a Mukai vector of positive rank")
    cv = Fraction(x.r) / Fraction(v.r)
    d = vec_sub(x.c1, vec_scale(cv, v.c1))
    ds = Fraction(picard_pairing(v.lattice, d, v.c1)) / Fraction(v.r)
    cr = Fraction(x.s) - cv * Fraction(v.s) - ds
    return normalize_number(cv), normalize_number(cr), normalize_vector(d)


class TwistParameter:
    """A rational twist class ``alpha`` in the image of H-perp under delta.

    For the active pair ``(v, H)`` this means: ``alpha.r == 0``,
    ``(c1(alpha), H) == 0`` and ``alpha.s == (c1(alpha), c1(v)) / v.r``.
    All three are verified on construction.
    """

    __slots__ = ("alpha", "v", "h")

    def __init__(self, alpha, v, h):
        alpha._check_ambient(v)
        if v.r == 0:
            raise ValueError("twist parameters need a context vector of positive rank")
        if alpha.r != 0:
            raise InvalidTwist("twist parameter must have rank component 0")
        if picard_pairing(v.lattice, alpha.c1, h) != 0:
            raise InvalidTwist("twist parameter must pair to zero with the polarization")
        expected_s = Fraction(picard_pairing(v.lattice, alpha.c1, v.c1)) / Fraction(v.r)
        if alpha.s != expected_s:
            raise InvalidTwist("twist parameter point component must equal (c1, c1(v))/r")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "h", tuple(h))

    def __setattr__(self, name, value):
        raise AttributeError("TwistParameter is immutable")

    def __repr__(self):
        return f"TwistParameter({self.alpha!r})"


def twist_from_divisor(v, h, d):
    """Build the twist parameter ``delta(D)`` for ``D`` rational and H-orthogonal."""
    return TwistParameter(delta_map(v, d), v, h)


def twisted_comparator(w, h, x, y):
    """Order numerical twisted Hilbert slopes of ``x`` and ``y``: -1, 0 or +1.

    Keys are compared lexicographically: first the polarization slope
    ``(c1, H)/r``, then the twisted Euler slope ``chi(w, .)/(rk w * rk .)``.
    A result of +1 means ``x`` strictly dominates ``y`` for large twists of
    the polarization, i.e. ``y`` sits on the destabilizing side.  This orders
    the numerical invariants only; no claim about actual sheaves is made.
    """
    for vec in (w, x, y):
        if vec.r <= 0:
            raise ValueError("twisted comparison needs positive ranks")
    x._check_ambient(y)
    x._check_ambient(w)
    lat = x.lattice

    def key(z):
        slope = Fraction(picard_pairing(lat, z.c1, h)) / Fraction(z.r)
        euler = Fraction(euler_pairing(w, z)) / (Fraction(w.r) * Fraction(z.r))
        return (slope, euler)

    kx, ky = key(x), key(y)
    if kx < ky:
        return -1
    if kx > ky:
        return 1
    return 0
