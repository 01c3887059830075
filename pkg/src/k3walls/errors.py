"""Exception hierarchy.

``DomainError`` covers every mathematically meaningful failure (the CLI maps
it to exit code 3); malformed input documents raise ``SchemaError`` (exit
code 2).  Plain ``ValueError`` is reserved for caller bugs such as dimension
mismatches.
"""


class DomainError(Exception):
    """A computation was asked for data that the theory rules out."""


class SchemaError(Exception):
    """An input document does not match the JSON contract."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class NotDefinite(DomainError):
    """Enumeration requested on a sublattice that is not definite."""


class InvalidTwist(DomainError):
    """A twist parameter violates one of its three defining constraints."""


class NotAffineADE(DomainError):
    """A symmetric matrix is not an affine ADE Cartan matrix."""


class NotFiniteADE(DomainError):
    """A symmetric matrix is not a finite ADE Cartan matrix."""


class MarkNotOne(DomainError):
    """Node deletion requested at a node whose mark is not 1."""


class MarksMismatch(DomainError):
    """Stratum multiplicities differ from the marks of the affine diagram."""


class CapExceeded(DomainError):
    """An orbit or group enumeration outgrew its cap."""


class NotMinusTwo(DomainError):
    """Reflection requested in a vector of square != -2."""


class UOnUPrime(DomainError):
    """Wall crossing requested across a wall through the origin."""


class RankZeroImage(DomainError):
    """A Weyl image of a stratum vector has rank 0 (inconsistent input)."""


class TriplePoint(DomainError):
    """Three stratum vectors pair like a triangle (inconsistent input)."""


class Inconsistent(DomainError):
    """Distinct strata with a nonzero cross pairing (inconsistent input)."""


class NonIsotropicV(DomainError):
    """Wall enumeration needs an isotropic Mukai vector."""


class NonPositivePolarization(DomainError):
    """Wall enumeration needs a polarization of positive square."""


class WrongSignature(DomainError):
    """Wall enumeration needs a lattice of signature (1, rank-1)."""
