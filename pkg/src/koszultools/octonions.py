"""Exact octonion arithmetic and multilinear associator identity checks.

Basis e0..e7 with e0 the unit.  The imaginary units multiply by the
Fano-plane rule e_i e_{i+1} = e_{i+3} with indices cyclic in 1..7, each
line anticommuting, and e_i^2 = -e0.  The full table is spelled out in
OCT_TABLE.  An identity sum_s x_s (a_{s(1)}, a_{s(2)}, a_{s(3)}) = 0 is
multilinear, so checking it on all 8^3 basis triples decides it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .s3 import PERMS

ZERO = Fraction(0)
ONE = Fraction(1)

_FANO_LINES = tuple((i, i % 7 + 1, (i + 2) % 7 + 1) for i in range(1, 8))


def _build_table():
    table = [[None] * 8 for _ in range(8)]
    for j in range(8):
        table[0][j] = (1, j)
        table[j][0] = (1, j)
    for i in range(1, 8):
        table[i][i] = (-1, 0)
    for a, b, c in _FANO_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            table[x][y] = (1, z)
            table[y][x] = (-1, z)
    return tuple(tuple(row) for row in table)


OCT_TABLE = _build_table()


@dataclass(frozen=True)
class Octonion:
    coords: tuple

    def __post_init__(self):
        coords = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coords)
        if len(coords) != 8:
            raise ValueError("octonions have 8 coordinates")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def basis(cls, i):
        coords = [ZERO] * 8
        coords[i] = ONE
        return cls(coords)

    @classmethod
    def zero(cls):
        return cls((ZERO,) * 8)

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return Octonion(tuple(scalar * a for a in self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def norm(self):
        """Sum of squared coordinates; multiplicative for this table."""
        return sum((c * c for c in self.coords), ZERO)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    coords = [ZERO] * 8
    for i, a in enumerate(x.coords):
        if a == 0:
            continue
        for j, b in enumerate(y.coords):
            if b == 0:
                continue
            sign, k = OCT_TABLE[i][j]
            coords[k] += a * b * sign
    return Octonion(coords)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


@dataclass(frozen=True)
class AssociatorIdentity:
    """Coefficients x_s over the fixed S3 enumeration, not all zero."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c)
                       for c in self.coefficients)
        if len(coeffs) != 6:
            raise ValueError("an associator identity has six coefficients")
        if all(c == 0 for c in coeffs):
            raise ValueError("the zero identity is not allowed")
        object.__setattr__(self, "coefficients", coeffs)

    def evaluate(self, x, y, z):
        args = (x, y, z)
        total = Octonion.zero()
        for coeff, perm in zip(self.coefficients, PERMS):
            if coeff == 0:
                continue
            total = total + associator(args[perm[0] - 1], args[perm[1] - 1],
                                       args[perm[2] - 1]).scale(coeff)
        return total


def identity_holds(identity: AssociatorIdentity):
    """(True, None) if the identity vanishes on all basis triples.

    Multilinearity makes the basis check conclusive; on failure the
    first offending triple of basis indices is returned.
    """
    basis = [Octonion.basis(i) for i in range(8)]
    for i in range(8):
        for j in range(8):
            for k in range(8):
                if not identity.evaluate(basis[i], basis[j], basis[k]).is_zero():
                    return False, (i, j, k)
    return True, None


def identity_from_coeffs(x_id, x_12, x_13, x_23, x_123, x_132):
    return AssociatorIdentity((x_id, x_12, x_13, x_23, x_123, x_132))


def preset_identity(name, alpha=None, beta=None):
    """Named identity families used by the classifier."""
    if name == "third-power":
        return AssociatorIdentity((1, 1, 1, 1, 1, 1))
    if name == "sign":
        return AssociatorIdentity((1, -1, -1, -1, 1, 1))
    if name == "flexible":
        return AssociatorIdentity((1, 0, 1, 0, 0, 0))
    if name == "assoc-param":
        if alpha is None or beta is None:
            raise ValueError("parametric identity needs alpha and beta")
        a = Fraction(alpha)
        b = Fraction(beta)
        # coefficient of the associator at each word, indexed by PERMS
        return AssociatorIdentity((b, b, -a, a - b, a - b, -a))
    raise ValueError(f"unknown identity preset {name!r}")
