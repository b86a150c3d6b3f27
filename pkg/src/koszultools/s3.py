"""The arity-3 relation spaces as S3-modules.

Normative conventions, used by every module and every golden vector in
the test suite:

* S3 enumeration (fixed): e, (12), (13), (23), (123), (132), stored as
  value tuples (s(1), s(2), s(3)).
* associative-6 basis: the word monomials a_{s(1)} a_{s(2)} a_{s(3)},
  indexed by the S3 enumeration.
* magmatic-12 basis: first the left combs (a_{s(1)} a_{s(2)}) a_{s(3)}
  in the S3 enumeration (indices 0..5), then the right combs
  a_{s(1)} (a_{s(2)} a_{s(3)}) (indices 6..11).

Permutations act by relabelling the variables a_i -> a_{s(i)}, which is
the left regular action on words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg

ZERO = Fraction(0)
ONE = Fraction(1)

PERMS = ((1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2))
PERM_NAMES = ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
SIGNS = (1, -1, -1, -1, 1, 1)

MAGMATIC = "magmatic-12"
ASSOCIATIVE = "associative-6"
POLARIZED = "polarized-12"

SPACE_DIMS = {MAGMATIC: 12, ASSOCIATIVE: 6, POLARIZED: 12}

_WORD_INDEX = {w: i for i, w in enumerate(PERMS)}


def perm_compose(s, t):
    """(s . t)(i) = s(t(i))."""
    return (s[t[0] - 1], s[t[1] - 1], s[t[2] - 1])


def perm_sign(s):
    return SIGNS[_WORD_INDEX[s]]


class SpaceError(ValueError):
    pass


@dataclass(frozen=True)
class CubicVector:
    """Element of one of the fixed arity-3 coordinate spaces."""

    space: str
    coords: tuple

    def __post_init__(self):
        if self.space not in SPACE_DIMS:
            raise SpaceError(f"unknown space {self.space!r}")
        coords = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coords)
        if len(coords) != SPACE_DIMS[self.space]:
            raise SpaceError(f"{self.space} needs {SPACE_DIMS[self.space]} coordinates")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, space):
        return cls(space, (ZERO,) * SPACE_DIMS[space])

    @classmethod
    def basis(cls, space, index):
        coords = [ZERO] * SPACE_DIMS[space]
        coords[index] = ONE
        return cls(space, coords)

    def __add__(self, other):
        self._check(other)
        return CubicVector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return CubicVector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CubicVector(self.space, tuple(-a for a in self.coords))

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return CubicVector(self.space, tuple(scalar * a for a in self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def _check(self, other):
        if self.space != other.space:
            raise SpaceError(f"space mismatch: {self.space} vs {other.space}")


class MultiplicityVector(NamedTuple):
    triv: int
    std: int
    sgn: int


@dataclass(frozen=True)
class ProjectiveParameter:
    """Point (alpha : beta) of the projective line, in normal form."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        b = Fraction(self.beta)
        if a == 0 and b == 0:
            raise ValueError("(0 : 0) is not a projective point")
        scale = a if a != 0 else b
        object.__setattr__(self, "alpha", a / scale)
        object.__setattr__(self, "beta", b / scale)

    def __str__(self):
        return f"({self.alpha}:{self.beta})"


@dataclass(frozen=True)
class Subspace:
    """Row-reduced subspace of one of the cubic coordinate spaces.

    The reduced-echelon basis is the canonical representative, so
    equality of subspaces is plain equality of basis matrices.
    """

    space: str
    basis: tuple
    pivots: tuple

    @classmethod
    def from_vectors(cls, space, vectors):
        rows = [v.coords if isinstance(v, CubicVector) else tuple(v) for v in vectors]
        reduced, pivots = linalg.rref(rows)
        return cls(space, tuple(reduced), tuple(pivots))

    @classmethod
    def zero(cls, space):
        return cls(space, (), ())

    @classmethod
    def full(cls, space):
        return cls.from_vectors(space, [CubicVector.basis(space, i)
                                        for i in range(SPACE_DIMS[space])])

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [CubicVector(self.space, row) for row in self.basis]

    def contains(self, v):
        if isinstance(v, CubicVector):
            if v.space != self.space:
                raise SpaceError(f"space mismatch: {self.space} vs {v.space}")
            v = v.coords
        return linalg.in_row_space(v, self.basis, self.pivots)

    def contains_subspace(self, other):
        if other.space != self.space:
            raise SpaceError(f"space mismatch: {self.space} vs {other.space}")
        return all(linalg.in_row_space(row, self.basis, self.pivots) for row in other.basis)

    def sum(self, other):
        return Subspace.from_vectors(self.space, list(self.basis) + list(other.basis))


def submodule_contains(a: Subspace, b: Subspace) -> bool:
    """True iff b is a subspace of a (same ambient space)."""
    return a.contains_subspace(b)


# ---------------------------------------------------------------------------
# Group action

def _act_word(s, word):
    return (s[word[0] - 1], s[word[1] - 1], s[word[2] - 1])


def s3_act(s, v: CubicVector) -> CubicVector:
    """Relabel variables by the permutation s and re-expand in the basis."""
    if v.space == ASSOCIATIVE:
        coords = [ZERO] * 6
        for i, c in enumerate(v.coords):
            if c == 0:
                continue
            coords[_WORD_INDEX[_act_word(s, PERMS[i])]] += c
        return CubicVector(ASSOCIATIVE, coords)
    if v.space == MAGMATIC:
        coords = [ZERO] * 12
        for i, c in enumerate(v.coords):
            if c == 0:
                continue
            comb, idx = divmod(i, 6)
            coords[6 * comb + _WORD_INDEX[_act_word(s, PERMS[idx])]] += c
        return CubicVector(MAGMATIC, coords)
    if v.space == POLARIZED:
        # The polarized action needs the sign bookkeeping of the shuffle
        # normalizer; it lives in the tree module to keep this one flat.
        from . import trees
        return trees.polarized_act(s, v)
    raise SpaceError(f"unknown space {v.space!r}")


def orbit_span(generators) -> Subspace:
    """Span of all S3-translates of the given vectors, echelonized."""
    generators = list(generators)
    if not generators:
        raise SpaceError("orbit_span needs at least one generator")
    space = generators[0].space
    translates = []
    for g in generators:
        if g.space != space:
            raise SpaceError("generators live in different spaces")
        for s in PERMS:
            translates.append(s3_act(s, g))
    return Subspace.from_vectors(space, translates)


def isotypic_multiplicities(sub: Subspace) -> MultiplicityVector:
    """Multiplicities of (trivial, standard 2-dim, sign) inside a stable subspace."""
    if sub.dim == 0:
        return MultiplicityVector(0, 0, 0)
    sixth = Fraction(1, 6)
    triv_rows = []
    sgn_rows = []
    for row in sub.basis:
        v = CubicVector(sub.space, row)
        t = CubicVector.zero(sub.space)
        g = CubicVector.zero(sub.space)
        for s, sign in zip(PERMS, SIGNS):
            moved = s3_act(s, v)
            t = t + moved
            g = g + moved.scale(sign)
        triv_rows.append(t.scale(sixth).coords)
        sgn_rows.append(g.scale(sixth).coords)
    m_triv = linalg.rank(triv_rows)
    m_sgn = linalg.rank(sgn_rows)
    rest = sub.dim - m_triv - m_sgn
    if rest % 2 != 0:
        raise SpaceError("non-even standard part: subspace is not S3-stable")
    return MultiplicityVector(m_triv, rest // 2, m_sgn)


# ---------------------------------------------------------------------------
# Monomial constructors

def word_monomial(i, j, k):
    """Associative word a_i a_j a_k."""
    return CubicVector.basis(ASSOCIATIVE, _WORD_INDEX[(i, j, k)])


def left_comb(i, j, k):
    """(a_i a_j) a_k in the magmatic space."""
    return CubicVector.basis(MAGMATIC, _WORD_INDEX[(i, j, k)])


def right_comb(i, j, k):
    """a_i (a_j a_k) in the magmatic space."""
    return CubicVector.basis(MAGMATIC, 6 + _WORD_INDEX[(i, j, k)])


def associator(i, j, k):
    """(a_i, a_j, a_k) = (a_i a_j) a_k - a_i (a_j a_k)."""
    return left_comb(i, j, k) - right_comb(i, j, k)


def _comm_right(i, j, k):
    """[a_i, a_j] a_k in the associative space."""
    return word_monomial(i, j, k) - word_monomial(j, i, k)


def _comm_left(i, j, k):
    """a_i [a_j, a_k] in the associative space."""
    return word_monomial(i, j, k) - word_monomial(i, k, j)


# ---------------------------------------------------------------------------
# Named relation families

_PARAMETRIC_FAMILIES = {"two-dim", "assoc-param", "assoc-param-dual"}


def family_relations(family, param: ProjectiveParameter | None = None):
    """Generators of a named relation family as explicit coordinate vectors.

    Families in the associative space describe quotients of the
    associative operad; families in the magmatic space are linear
    conditions on associators.  Parametric families require a
    ProjectiveParameter, all others reject one.
    """
    if family in _PARAMETRIC_FAMILIES:
        if param is None:
            raise ValueError(f"family {family!r} needs a projective parameter")
        a, b = param.alpha, param.beta
    elif param is not None:
        raise ValueError(f"family {family!r} does not take a parameter")

    if family == "assoc-trivial":
        total = CubicVector.zero(ASSOCIATIVE)
        for w in PERMS:
            total = total + word_monomial(*w)
        return [total]
    if family == "assoc-sign":
        total = CubicVector.zero(ASSOCIATIVE)
        for w, sign in zip(PERMS, SIGNS):
            total = total + word_monomial(*w).scale(sign)
        return [total]
    if family == "two-dim-left":
        return [_comm_right(1, 2, 3) + _comm_right(3, 2, 1),
                _comm_right(1, 3, 2) + _comm_right(2, 3, 1)]
    if family == "two-dim-right":
        return [_comm_left(1, 2, 3) + _comm_left(3, 2, 1),
                _comm_left(1, 3, 2) + _comm_left(2, 3, 1)]
    if family == "two-dim":
        return [(_comm_right(1, 2, 3) + _comm_right(3, 2, 1)).scale(a)
                + (_comm_left(1, 3, 2) + _comm_left(3, 1, 2)).scale(b)]
    if family == "perm-right":
        return [word_monomial(1, 2, 3) - word_monomial(1, 3, 2)]
    if family == "perm-left":
        return [word_monomial(1, 2, 3) - word_monomial(2, 1, 3)]
    if family == "biperm":
        return family_relations("perm-right") + family_relations("perm-left")
    if family == "biantiperm":
        return [word_monomial(1, 2, 3) + word_monomial(1, 3, 2),
                word_monomial(1, 2, 3) + word_monomial(2, 1, 3)]
    if family == "cyclic-sum":
        return [word_monomial(1, 2, 3) + word_monomial(2, 3, 1) + word_monomial(3, 1, 2)]
    if family == "nilpotent":
        return [word_monomial(1, 2, 3)]

    if family == "associativity":
        return [associator(1, 2, 3)]
    if family == "assoc-param":
        return [(associator(1, 2, 3) + associator(2, 1, 3)).scale(b)
                + (associator(1, 3, 2) + associator(2, 3, 1)).scale(a - b)
                - (associator(3, 1, 2) + associator(3, 2, 1)).scale(a)]
    if family == "assoc-param-dual":
        # same pencil of 2-dim modules in the parametrization used on
        # the dual side; (l:m) here matches "assoc-param" at (-m : l).
        return [(associator(1, 2, 3) + associator(2, 1, 3)).scale(a)
                - (associator(1, 3, 2) + associator(2, 3, 1)).scale(a + b)
                + (associator(3, 1, 2) + associator(3, 2, 1)).scale(b)]
    if family == "third-power":
        total = CubicVector.zero(MAGMATIC)
        for w in PERMS:
            total = total + associator(*w)
        return [total]
    if family == "lie-admissible":
        total = CubicVector.zero(MAGMATIC)
        for w, sign in zip(PERMS, SIGNS):
            total = total + associator(*w).scale(sign)
        return [total]
    if family == "prelie-right":
        return [associator(1, 2, 3) - associator(1, 3, 2)]
    if family == "prelie-left":
        return [associator(1, 2, 3) - associator(2, 1, 3)]
    if family == "flexible":
        return [associator(1, 2, 3) + associator(3, 2, 1)]
    if family == "alternative":
        return [associator(1, 2, 3) + associator(2, 1, 3),
                associator(1, 2, 3) + associator(1, 3, 2)]
    if family == "cayley-dickson":
        return [associator(1, 2, 3) + associator(2, 1, 3)
                - associator(1, 3, 2).scale(2) - associator(2, 3, 1).scale(2)
                + associator(3, 1, 2) + associator(3, 2, 1)]
    raise ValueError(f"unknown relation family {family!r}")


FAMILY_NAMES = ("assoc-trivial", "assoc-sign", "two-dim-left", "two-dim-right",
                "two-dim", "perm-right", "perm-left", "biperm", "biantiperm",
                "cyclic-sum", "nilpotent", "associativity", "assoc-param",
                "assoc-param-dual", "third-power", "lie-admissible", "prelie-right", "prelie-left",
                "flexible", "alternative", "cayley-dickson")
