"""Koszul duality for quadratic presentations with one binary generator.

The inner product on the 12-dimensional cubic space is diagonal in the
magmatic comb basis: a left comb pairs with itself to the sign of its
permutation, a right comb to minus that sign, and all other pairs
vanish.  The dual presentation's relations are the annihilator of the
relations under this pairing.  The sign convention is pinned by two
checks the test suite enforces: the associativity module annihilates
itself, and the dual of the full parametric quotient family lands on
the associator-dependency family with the transposed-negated parameter.

Polarization is the change of binary generator basis to the symmetric
product and antisymmetric bracket; the 12 x 12 change-of-basis matrix
is computed from the generator substitution, never hand-written.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg, s3, trees

ZERO = Fraction(0)
ONE = Fraction(1)


@lru_cache(maxsize=None)
def pairing_diagonal():
    """Self-pairings of the 12 magmatic comb monomials."""
    diag = []
    for i in range(12):
        comb, idx = divmod(i, 6)
        sign = s3.SIGNS[idx]
        diag.append(Fraction(sign if comb == 0 else -sign))
    return tuple(diag)


def pairing_matrix():
    """The full 12 x 12 pairing matrix (diagonal in the comb basis)."""
    diag = pairing_diagonal()
    return [tuple(diag[i] if i == j else ZERO for j in range(12)) for i in range(12)]


def pair(u: s3.CubicVector, v: s3.CubicVector) -> Fraction:
    if u.space != s3.MAGMATIC or v.space != s3.MAGMATIC:
        raise s3.SpaceError("the pairing lives on the magmatic cubic space")
    return sum((d * a * b for d, a, b in zip(pairing_diagonal(), u.coords, v.coords)),
               ZERO)


@lru_cache(maxsize=None)
def polarization_matrix():
    """Columns: magmatic coordinates of the polarized basis monomials.

    Expansion of each polarized vertex through the substitution
    "product = sum of both orders, bracket = difference".
    """
    cols = []
    for mono in trees.polarized_basis():
        coords = [ZERO] * 12
        for sign, node in _expand(mono.node):
            coords[_comb_index(node)] += sign
        cols.append(coords)
    return tuple(tuple(cols[j][i] for j in range(12)) for i in range(12))


def _expand(node):
    if isinstance(node, int):
        return [(ONE, node)]
    left = _expand(node[1])
    right = _expand(node[2])
    out = []
    for sl, ln in left:
        for sr, rn in right:
            s = sl * sr
            out.append((s, ("*", ln, rn)))
            out.append((s if node[0] == "d" else -s, ("*", rn, ln)))
    return out


def _comb_index(node):
    _, left, right = node
    if isinstance(left, tuple):
        word = (left[1], left[2], right)
        comb = 0
    else:
        word = (left, right[1], right[2])
        comb = 1
    return 6 * comb + s3.PERMS.index(word)


@lru_cache(maxsize=None)
def _polarization_inverse():
    return tuple(linalg.invert([list(r) for r in polarization_matrix()]))


def to_magmatic_coords(v: s3.CubicVector) -> s3.CubicVector:
    """Expand polarized coordinates into the magmatic comb basis."""
    if v.space != s3.POLARIZED:
        raise s3.SpaceError("expected polarized coordinates")
    return s3.CubicVector(s3.MAGMATIC, linalg.mat_vec(polarization_matrix(), v.coords))


def to_polarized_coords(v: s3.CubicVector) -> s3.CubicVector:
    if v.space != s3.MAGMATIC:
        raise s3.SpaceError("expected magmatic coordinates")
    return s3.CubicVector(s3.POLARIZED, linalg.mat_vec(_polarization_inverse(), v.coords))


@dataclass(frozen=True)
class QuadraticPresentation:
    """One binary generator plus an S3-stable space of cubic relations.

    basis_mode "magmatic" stores relations in the comb basis of the
    free cubic space; "polarized" stores them over the polarized
    shuffle monomial basis.
    """

    basis_mode: str
    relations: s3.Subspace

    def __post_init__(self):
        expected = {"magmatic": s3.MAGMATIC, "polarized": s3.POLARIZED}.get(self.basis_mode)
        if expected is None:
            raise s3.SpaceError(f"unknown basis mode {self.basis_mode!r}")
        if self.relations.space != expected:
            raise s3.SpaceError(
                f"relations live in {self.relations.space}, expected {expected}")
        if self.relations.dim and not _is_stable(self.relations):
            raise s3.SpaceError("relation space is not S3-stable")

    @property
    def dim(self):
        return self.relations.dim

    def weight_graded(self):
        """True iff the polarized relation space splits by bracket count."""
        pol = self if self.basis_mode == "polarized" else polarize(self)
        sub = pol.relations
        for row in sub.basis:
            elem = trees.vector_to_element(s3.CubicVector(s3.POLARIZED, row))
            parts = {}
            for mono, c in elem.terms.items():
                parts.setdefault(mono.weight(trees.POLARIZED_SIG), []).append((mono, c))
            for terms in parts.values():
                part = trees.element_to_vector(trees.TreeElement(dict(terms), 3),
                                               s3.POLARIZED)
                if not sub.contains(part):
                    return False
        return True


def _is_stable(sub: s3.Subspace) -> bool:
    for row in sub.basis:
        v = s3.CubicVector(sub.space, row)
        for perm in s3.PERMS:
            if not sub.contains(s3.s3_act(perm, v)):
                return False
    return True


def presentation_from_families(basis_mode, families, param=None, lift_associative=True):
    """Relations from named families (associative ones lifted by left combs)."""
    vectors = []
    for fam in families:
        fam_param = param if fam in ("two-dim", "assoc-param") else None
        for v in s3.family_relations(fam, fam_param):
            if v.space == s3.ASSOCIATIVE:
                if not lift_associative:
                    raise s3.SpaceError("associative relations need lifting")
                v = s3.CubicVector(s3.MAGMATIC, tuple(v.coords) + (ZERO,) * 6)
                vectors.append(v)
            else:
                vectors.append(v)
    span = s3.orbit_span(vectors) if vectors else s3.Subspace.zero(s3.MAGMATIC)
    pres = QuadraticPresentation("magmatic", span)
    if basis_mode == "polarized":
        return polarize(pres)
    return pres


def koszul_dual(pres: QuadraticPresentation) -> QuadraticPresentation:
    """Dual presentation: relations = annihilator under the pairing."""
    if pres.basis_mode == "polarized":
        pres = depolarize(pres)
    diag = pairing_diagonal()
    rows = [[d * c for d, c in zip(diag, row)] for row in pres.relations.basis]
    basis = linalg.nullspace(rows, ncols=12)
    dual = s3.Subspace.from_vectors(s3.MAGMATIC,
                                    [s3.CubicVector(s3.MAGMATIC, b) for b in basis])
    return QuadraticPresentation("magmatic", dual)


def dual_of_dual_check(pres: QuadraticPresentation) -> bool:
    base = depolarize(pres) if pres.basis_mode == "polarized" else pres
    return koszul_dual(koszul_dual(base)).relations == base.relations


def polarize(pres: QuadraticPresentation) -> QuadraticPresentation:
    if pres.basis_mode != "magmatic":
        raise s3.SpaceError("polarize expects a magmatic presentation")
    inv = _polarization_inverse()
    vectors = [s3.CubicVector(s3.POLARIZED, linalg.mat_vec(inv, row))
               for row in pres.relations.basis]
    sub = s3.Subspace.from_vectors(s3.POLARIZED, vectors) if vectors \
        else s3.Subspace.zero(s3.POLARIZED)
    return QuadraticPresentation("polarized", sub)


def depolarize(pres: QuadraticPresentation) -> QuadraticPresentation:
    if pres.basis_mode != "polarized":
        raise s3.SpaceError("depolarize expects a polarized presentation")
    mat = polarization_matrix()
    vectors = [s3.CubicVector(s3.MAGMATIC, linalg.mat_vec(mat, row))
               for row in pres.relations.basis]
    sub = s3.Subspace.from_vectors(s3.MAGMATIC, vectors) if vectors \
        else s3.Subspace.zero(s3.MAGMATIC)
    return QuadraticPresentation("magmatic", sub)


@lru_cache(maxsize=None)
def associativity_subspace():
    return s3.orbit_span(s3.family_relations("associativity"))


def present_as_associative_quotient(pres: QuadraticPresentation):
    """Image of the relations in the associative cubic quotient.

    Returns the image subspace of associative-6 when the relations
    contain the full associativity module, else None.
    """
    base = depolarize(pres) if pres.basis_mode == "polarized" else pres
    if not base.relations.contains_subspace(associativity_subspace()):
        return None
    imgs = []
    for row in base.relations.basis:
        imgs.append(s3.CubicVector(
            s3.ASSOCIATIVE, tuple(row[i] + row[6 + i] for i in range(6))))
    return s3.Subspace.from_vectors(s3.ASSOCIATIVE, imgs)
