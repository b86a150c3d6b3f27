"""Small exact linear algebra over Fraction: row reduction, rank, nullspace.

Everything works on lists of equal-length coefficient rows.  Matrices in
this package are tiny (at most 12 columns for relation spaces, a few
thousand rows for brute-force ideal spans), so a dense textbook RREF is
the right tool.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(rows):
    """Reduced row echelon form with leading-one pivots.

    Returns (reduced_rows, pivot_columns); zero rows are dropped, so the
    result is a canonical basis of the row space.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    out = []
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, len(work)):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = ONE / work[row][col]
        work[row] = [c * inv for c in work[row]]
        for i in range(len(work)):
            if i != row and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[row])]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    out = [tuple(r) for r in work[:row]]
    return out, pivots


def rank(rows):
    return len(rref(rows)[0])


def reduce_vector(vec, reduced_rows, pivots):
    """Reduce vec modulo a row space given in RREF; returns the remainder."""
    v = list(vec)
    for r, p in zip(reduced_rows, pivots):
        if v[p] != 0:
            factor = v[p]
            v = [a - factor * b for a, b in zip(v, r)]
    return v


def in_row_space(vec, reduced_rows, pivots):
    return all(c == 0 for c in reduce_vector(vec, reduced_rows, pivots))


def nullspace(rows, ncols=None):
    """Basis of the right kernel {x : M x = 0}, in RREF row convention."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        basis = []
        for i in range(ncols):
            v = [ZERO] * ncols
            v[i] = ONE
            basis.append(tuple(v))
        return basis
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(reduced, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    reduced_basis, _ = rref(basis)
    return reduced_basis


def invert(matrix):
    """Inverse of a square matrix given as a list of rows."""
    n = len(matrix)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
           for i, row in enumerate(matrix)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [tuple(row[n:]) for row in reduced]


def mat_vec(matrix, vec):
    return tuple(sum((a * b for a, b in zip(row, vec)), ZERO) for row in matrix)
