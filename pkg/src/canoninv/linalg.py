"""Small exact linear algebra helpers over a scalar field.

Matrices are lists (or tuples) of rows of field scalars.  Elimination is
plain Gauss-Jordan with exact division; the coefficient types normalize
themselves, so there is no fraction-free bookkeeping to do.
"""

from __future__ import annotations

from .scalars import Field


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(1, k)), a[i][0] * b[0][j]) for j in range(m))
        for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum((row[t] * v[t] for t in range(1, len(v))), row[0] * v[0]) for row in a)


def transpose(a):
    return tuple(zip(*a))


def identity(n, field: Field):
    one, zero = field.one, field.zero
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def dot(u, v):
    return sum((a * b for a, b in zip(u[1:], v[1:])), u[0] * v[0])


def rref(rows, field: Field):
    """Reduced row echelon form.  Returns (rows, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if not field.is_zero(m[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r] + [[field.zero] * ncols for _ in range(len(m) - r)], pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1])


def solve(a_rows, b, field: Field):
    """One solution of ``A x = b`` or None if inconsistent (A need not be square)."""
    if not a_rows:
        return None
    ncols = len(a_rows[0])
    aug = [list(r) + [bv] for r, bv in zip(a_rows, b)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return tuple(x)


def nullspace(rows, field: Field):
    """Basis of the right null space of the matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(tuple(v))
    return basis


def echelon_basis(rows, field: Field):
    """Independent rows spanning the same row space, in echelon form."""
    red, pivots = rref(rows, field)
    return [tuple(r) for r in red[: len(pivots)]]
