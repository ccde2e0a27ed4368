"""Dense exact linear algebra over the rationals.

Matrices are plain lists of lists of ``Fraction``. Everything here is
deterministic: pivots are always chosen in column order, so reduced row
echelon forms (and therefore all downstream presentations) are reproducible.
Multiplication skips zero entries, which matters for the very sparse lifted
operators this package produces.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


def zeros(rows, cols):
    return [[F0] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = F1
    return m


def to_frac_matrix(a):
    """Copy a nested sequence into a Fraction matrix, validating shape."""
    rows = [[Fraction(x) for x in row] for row in a]
    if rows:
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise ValueError("ragged matrix")
    return rows


def mat_mul(a, b):
    n, k = len(a), len(b)
    if k == 0 or len(a[0]) != k:
        raise ValueError("dimension mismatch")
    m = len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai, oi = a[i], out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    y = bt[j]
                    if y:
                        oi[j] += x * y
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def transpose(a):
    return [list(col) for col in zip(*a)]


def kron(a, b):
    """Kronecker product; row/col blocks follow the left factor."""
    ra, ca = len(a), len(a[0])
    rb, cb = len(b), len(b[0])
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if not x:
                continue
            for p in range(rb):
                bp = b[p]
                op = out[i * rb + p]
                for q in range(cb):
                    if bp[q]:
                        op[j * cb + q] = x * bp[q]
    return out


def mat_inv(a):
    """Gauss-Jordan inverse; raises ValueError on a singular input."""
    n = len(a)
    work = [list(row) + ident_row for row, ident_row in zip(a, identity(n))]
    col = 0
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv_p = F1 / work[col][col]
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def rref(rows):
    """Reduced row echelon form.

    Returns ``(reduced, pivots)`` where ``reduced`` holds only the nonzero
    rows and ``pivots`` their pivot column indices, in increasing order.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv_p = F1 / work[row][col]
        work[row] = [x * inv_p for x in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    return work[:row], pivots


def rank(rows):
    return len(rref(rows)[0])


def solve_affine(a, b):
    """Solve ``A w = b`` exactly.

    Returns ``(particular, nullspace_basis)`` or ``None`` when inconsistent.
    ``nullspace_basis`` spans the homogeneous solutions; free variables are
    the non-pivot columns in increasing order.
    """
    if not a:
        return [], []
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None  # row 0 = nonzero
    particular = [F0] * ncols
    for r, p in zip(red, pivots):
        particular[p] = r[ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F0] * ncols
        v[f] = F1
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(v)
    return particular, basis


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(a, c):
    return [c * x for x in a]


def is_zero_vec(v):
    return all(not x for x in v)
