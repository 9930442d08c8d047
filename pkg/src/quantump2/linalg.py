"""Dense exact linear algebra on lists of Scalars."""
from __future__ import annotations

from .errors import DimensionMismatch, SingularMatrix


def identity(field, n):
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def diag(field, values):
    n = len(values)
    return [[field(values[i]) if i == j else field.zero() for j in range(n)]
            for i in range(n)]


def as_matrix(field, rows):
    return [[field(v) for v in row] for row in rows]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    if len(a[0]) != len(b):
        raise DimensionMismatch("matmul: incompatible shapes")
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(m, v):
    out = []
    for row in m:
        acc = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            acc = acc + x * y
        out.append(acc)
    return out


def rref(rows):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols=None, field=None):
    """Basis of {v : rows . v = 0}."""
    if not rows:
        if ncols is None or field is None:
            raise ValueError("empty matrix needs ncols and field")
        return identity(field, ncols)
    ncols = len(rows[0])
    field = rows[0][0].field
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution x of a.x = b, or None when inconsistent."""
    field = a[0][0].field
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [field.zero()] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x


def inverse(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("inverse of a non-square matrix")
    field = m[0][0].field
    aug = [list(row) + r for row, r in zip(m, identity(field, n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def det(m):
    """Determinant over a field by elimination."""
    n = len(m)
    a = [list(r) for r in m]
    field = a[0][0].field
    result = field.one()
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c]), None)
        if pr is None:
            return field.zero()
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            result = -result
        result = result * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def det_laplace(m):
    """Determinant by cofactor expansion; works over any commutative ring."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_laplace(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def is_invertible(m):
    try:
        return bool(det(m))
    except Exception:
        return False


def cross(u, v):
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]
