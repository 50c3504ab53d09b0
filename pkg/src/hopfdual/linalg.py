"""Dense Gaussian elimination over a scalar field (exact or approximate).

Matrices are lists of row lists.  The exact backend pivots on the first nonzero
entry; the approximate backend uses partial pivoting and treats ``|x| <= eps``
as zero.
"""

from __future__ import annotations

from .scalars import Field, inv


class SingularMatrixError(ArithmeticError):
    pass


def rref(field: Field, rows: list[list], ncols: int | None = None):
    """Reduced row echelon form.  Returns ``(matrix, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        if field.exact:
            p = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        else:
            p = max(range(r, len(m)), key=lambda i: abs(m[i][c]))
            if field.is_zero(m[p][c]):
                p = None
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pinv = inv(field, m[r][c])
        row = [x * pinv for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if not field.is_zero(f):
                    mi = m[i]
                    m[i] = [a - f * b if not field.is_zero(b) else a for a, b in zip(mi, row)]
                    if not field.exact:
                        m[i][c] = field.zero
        pivots.append(c)
        r += 1
    return m, pivots


def rank(field: Field, rows: list[list]) -> int:
    if not rows:
        return 0
    return len(rref(field, rows)[1])


def nullspace(field: Field, rows: list[list], ncols: int) -> list[list]:
    """Basis of ``{v : rows @ v = 0}``, one free variable set to 1 per vector."""
    if not rows:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fcol]
        basis.append(v)
    return basis


def solve(field: Field, rows: list[list], rhs: list) -> list:
    """One solution of ``rows @ x = rhs`` (free variables set to zero)."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(field, aug, ncols + 1)
    if ncols in pivots:
        raise SingularMatrixError("inconsistent linear system")
    x = [field.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def inverse(field: Field, a: list[list]) -> list[list]:
    n = len(a)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(a)]
    m, pivots = rref(field, aug, n)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is not invertible")
    return [row[n:] for row in m]


def matmul(field: Field, a: list[list], b: list[list]) -> list[list]:
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([_dot(field, row, col) for col in bt])
    return out


def _dot(field, u, v):
    acc = field.zero
    for x, y in zip(u, v):
        if not field.is_zero(x) and not field.is_zero(y):
            acc = acc + x * y
    return acc


def matvec(field: Field, a: list[list], v: list) -> list:
    return [_dot(field, row, v) for row in a]


def transpose(a: list[list]) -> list[list]:
    return [list(r) for r in zip(*a)]


def identity(field: Field, n: int) -> list[list]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_equal(field: Field, a: list[list], b: list[list]) -> bool:
    """Entrywise equality, up to the field's tolerance."""
    return len(a) == len(b) and all(
        len(r) == len(s) and all(field.eq(x, y) for x, y in zip(r, s)) for r, s in zip(a, b))
