"""
Dense exact linear algebra over a :class:`~modtypes.fields.Field`.

Matrices are lists of rows. Vectors are row vectors (lists); modules act on
the right, ``v -> v @ M``.
"""

from __future__ import annotations

from .fields import Field

__all__ = [
    "zeros",
    "eye",
    "matmul",
    "vecmat",
    "mat_add",
    "mat_scale",
    "mat_eq",
    "rref",
    "rank",
    "nullspace",
    "left_nullspace",
    "row_space_basis",
    "same_row_space",
    "in_row_space",
    "solve_left",
    "Echelon",
]


def zeros(F: Field, n: int, m: int | None = None):
    m = n if m is None else m
    return [[F.zero for _ in range(m)] for _ in range(n)]


def eye(F: Field, n: int):
    M = zeros(F, n)
    for i in range(n):
        M[i][i] = F.one
    return M


def matmul(A, B):
    if not A:
        return []
    zero = _zero_like(A, B)
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [zero] * m
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def _zero_like(A, B):
    for M in (A, B):
        for row in M:
            for x in row:
                return x - x
    return 0


def vecmat(v, M):
    return matmul([v], M)[0]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_eq(A, B) -> bool:
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def rref(M):
    """Reduced row echelon form and pivot columns. Does not modify M."""
    R = [list(row) for row in M]
    if not R:
        return R, []
    n, m = len(R), len(R[0])
    pivots = []
    row = 0
    for col in range(m):
        piv = next((i for i in range(row, n) if R[i][col]), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        inv = 1 / R[row][col]
        R[row] = [x * inv for x in R[row]]
        for i in range(n):
            if i != row and R[i][col]:
                f = R[i][col]
                R[i] = [a - f * b for a, b in zip(R[i], R[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return R, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def nullspace(M, F: Field):
    """Basis of {x : M x = 0} (column vectors returned as lists)."""
    if not M:
        return []
    R, pivots = rref(M)
    m = len(M[0])
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        x = [F.zero] * m
        x[fc] = F.one
        for i, pc in enumerate(pivots):
            x[pc] = -R[i][fc]
        basis.append(x)
    return basis


def left_nullspace(M, F: Field):
    """Basis of {v : v M = 0}."""
    if not M:
        return []
    T = [list(col) for col in zip(*M)]
    return nullspace(T, F)


def row_space_basis(rows):
    R, pivots = rref(rows)
    return R[: len(pivots)]


def same_row_space(A, B) -> bool:
    return mat_eq(row_space_basis(A), row_space_basis(B))


def in_row_space(v, rows) -> bool:
    if not rows:
        return not any(v)
    return rank(list(rows) + [v]) == rank(rows)


def solve_left(M, b, F: Field):
    """Some x with ``x M = b``, or None."""
    n = len(M)
    if n == 0:
        return None if any(b) else []
    # augment transpose: M^T x^T = b^T
    T = [list(col) + [bi] for col, bi in zip(zip(*M), b)]
    R, pivots = rref(T)
    if n in pivots:
        return None
    x = [F.zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


class Echelon:
    """Incrementally maintained echelon basis of a row space."""

    def __init__(self):
        self.rows: dict[int, list] = {}  # pivot column -> row with 1 at pivot

    def reduce(self, v):
        v = list(v)
        for col, row in self.rows.items():
            c = v[col]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, v) -> list | None:
        """Insert v; return its reduced form if it was new, else None."""
        v = self.reduce(v)
        col = next((i for i, x in enumerate(v) if x), None)
        if col is None:
            return None
        inv = 1 / v[col]
        v = [x * inv for x in v]
        for c, row in self.rows.items():
            f = row[col]
            if f:
                self.rows[c] = [a - f * b for a, b in zip(row, v)]
        self.rows[col] = v
        return v

    def __len__(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[c] for c in sorted(self.rows)]
