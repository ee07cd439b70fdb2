"""Small exact linear algebra over the integers and rationals."""

from __future__ import annotations

from fractions import Fraction


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals, by fraction-free integer elimination."""
    rows = [list(r) for r in rows]
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, m):
            f = rows[r][col]
            if f:
                rows[r] = [a * pivot - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def rational_inverse(matrix: list[list[int]]) -> list[list[Fraction]]:
    """Inverse of a square integer matrix, exact; raises on singular input."""
    n = len(matrix)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pivot = aug[col][col]
        aug[col] = [v / pivot for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def integer_inverse(matrix: list[list[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix, as integers."""
    inv = rational_inverse(matrix)
    out = []
    for row in inv:
        ints = []
        for v in row:
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            ints.append(int(v))
        out.append(ints)
    return out


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows = len(a)
    inner = len(b)
    cols = len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def row_times_mat(v: list[int], m: list[list[int]]) -> list[int]:
    n = len(m[0])
    return [sum(v[k] * m[k][j] for k in range(len(v))) for j in range(n)]
