"""Linear algebra over the prime field F_p.

Matrices travel through the package as lists of integer rows; the row
reductions themselves run on ``galois`` field arrays.
"""
from functools import lru_cache
from typing import Optional, Sequence

import galois
import numpy as np

Matrix = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def prime_field(p: int):
    """Get the galois array class of F_p."""
    return galois.GF(p)


def _array(rows: Sequence[Sequence[int]], ncols: int, p: int):
    data = np.array([[int(x) % p for x in row] for row in rows], dtype=np.int64).reshape(len(rows), ncols)
    return prime_field(p)(data)


def _to_rows(arr) -> list[list[int]]:
    return [[int(x) for x in row] for row in arr]


def row_reduce(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Reduced row echelon form with zero rows removed."""
    if not rows or ncols == 0:
        return []
    reduced = _to_rows(_array(rows, ncols, p).row_reduce())
    return [row for row in reduced if any(row)]


def rank(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(row_reduce(rows, ncols, p))


def null_space(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : A x = 0}."""
    if ncols == 0:
        return []
    if not rows or not any(any(x % p for x in row) for row in rows):
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    return _to_rows(_array(rows, ncols, p).null_space())


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], p: int) -> Optional[list[int]]:
    """One solution of A x = b, free coordinates set to zero; None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    if ncols == 0:
        return [] if not any(x % p for x in rhs) else None
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced = row_reduce(augmented, ncols + 1, p)
    x = [0] * ncols
    for row in reduced:
        pivot = next(j for j, value in enumerate(row) if value)
        if pivot == ncols:
            return None
        x[pivot] = row[ncols]
    return x


def independent(vectors: Sequence[Sequence[int]], p: int) -> bool:
    if not vectors:
        return True
    return rank(vectors, len(vectors[0]), p) == len(vectors)


def transpose(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(col) for col in zip(*rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# Small dense helpers for the n x n unitriangular matrices of the group engine.
# These stay on plain tuples: they are hashed and multiplied millions of times.

def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(a[i], cols[j])) % p for j in range(n))
        for i in range(n)
    )


def mat_vec(a: Matrix, v: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def mat_inverse_unitriangular(a: Matrix, p: int) -> Matrix:
    """Inverse of a lower unitriangular matrix by forward substitution."""
    n = len(a)
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = 1
        for j in range(i - 1, -1, -1):
            inv[i][j] = -sum(a[i][k] * inv[k][j] for k in range(j, i)) % p
    return tuple(tuple(row) for row in inv)
