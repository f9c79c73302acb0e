"""Exact rank and determinant for small integer matrices.

Matrices arrive as lists of rows of Python ints.  Characteristic 0 uses
fraction-free (Bareiss) elimination; a prime characteristic reduces mod p
and runs ordinary Gaussian elimination with modular inverses.
"""

from __future__ import annotations

from typing import Sequence

Matrix = Sequence[Sequence[int]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def bareiss_rank(mat: Matrix) -> int:
    """Rank over the rationals without leaving the integers."""
    rows = [list(r) for r in mat if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        p = pr[col]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            a = row[col]
            # Sylvester identity keeps every division exact
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - a * pr[c]) // prev
            row[col] = 0
        # rows below the pivot are already scaled by p, earlier columns are zero
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def bareiss_det(mat: Matrix) -> int:
    """Determinant of a square integer matrix."""
    a = [list(r) for r in mat]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def rank_mod_p(mat: Matrix, p: int) -> int:
    rows = [[x % p for x in r] for r in mat]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pow(pr[col], p - 2, p)
        for c in range(col, ncols):
            pr[c] = pr[c] * inv % p
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            a = row[col]
            if a:
                for c in range(col, ncols):
                    row[c] = (row[c] - a * pr[c]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank(mat: Matrix, characteristic: int = 0) -> int:
    if not mat or not len(mat[0]):
        return 0
    if characteristic == 0:
        return bareiss_rank(mat)
    return rank_mod_p(mat, characteristic)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of integer points."""
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(pt, base)] for pt in points[1:]]
    return bareiss_rank(diffs) if diffs else 0
