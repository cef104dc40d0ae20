"""Small exact linear algebra: rank over Q and over prime fields.

The prime-field path is vectorized with numpy; products of two residues
must stay below 2**63, which every modulus allowed here satisfies.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import numpy as np


def qq_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix with exact rational entries."""
    mat: List[List[Fraction]] = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def modp_rank(matrix: np.ndarray, p: int) -> int:
    """Row-echelon rank over F_p (in-place on a copy)."""
    if p * p >= 2**63:
        raise ValueError("modulus too large for int64 elimination")
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        below = a[r + 1 :, c]
        hits = np.nonzero(below)[0]
        if hits.size:
            a[r + 1 + hits] = (a[r + 1 + hits] - np.outer(below[hits], a[r])) % p
        r += 1
    return r
