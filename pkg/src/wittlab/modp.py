"""Dense linear algebra over the prime field F_p, on numpy integer arrays.

All matrices are 2-d int64 arrays with entries reduced mod p; rows are
vectors.  Gaussian elimination is exact (modular inverses via Fermat).
"""

from __future__ import annotations

import numpy as np


def _inv(a, p):
    return pow(int(a) % p, p - 2, p)


def rref(mat, p):
    """Reduced row-echelon form; returns (R, pivot_columns)."""
    R = np.array(mat, dtype=np.int64) % p
    if R.ndim != 2:
        R = R.reshape(1, -1)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = None
        for i in range(r, rows):
            if R[i, c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * _inv(R[r, c], p)) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(mat, p):
    return len(rref(mat, p)[1])


def row_space_basis(mat, p):
    """Nonzero rows of the reduced row-echelon form."""
    R, pivots = rref(mat, p)
    return R[: len(pivots)].copy()


def nullspace(mat, p):
    """Basis (as rows) of the right kernel {x : mat @ x = 0 mod p}."""
    A = np.array(mat, dtype=np.int64) % p
    rows, cols = A.shape if A.ndim == 2 else (1, A.shape[0])
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(R[ri, fc])) % p
    return basis


def solve(A, b, p):
    """One solution x of A x = b mod p, or None."""
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, pivots = rref(aug, p)
    cols = A.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for ri, pc in enumerate(pivots):
        x[pc] = R[ri, cols]
    return x


def in_row_space(basis, v, p):
    """Whether v lies in the span of the given echelon basis rows."""
    if len(basis) == 0:
        return not np.any(np.array(v, dtype=np.int64) % p)
    stacked = np.vstack([basis, np.array(v, dtype=np.int64) % p])
    return rank(stacked, p) == rank(basis, p)
