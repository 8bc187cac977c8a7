"""Exact vectorized linear algebra over GF(p^e) integer encodings.

Matrices are 2-D numpy int16 arrays of field encodings; every function takes
the Field first.  Reduction is plain Gauss-Jordan with the deterministic
pivot rule: first nonzero entry scanning top to bottom in the leftmost
unfinished column.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .field import Field


def as_matrix(rows, n: int | None = None) -> np.ndarray:
    M = np.asarray(rows, dtype=np.int16)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size else M.reshape(0, 0 if n is None else n)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got ndim {M.ndim}")
    if n is not None and M.shape[1] != n and M.size:
        raise DimensionMismatch(f"expected {n} columns, got {M.shape[1]}")
    if M.size == 0 and n is not None:
        M = M.reshape(-1, n) if n else M.reshape(0, 0)
    return M


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int16)


def mat_mul(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int16)
    B = np.asarray(B, dtype=np.int16)
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int16)
    prods = F.mul(A[:, :, None], B[None, :, :])
    return np.asarray(F.sum(prods, axis=1), dtype=np.int16).reshape(A.shape[0], B.shape[1])


def mat_vec(F: Field, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return mat_mul(F, A, np.asarray(v, dtype=np.int16).reshape(-1, 1))[:, 0]


def rref(F: Field, M: np.ndarray):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = np.array(M, dtype=np.int16, copy=True)
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        pv = int(R[r, c])
        if pv != 1:
            R[r] = F.mul(F.inv(pv), R[r])
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            R[others] = F.sub(R[others], F.mul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: Field, M: np.ndarray) -> int:
    return len(rref(F, M)[1])


def row_space(F: Field, M: np.ndarray) -> np.ndarray:
    """Canonical (RREF, zero rows dropped) basis of the row space."""
    R, piv = rref(F, M)
    return R[: len(piv)]


def nullspace(F: Field, M: np.ndarray) -> np.ndarray:
    """Basis of the right kernel {v : M v^T = 0}, one row per free column."""
    M = np.asarray(M, dtype=np.int16)
    n = M.shape[1]
    R, piv = rref(F, M)
    r = len(piv)
    free = [c for c in range(n) if c not in piv]
    B = np.zeros((len(free), n), dtype=np.int16)
    if free:
        B[np.arange(len(free)), free] = 1
        if piv:
            B[:, piv] = F.neg(R[:r][:, free].T)
    return B


def residual(F: Field, R: np.ndarray, pivots, V: np.ndarray) -> np.ndarray:
    """Reduce rows of V against an RREF basis; zero rows lie in the span."""
    V = np.array(V, dtype=np.int16, copy=True)
    if V.ndim == 1:
        V = V.reshape(1, -1)
    for i, c in enumerate(pivots):
        f = V[:, c]
        if np.any(f):
            V = F.sub(V, F.mul(f[:, None], R[i][None, :]))
    return V


def in_row_space(F: Field, R: np.ndarray, pivots, v) -> bool:
    return not np.any(residual(F, R, pivots, np.asarray(v, dtype=np.int16)))


def stack(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.vstack([np.asarray(A, dtype=np.int16), np.asarray(B, dtype=np.int16)])


def sum_dim(F: Field, A: np.ndarray, B: np.ndarray) -> int:
    return rank(F, stack(A, B))


def intersect_dim(F: Field, A: np.ndarray, B: np.ndarray) -> int:
    return rank(F, A) + rank(F, B) - sum_dim(F, A, B)


def intersection(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Canonical basis of rowspace(A) intersect rowspace(B)."""
    dual_sum = stack(nullspace(F, A), nullspace(F, B))
    return row_space(F, nullspace(F, dual_sum))


def solve_right(F: Field, A: np.ndarray, b) -> np.ndarray | None:
    """One solution x of A x = b (columns act), or None if inconsistent."""
    A = np.asarray(A, dtype=np.int16)
    b = np.asarray(b, dtype=np.int16).reshape(-1)
    if A.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"shape mismatch {A.shape} vs {b.shape}")
    n = A.shape[1]
    R, piv = rref(F, np.hstack([A, b.reshape(-1, 1)]))
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int16)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


def solve_left(F: Field, A: np.ndarray, b) -> np.ndarray | None:
    """One solution x of x A = b (rows act), or None if inconsistent."""
    return solve_right(F, np.asarray(A, dtype=np.int16).T, b)
