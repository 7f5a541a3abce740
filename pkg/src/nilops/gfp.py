"""Dense linear algebra over a small prime field F_p.

Matrices are integer numpy arrays with entries in ``range(p)``.  The
batched routines take a stack of matrices of shape ``(N, rows, cols)``
and reduce all of them at once.
"""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def check_field(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def _inverses(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    return inv


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def matpow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[-1], dtype=np.int64)
    for _ in range(k):
        out = (out @ a) % p
    return out


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    r = np.array(m, dtype=np.int64) % p
    rows, cols = r.shape
    inv = _inverses(p)
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        found = row + nz[0]
        if found != row:
            r[[row, found]] = r[[found, row]]
        r[row] = (r[row] * inv[r[row, col]]) % p
        for other in range(rows):
            if other != row and r[other, col]:
                r[other] = (r[other] - r[other, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{v : m v = 0}`` as the rows of a ``(k, cols)`` array."""
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for n, f in enumerate(free):
        basis[n, f] = 1
        for i, pc in enumerate(pivots):
            basis[n, pc] = (-r[i, f]) % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Some ``x`` with ``a x = b``; raises if the system is inconsistent."""
    rows, cols = a.shape
    aug = np.concatenate([a, b.reshape(rows, -1)], axis=1)
    r, pivots = rref(aug, p)
    if any(pc >= cols for pc in pivots):
        raise ValueError("inconsistent linear system")
    x = np.zeros((cols, aug.shape[1] - cols), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x.reshape(cols) if b.ndim == 1 else x


def batch_rank(ms: np.ndarray, p: int) -> np.ndarray:
    """Rank of every matrix in a stack of shape ``(N, rows, cols)``."""
    a = np.array(ms, dtype=np.int64) % p
    n, rows, cols = a.shape
    ranks = np.zeros(n, dtype=np.int64)
    if rows == 0 or cols == 0:
        return ranks
    inv = _inverses(p)
    row_ids = np.arange(rows)
    for col in range(cols):
        cand = (a[:, :, col] != 0) & (row_ids[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        piv = cand[idx].argmax(axis=1)
        top = ranks[idx]
        # move each pivot row up to position `rank`
        tmp = a[idx, top].copy()
        a[idx, top] = a[idx, piv]
        a[idx, piv] = tmp
        prow = (a[idx, top] * inv[a[idx, top, col]][:, None]) % p
        a[idx, top] = prow
        factors = a[idx, :, col].copy()
        factors[row_ids[None, :] <= top[:, None]] = 0
        a[idx] = (a[idx] - factors[:, :, None] * prow[:, None, :]) % p
        ranks[idx] += 1
    return ranks
