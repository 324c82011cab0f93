"""Dense linear algebra over F_p on int64 arrays."""
import numpy as np


def rref(M, p):
    """Row echelon form mod p; returns (R, pivot columns)."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        f = R[:, c].copy()
        f[r] = 0
        nzr = np.flatnonzero(f)
        if nzr.size:
            R[nzr] = (R[nzr] - np.outer(f[nzr], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod_p(M, p):
    return len(rref(M, p)[1])


def solve_mod_p(A, b, p):
    """Some x with A x = b mod p, or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    R, piv = rref(np.hstack([A, b]), p)
    n = A.shape[1]
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


def in_span(cols, v, p):
    """Coefficients w with cols @ w = v mod p, or None."""
    return solve_mod_p(cols, v, p)
