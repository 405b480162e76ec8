"""Dense Gaussian elimination over a prime field GF(p)."""
from __future__ import annotations

import numpy as np


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p).

    Entries are reduced mod p first; p must satisfy p*p < 2**63.
    """
    a = np.array(matrix, dtype=np.int64) % p
    if a.ndim != 2 or a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1:, col])[0] + rank + 1
        if below.size:
            factors = a[below, col][:, None]
            a[below] = (a[below] - factors * a[rank]) % p
        rank += 1
    return rank
