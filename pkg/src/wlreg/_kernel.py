"""Compiled backtracking kernel for rooted (injective) homomorphism counts.

Host adjacency is a vector of int64 bitmasks, so hosts are limited to 63
vertices. The caller guarantees the count fits in int64.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_HOST = 63


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _candidates(p, adj, img, back_ptr, back_idx, full, used, injective):
    mask = full
    for j in range(back_ptr[p], back_ptr[p + 1]):
        mask &= adj[img[back_idx[j]]]
    if injective:
        mask &= ~used
    return mask


@njit(cache=True, nogil=True)
def count_kernel(adj, n, fixed, m, back_ptr, back_idx, injective):
    """Count extensions of the fixed images ``fixed`` (positions ``0..len(fixed)-1``)
    to all ``m`` pattern positions.

    Position ``p`` must be adjacent (in the host) to the images of the
    positions ``back_idx[back_ptr[p]:back_ptr[p+1]]``, all of which are < p.
    """
    nf = fixed.shape[0]
    if nf == m:
        return 1
    full = (np.int64(1) << n) - 1 if n < 63 else np.int64(0x7FFFFFFFFFFFFFFF)
    img = np.zeros(m, dtype=np.int64)
    cand = np.zeros(m, dtype=np.int64)
    cursor = np.zeros(m, dtype=np.int64)
    used = np.int64(0)
    for i in range(nf):
        img[i] = fixed[i]
        used |= np.int64(1) << fixed[i]

    total = 0
    p = nf
    cand[p] = _candidates(p, adj, img, back_ptr, back_idx, full, used, injective)
    if p == m - 1:
        return _popcount(cand[p])
    cursor[p] = 0
    while True:
        mask = cand[p]
        v = cursor[p]
        while v < n and not (mask >> v) & 1:
            v += 1
        if v >= n:
            # exhausted this level
            p -= 1
            if p < nf:
                break
            used &= ~(np.int64(1) << img[p])
            cursor[p] = img[p] + 1
            continue
        img[p] = v
        used |= np.int64(1) << v
        q = p + 1
        c = _candidates(q, adj, img, back_ptr, back_idx, full, used, injective)
        if q == m - 1:
            total += _popcount(c)
            used &= ~(np.int64(1) << v)
            cursor[p] = v + 1
        else:
            cand[q] = c
            cursor[q] = 0
            p = q
    return total


@njit(cache=True, nogil=True)
def count_batch_kernel(adj_flat, offsets, ns, fixed_rows, m, back_ptr, back_idx, fixed_edges, injective):
    """``count_kernel`` over many hosts; row ``h`` of ``fixed_rows`` holds host h's root images.

    Hosts whose root images violate a root-root pattern edge (or repeat,
    when injective) count 0.
    """
    H = ns.shape[0]
    nf = fixed_rows.shape[1]
    out = np.zeros(H, dtype=np.int64)
    for h in range(H):
        adj = adj_flat[offsets[h]:offsets[h + 1]]
        fixed = fixed_rows[h]
        ok = True
        for e in range(fixed_edges.shape[0]):
            if not (adj[fixed[fixed_edges[e, 0]]] >> fixed[fixed_edges[e, 1]]) & 1:
                ok = False
        if injective:
            for i in range(nf):
                for j in range(i + 1, nf):
                    if fixed[i] == fixed[j]:
                        ok = False
        if ok:
            out[h] = count_kernel(adj, ns[h], fixed, m, back_ptr, back_idx, injective)
    return out
