"""Pure numpy kernels: suffix array, LCP array, string MEM scan.

Fallback implementations with the same contracts as the compiled module.
"""
from __future__ import annotations

import numpy as np


def suffix_array(text) -> np.ndarray:
    """Suffix array of an integer sequence by prefix doubling.

    Suffix comparison treats the end of the text as smaller than every
    symbol, so a proper prefix sorts before its extensions.
    """
    arr = np.asarray(text, dtype=np.int64)
    n = len(arr)
    if n == 0:
        return np.empty(0, dtype=np.int32)
    if n == 1:
        return np.zeros(1, dtype=np.int32)
    # dense initial ranks
    order = np.argsort(arr, kind="stable")
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.cumsum(np.concatenate(([0], np.diff(arr[order]) > 0)))
    k = 1
    while True:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        order = np.lexsort((key2, rank))
        new_rank = np.empty(n, dtype=np.int64)
        changed = np.ones(n, dtype=bool)
        changed[1:] = (rank[order[1:]] != rank[order[:-1]]) | (
            key2[order[1:]] != key2[order[:-1]]
        )
        new_rank[order] = np.cumsum(changed) - 1
        rank = new_rank
        if rank[order[-1]] == n - 1:
            return order.astype(np.int32)
        k *= 2


def lcp_array(text, sa) -> np.ndarray:
    """LCP array: lcp[i] = longest common prefix of suffixes sa[i-1], sa[i]."""
    arr = np.asarray(text, dtype=np.int64)
    sa = np.asarray(sa, dtype=np.int64)
    n = len(arr)
    lcp = np.zeros(n, dtype=np.int32)
    if n == 0:
        return lcp
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.arange(n)
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and arr[i + h] == arr[j + h]:
            h += 1
        lcp[r] = h
        if h > 0:
            h -= 1
    return lcp


def string_mems(a, b, kappa: int) -> np.ndarray:
    """Maximal exact matches between integer sequences a and b.

    Returns an array of rows (start_a, start_b, length), 0-based, sorted,
    containing every match of length >= kappa that cannot be extended on
    either side (string boundaries count as non-extendable).
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n, m = len(a), len(b)
    rows = []
    if n == 0 or m == 0:
        return np.empty((0, 3), dtype=np.int64)
    for d in range(-(m - 1), n):
        i0 = max(0, d)
        j0 = i0 - d
        span = min(n - i0, m - j0)
        eq = (a[i0 : i0 + span] == b[j0 : j0 + span]).astype(np.int8)
        edges = np.flatnonzero(np.diff(np.concatenate(([0], eq, [0]))))
        starts = edges[0::2]
        ends = edges[1::2]
        for s, e in zip(starts, ends):
            if e - s >= kappa:
                rows.append((i0 + s, j0 + s, e - s))
    if not rows:
        return np.empty((0, 3), dtype=np.int64)
    out = np.array(rows, dtype=np.int64)
    return out[np.lexsort((out[:, 2], out[:, 1], out[:, 0]))]
