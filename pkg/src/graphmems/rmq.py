"""Sparse-table range minimum queries and threshold listing."""
from __future__ import annotations

import numpy as np

INF = np.iinfo(np.int64).max


class RangeMinQuery:
    """O(n log n)-space sparse table answering argmin queries on D[1..n].

    Ties break toward the smallest index.  ``calls`` counts rmq
    invocations so callers can assert output-sensitivity bounds.
    """

    def __init__(self, values):
        self.values = np.asarray(values, dtype=np.int64)
        n = len(self.values)
        self.calls = 0
        levels = max(n.bit_length(), 1)
        self._table = []
        idx = np.arange(n, dtype=np.int64)
        self._table.append(idx)
        span = 1
        for _ in range(1, levels):
            if 2 * span > n:
                break
            prev = self._table[-1]
            left = prev[: n - 2 * span + 1]
            right = prev[span : n - span + 1]
            take_right = self.values[right] < self.values[left]
            self._table.append(np.where(take_right, right, left))
            span *= 2

    def __len__(self) -> int:
        return len(self.values)

    def rmq(self, i: int, j: int) -> int:
        """Index of the minimum of D[i..j] (1-based, inclusive)."""
        if not 1 <= i <= j <= len(self.values):
            raise IndexError(f"range [{i}..{j}] invalid for n={len(self.values)}")
        self.calls += 1
        lo, hi = i - 1, j - 1
        k = (hi - lo + 1).bit_length() - 1
        a = int(self._table[k][lo])
        b = int(self._table[k][hi - (1 << k) + 1])
        if self.values[b] < self.values[a] or (self.values[b] == self.values[a] and b < a):
            return b + 1
        return a + 1


def list_at_most(rmq: RangeMinQuery, i: int, j: int, delta: int) -> list[int]:
    """All indices k in [i..j] with D[k] <= delta, in ascending order.

    Recursive split around each reported minimum; performs at most
    2*|output| + 1 rmq calls.
    """
    if not 1 <= i or not j <= len(rmq.values):
        raise IndexError(f"range [{i}..{j}] invalid for n={len(rmq.values)}")
    out: list[int] = []
    _collect(rmq, i, j, delta, out)
    out.sort()
    return out


def _collect(rmq, i, j, delta, out):
    if i > j:
        return
    k = rmq.rmq(i, j)
    if rmq.values[k - 1] > delta:
        return
    out.append(k)
    _collect(rmq, i, k - 1, delta, out)
    _collect(rmq, k + 1, j, delta, out)
