"""Rank/select over a static bitvector."""
from __future__ import annotations

import numpy as np


class RankSelectBitvector:
    """Constant-time rank and O(log n) select over fixed bits B[1..n].

    Positions are 1-based: ``rank(i)`` counts set bits in B[1..i] and
    ``select(r)`` returns the position of the r-th set bit.
    """

    def __init__(self, bits):
        self._bits = np.asarray(bits, dtype=np.uint8)
        if self._bits.ndim != 1:
            raise ValueError("bits must be one-dimensional")
        self._prefix = np.zeros(len(self._bits) + 1, dtype=np.int64)
        np.cumsum(self._bits, out=self._prefix[1:])
        self._positions = np.flatnonzero(self._bits).astype(np.int64) + 1

    def __len__(self) -> int:
        return len(self._bits)

    @property
    def ones(self) -> int:
        return int(self._prefix[-1])

    def __getitem__(self, i: int) -> int:
        return int(self._bits[i - 1])

    def rank(self, i: int) -> int:
        if not 0 <= i <= len(self._bits):
            raise IndexError(f"rank position {i} out of [0..{len(self._bits)}]")
        return int(self._prefix[i])

    def select(self, r: int) -> int:
        if not 1 <= r <= self.ones:
            raise IndexError(f"select rank {r} out of [1..{self.ones}]")
        return int(self._positions[r - 1])
