"""Bidirectional index: synchronized forward and reverse suffix arrays.

Tracks a pattern as a pair of rank intervals, one in the suffix array of
the text and one in the suffix array of the reversed text, so a match
can be extended by one symbol on either end.  Interval widths stay equal
on both sides (each equals the occurrence count of the tracked pattern).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .suffixarray import SuffixArrayIndex


@dataclass(frozen=True)
class IntervalState:
    lo: int
    hi: int
    rlo: int
    rhi: int
    length: int

    @property
    def width(self) -> int:
        return self.hi - self.lo

    @property
    def empty(self) -> bool:
        return self.hi <= self.lo


class BidirectionalIndex:
    def __init__(self, symbols):
        body = np.asarray(symbols, dtype=np.int32)
        self.fwd = SuffixArrayIndex(body)
        self.rev = SuffixArrayIndex(body[::-1])
        self.n = len(self.fwd)

    def root(self) -> IntervalState:
        return IntervalState(0, self.n, 0, self.n, 0)

    def extend_left(self, st: IntervalState, sym: int) -> IntervalState:
        lo, hi = self.fwd.extend_left(st.lo, st.hi, sym)
        if lo >= hi:
            return IntervalState(0, 0, 0, 0, st.length + 1)
        # reverse interval: occurrences preceded by smaller symbols come first
        skip = 0
        for s, c in self.fwd.symbol_counts(st.lo, st.hi):
            if s < sym:
                skip += c
        rlo = st.rlo + skip
        return IntervalState(lo, hi, rlo, rlo + (hi - lo), st.length + 1)

    def extend_right(self, st: IntervalState, sym: int) -> IntervalState:
        rlo, rhi = self.rev.extend_left(st.rlo, st.rhi, sym)
        if rlo >= rhi:
            return IntervalState(0, 0, 0, 0, st.length + 1)
        skip = 0
        for s, c in self.rev.symbol_counts(st.rlo, st.rhi):
            if s < sym:
                skip += c
        lo = st.lo + skip
        return IntervalState(lo, lo + (rhi - rlo), rlo, rhi, st.length + 1)

    def left_symbols(self, st: IntervalState) -> list[tuple[int, int]]:
        """Symbols preceding occurrences of the tracked pattern, with counts."""
        return self.fwd.symbol_counts(st.lo, st.hi)

    def right_symbols(self, st: IntervalState) -> list[tuple[int, int]]:
        """Symbols following occurrences of the tracked pattern, with counts."""
        return self.rev.symbol_counts(st.rlo, st.rhi)

    def track(self, pattern) -> IntervalState:
        st = self.root()
        for sym in np.asarray(pattern, dtype=np.int32)[::-1]:
            st = self.extend_left(st, int(sym))
            if st.empty:
                return st
        return st
