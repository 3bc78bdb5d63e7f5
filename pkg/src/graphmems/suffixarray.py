"""Suffix array index with BWT-based backward search."""
from __future__ import annotations

import io
import struct

import numpy as np

from . import kernels
from .alphabet import TERM

_MAGIC = b"GMSA"
_VERSION = 1


class SuffixArrayIndex:
    """Suffix array, inverse, and BWT over ``symbols + [TERM]``.

    Ranks and positions are 0-based internally.  ``bwt[r]`` is the symbol
    preceding suffix ``sa[r]``, circularly, so the suffix starting at
    position 0 is preceded by the terminator.
    """

    def __init__(self, symbols, _from_parts=None):
        if _from_parts is not None:
            self.text, self.sa = _from_parts
        else:
            body = np.asarray(symbols, dtype=np.int32)
            if len(body) and (body == TERM).any():
                raise ValueError("input symbols may not contain the terminator")
            self.text = np.concatenate([body, np.array([TERM], dtype=np.int32)])
            self.sa = kernels.suffix_array(self.text)
        n = len(self.text)
        self.isa = np.empty(n, dtype=np.int32)
        self.isa[self.sa] = np.arange(n, dtype=np.int32)
        self.bwt = self.text[(self.sa.astype(np.int64) - 1) % n]
        self._symbols = np.unique(self.text)
        self._row = {int(s): k for k, s in enumerate(self._symbols)}
        # occ[k][i] = occurrences of symbol k in bwt[0..i)
        self._occ = np.zeros((len(self._symbols), n + 1), dtype=np.int32)
        for k, s in enumerate(self._symbols):
            np.cumsum(self.bwt == s, out=self._occ[k][1:])
        counts = np.array([(self.text == s).sum() for s in self._symbols], dtype=np.int64)
        starts = np.concatenate(([0], np.cumsum(counts[:-1])))
        self._c = {int(s): int(starts[k]) for k, s in enumerate(self._symbols)}

    def __len__(self) -> int:
        return len(self.text)

    @property
    def present_symbols(self) -> np.ndarray:
        return self._symbols

    def occ(self, sym: int, i: int) -> int:
        row = self._row.get(int(sym))
        if row is None:
            return 0
        return int(self._occ[row][i])

    def extend_left(self, lo: int, hi: int, sym: int) -> tuple[int, int]:
        """Backward step: interval of ``sym + P`` from the interval of P."""
        c = self._c.get(int(sym))
        if c is None:
            return 0, 0
        return c + self.occ(sym, lo), c + self.occ(sym, hi)

    def interval(self, pattern) -> tuple[int, int]:
        """Suffix-rank interval [lo, hi) of suffixes prefixed by ``pattern``."""
        lo, hi = 0, len(self.text)
        for sym in reversed(np.asarray(pattern, dtype=np.int32)):
            lo, hi = self.extend_left(lo, hi, int(sym))
            if lo >= hi:
                return 0, 0
        return lo, hi

    def contains(self, pattern) -> bool:
        lo, hi = self.interval(pattern)
        return hi > lo

    def symbol_counts(self, lo: int, hi: int) -> list[tuple[int, int]]:
        """Distinct BWT symbols in ranks [lo, hi) with multiplicities."""
        out = []
        for k, s in enumerate(self._symbols):
            c = int(self._occ[k][hi]) - int(self._occ[k][lo])
            if c:
                out.append((int(s), c))
        return out

    # -- serialization: magic, version, n, then text and sa as little-endian int32

    def to_bytes(self) -> bytes:
        buf = io.BytesIO()
        buf.write(_MAGIC)
        buf.write(struct.pack("<II", _VERSION, len(self.text)))
        buf.write(self.text.astype("<i4").tobytes())
        buf.write(self.sa.astype("<i4").tobytes())
        return buf.getvalue()

    @classmethod
    def from_bytes(cls, data: bytes) -> "SuffixArrayIndex":
        if data[:4] != _MAGIC:
            raise ValueError("bad magic")
        version, n = struct.unpack("<II", data[4:12])
        if version != _VERSION:
            raise ValueError(f"unsupported version {version}")
        text = np.frombuffer(data, dtype="<i4", count=n, offset=12).astype(np.int32)
        sa = np.frombuffer(data, dtype="<i4", count=n, offset=12 + 4 * n).astype(np.int32)
        return cls(None, _from_parts=(text, sa))
