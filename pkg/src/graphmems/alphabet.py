"""Internal symbol model.

All indexes operate on small non-negative integers.  Sentinels sit below
the character symbols so that a single total order serves every text:

    0  chunk delimiter (written ``0`` in rendered texts)
    1  extension placeholder ``#`` for non-singleton or empty extensions
    2  terminator appended to every indexed text
    3.. query separators, one distinct value per boundary
    .. character symbols, in canonical (sorted) character order

The delimiter, terminator and separators never participate in a match:
two occurrences of any of them still count as a mismatch, which is how
string/chunk boundaries satisfy the maximality conditions uniformly.
"""
from __future__ import annotations

import numpy as np

DELIM = 0
HASH = 1
TERM = 2
SEP_BASE = 3


class Alphabet:
    """Bidirectional mapping between input characters and symbol values."""

    def __init__(self, chars, n_separators: int = 0):
        self.chars = sorted(set(chars))
        self.n_separators = n_separators
        self.sigma_base = SEP_BASE + n_separators
        self._enc = {c: self.sigma_base + k for k, c in enumerate(self.chars)}
        self._dec = {v: c for c, v in self._enc.items()}
        if any(len(c) != 1 for c in self.chars):
            raise ValueError("alphabet entries must be single characters")

    @property
    def size(self) -> int:
        return len(self.chars)

    def separator(self, k: int) -> int:
        if not 0 <= k < self.n_separators:
            raise IndexError(f"separator {k} out of range")
        return SEP_BASE + k

    def encode(self, s: str) -> np.ndarray:
        try:
            return np.array([self._enc[c] for c in s], dtype=np.int32)
        except KeyError as exc:
            raise ValueError(f"character {exc.args[0]!r} not in alphabet") from None

    def encode_symbol(self, c: str) -> int:
        return self._enc[c]

    def decode(self, symbols) -> str:
        out = []
        for v in symbols:
            v = int(v)
            if v == DELIM:
                out.append("0")
            elif v == HASH:
                out.append("#")
            elif v == TERM:
                out.append("$")
            elif v < self.sigma_base:
                out.append("|")
            else:
                out.append(self._dec[v])
        return "".join(out)

    def is_sigma(self, sym: int) -> bool:
        return sym >= self.sigma_base

    def is_separator(self, sym: int) -> bool:
        return SEP_BASE <= sym < self.sigma_base

    def never_matches(self, sym: int) -> bool:
        """True for symbols that mismatch everything, themselves included."""
        return sym == DELIM or sym == TERM or self.is_separator(sym)

    def symbols_match(self, a: int, b: int) -> bool:
        return a == b and not self.never_matches(a)


def union_alphabet(*char_sources, n_separators: int = 0) -> Alphabet:
    chars: set[str] = set()
    for src in char_sources:
        chars.update(src)
    return Alphabet(chars, n_separators=n_separators)
