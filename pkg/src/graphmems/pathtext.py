"""Delimited concatenations of node labels, path labels, and 2-edge
window labels, with the registry that maps text positions back to graph
coordinates, and the distance-to-last-node array used to keep matches
spanning exactly the registered number of nodes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alphabet import DELIM, HASH, Alphabet
from .bitvector import RankSelectBitvector
from .graph import LabeledGraph, node_left_symbols, node_right_symbols
from .rmq import INF
from .suffixarray import SuffixArrayIndex

KIND_NODES = "nodes"
KIND_PATHS = "paths"
KIND_WINDOW3 = "window3"


class TextSizeError(RuntimeError):
    """Raised when a path text would exceed the configured size guard."""


@dataclass(frozen=True)
class Chunk:
    path: tuple[str, ...]
    label_start: int          # 1-based text position of the first label symbol
    node_starts: tuple[int, ...]  # prefix offsets of each node inside the label part
    label_len: int


class PathText:
    def __init__(self, kind: str, L, symbols: np.ndarray, chunks: list[Chunk],
                 alphabet: Alphabet):
        self.kind = kind
        self.L = L
        self.symbols = symbols
        self.chunks = chunks
        self.alphabet = alphabet
        self.boundary = RankSelectBitvector(symbols == DELIM)

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def n_chunks(self) -> int:
        return len(self.chunks)

    def chunk_at(self, pos: int) -> tuple[int, Chunk]:
        """Chunk owning 1-based text position ``pos`` (a non-delimiter)."""
        r = self.boundary.rank(pos)
        return r - 1, self.chunks[r - 1]

    def locate(self, pos: int) -> tuple[Chunk, int, int]:
        """Map a 1-based label position to (chunk, node index, offset)."""
        _, chunk = self.chunk_at(pos)
        q = pos - chunk.label_start + 1
        if not 1 <= q <= chunk.label_len:
            raise ValueError(f"position {pos} is not inside a label region")
        ni = 0
        while ni + 1 < len(chunk.node_starts) and chunk.node_starts[ni + 1] <= q:
            ni += 1
        return chunk, ni, q - chunk.node_starts[ni] + 1


def _extension_symbol(symbols: set[str], alphabet: Alphabet) -> int:
    if len(symbols) == 1:
        return alphabet.encode_symbol(next(iter(symbols)))
    return HASH


def build_nodes_text(g: LabeledGraph, alphabet: Alphabet) -> PathText:
    """One delimiter-prefixed chunk per node label, in load order."""
    parts = []
    chunks = []
    pos = 0
    for nid in g.node_ids:
        enc = alphabet.encode(g.labels[nid])
        parts.append(np.array([DELIM], dtype=np.int32))
        parts.append(enc)
        chunks.append(Chunk((nid,), pos + 2, (1,), len(enc)))
        pos += 1 + len(enc)
    symbols = np.concatenate(parts) if parts else np.empty(0, dtype=np.int32)
    return PathText(KIND_NODES, None, symbols, chunks, alphabet)


def _walks(g: LabeledGraph, L: int):
    """All node walks of exactly L nodes, depth-first in load order."""
    if L == 1:
        for nid in g.node_ids:
            yield (nid,)
        return
    for nid in g.node_ids:
        stack = [(nid,)]
        while stack:
            walk = stack.pop()
            if len(walk) == L:
                yield walk
                continue
            for w in reversed(g.out_adj[walk[-1]]):
                stack.append(walk + (w,))


def estimate_paths_text(g: LabeledGraph, L: int) -> int:
    d = max(g.max_degree, 1)
    return g.total_label_length * L * d ** (L - 1)


def build_paths_text(g: LabeledGraph, L: int, alphabet: Alphabet,
                     max_symbols: int | None = None) -> PathText:
    """Chunks of L-node walk labels wrapped in their boundary extension
    symbols: a unique extension appears literally, anything else as ``#``.

    A leading delimiter precedes the first chunk and each chunk ends with
    one, so every chunk is delimiter-enclosed.
    """
    if L < 1:
        raise ValueError("node count must be >= 1")
    if max_symbols is not None and estimate_paths_text(g, L) > max_symbols:
        raise TextSizeError(
            f"estimated text size {estimate_paths_text(g, L)} exceeds {max_symbols}"
        )
    left_sym = {nid: _extension_symbol(node_left_symbols(g, nid), alphabet)
                for nid in g.node_ids}
    right_sym = {nid: _extension_symbol(node_right_symbols(g, nid), alphabet)
                 for nid in g.node_ids}
    parts = [np.array([DELIM], dtype=np.int32)]
    chunks = []
    pos = 1
    for walk in _walks(g, L):
        labels = [alphabet.encode(g.labels[nid]) for nid in walk]
        lens = [len(x) for x in labels]
        starts = tuple(int(s) for s in np.concatenate(([1], np.cumsum(lens)[:-1] + 1)))
        chunk_syms = [np.array([left_sym[walk[0]]], dtype=np.int32)]
        chunk_syms.extend(labels)
        chunk_syms.append(np.array([right_sym[walk[-1]], DELIM], dtype=np.int32))
        chunks.append(Chunk(walk, pos + 2, starts, sum(lens)))
        block = np.concatenate(chunk_syms)
        parts.append(block)
        pos += len(block)
    symbols = np.concatenate(parts)
    return PathText(KIND_PATHS, L, symbols, chunks, alphabet)


def build_window3_text(g: LabeledGraph, alphabet: Alphabet,
                       pad_isolated_edges: bool = False) -> PathText:
    """Chunks of 2-edge path labels, without extension symbols.

    With ``pad_isolated_edges`` the text also gets a 2-node chunk for any
    edge that appears in no 2-edge path, so every edge's pair spelling is
    present (needed by the block-graph index on two-block graphs).
    """
    if not g.is_acyclic():
        raise ValueError("2-edge window text requires an acyclic graph")
    parts = [np.array([DELIM], dtype=np.int32)]
    chunks = []
    pos = 1
    covered: set[tuple[str, str]] = set()

    def emit(walk: tuple[str, ...]):
        nonlocal pos
        labels = [alphabet.encode(g.labels[nid]) for nid in walk]
        lens = [len(x) for x in labels]
        starts = tuple(int(s) for s in np.concatenate(([1], np.cumsum(lens)[:-1] + 1)))
        chunks.append(Chunk(walk, pos + 1, starts, sum(lens)))
        block = np.concatenate(labels + [np.array([DELIM], dtype=np.int32)])
        parts.append(block)
        pos += len(block)

    for u in g.node_ids:
        for v in g.out_adj[u]:
            for w in g.out_adj[v]:
                emit((u, v, w))
                covered.add((u, v))
                covered.add((v, w))
    if pad_isolated_edges:
        for u, v in g.edges:
            if (u, v) not in covered:
                emit((u, v))
    symbols = np.concatenate(parts)
    return PathText(KIND_WINDOW3, 3, symbols, chunks, alphabet)


def build_d_array(pt: PathText, sai: SuffixArrayIndex) -> np.ndarray:
    """Distance array over suffix ranks of the paths text.

    For rank k, let the suffix start at s.  If position s+1 lies inside
    the first node of its chunk at label offset i, the value is the
    distance from s+1 to the start of the chunk's last node,
    ``label_len - last_len - i + 2``; otherwise it is INF.  A match
    starting at s+1 reaches the last node exactly when its length is at
    least this distance.
    """
    if pt.kind != KIND_PATHS:
        raise ValueError("distance array is defined for the paths text only")
    n = len(sai.text)
    d = np.full(n, INF, dtype=np.int64)
    text = sai.text
    for k in range(n):
        s = int(sai.sa[k])
        succ = s + 1
        if succ >= n - 1:
            continue
        if text[succ] == DELIM:
            continue
        pos1 = succ + 1  # 1-based
        r = pt.boundary.rank(pos1)
        if r < 1 or r > len(pt.chunks):
            continue
        chunk = pt.chunks[r - 1]
        q = pos1 - chunk.label_start + 1
        first_len = (chunk.node_starts[1] - 1) if len(chunk.node_starts) > 1 else chunk.label_len
        if not 1 <= q <= first_len:
            continue
        last_len = chunk.label_len - chunk.node_starts[-1] + 1
        d[k] = chunk.label_len - last_len - q + 2
    return d
