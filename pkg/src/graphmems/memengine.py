"""MEM finding engines over the delimited path texts.

The explorer enumerates match strings shared by the indexed text and the
query that are right-maximal over the union of both; at every
left-maximal one the cross product pairs text occurrences with query
occurrences whose surrounding symbols differ on both sides.  Boundary
sentinels mismatch everything, which folds the string-edge cases of
maximality into the same two comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .alphabet import Alphabet, union_alphabet
from .bidirectional import BidirectionalIndex, IntervalState
from .graph import GraphSubstring, LabeledGraph, left_extension, right_extension, spelled
from .pathtext import (
    KIND_NODES,
    KIND_PATHS,
    PathText,
    build_d_array,
    build_nodes_text,
    build_paths_text,
)
from .rmq import RangeMinQuery, list_at_most

CATEGORY_NODE = "node"
CATEGORY_EXACT = "exact"
CATEGORY_EFG4 = "efg4plus"


@dataclass(frozen=True)
class MemRecord:
    x: int
    y: int
    start: int
    path: tuple[str, ...]
    end: int
    category: str

    @property
    def length(self) -> int:
        return self.y - self.x + 1

    @property
    def location(self) -> GraphSubstring:
        return GraphSubstring(self.start, self.path, self.end)

    @property
    def key(self) -> tuple:
        return (self.x, self.y, self.path, self.start, self.end)

    @property
    def sort_key(self) -> tuple:
        return (self.x, self.y, self.path, self.start)


class PreparedQuery:
    """Encoded query text; batches are joined by unique separators."""

    def __init__(self, alphabet: Alphabet, symbols: np.ndarray,
                 spans: list[tuple[str, int, int]]):
        self.alphabet = alphabet
        self.symbols = symbols
        self.spans = spans          # (name, start0, end0) per query, end exclusive

    @classmethod
    def single(cls, g: LabeledGraph, q: str) -> "PreparedQuery":
        return cls.batch(g, [("q0", q)])

    @classmethod
    def batch(cls, g: LabeledGraph, named: list[tuple[str, str]]) -> "PreparedQuery":
        if not named or any(not q for _, q in named):
            raise ValueError("queries must be nonempty")
        alphabet = union_alphabet(g.chars, *(q for _, q in named),
                                  n_separators=max(len(named) - 1, 0))
        parts = []
        spans = []
        pos = 0
        for k, (name, q) in enumerate(named):
            if k > 0:
                parts.append(np.array([alphabet.separator(k - 1)], dtype=np.int32))
                pos += 1
            enc = alphabet.encode(q)
            spans.append((name, pos, pos + len(enc)))
            parts.append(enc)
            pos += len(enc)
        return cls(alphabet, np.concatenate(parts), spans)

    @classmethod
    def coerce(cls, g: LabeledGraph, query) -> "PreparedQuery":
        if isinstance(query, PreparedQuery):
            return query
        return cls.single(g, query)

    def __len__(self) -> int:
        return len(self.symbols)

    def project(self, x: int, y: int) -> tuple[str, int, int]:
        """Map 1-based concatenation coordinates to (name, x, y)."""
        for name, s0, e0 in self.spans:
            if s0 + 1 <= x and y <= e0:
                return name, x - s0, y - s0
        raise ValueError(f"interval [{x}..{y}] crosses a query boundary")

    def substring(self, x: int, y: int) -> np.ndarray:
        return self.symbols[x - 1 : y]


@dataclass
class EngineStats:
    explore_nodes: int = 0
    cross_pairs: int = 0
    rmq_calls: int = 0


def explore_mem_strings(tb: BidirectionalIndex, qb: BidirectionalIndex,
                        kappa: int, stats: Optional[EngineStats] = None
                        ) -> Iterator[tuple[IntervalState, IntervalState]]:
    """Yield synchronized states of candidate match strings.

    Every yielded string occurs in both texts, has length >= kappa, is
    right-maximal over the union, and cannot be extended to the left
    without losing an occurrence context (two distinct preceding symbols
    exist across the union).
    """
    stack = [(tb.root(), qb.root())]
    while stack:
        st_t, st_q = stack.pop()
        if stats is not None:
            stats.explore_nodes += 1
        left_t = tb.left_symbols(st_t)
        left_q = qb.left_symbols(st_q)
        left_vals = {s for s, _ in left_t} | {s for s, _ in left_q}
        if st_t.length >= kappa and len(left_vals) >= 2:
            yield st_t, st_q
        both = {s for s, _ in left_t} & {s for s, _ in left_q}
        for a in sorted(both, reverse=True):
            ext_t = tb.extend_left(st_t, a)
            ext_q = qb.extend_left(st_q, a)
            right_vals = {s for s, _ in tb.right_symbols(ext_t)}
            right_vals.update(s for s, _ in qb.right_symbols(ext_q))
            if len(right_vals) >= 2:
                stack.append((ext_t, ext_q))


def cross_product_pairs(tb: BidirectionalIndex, qb: BidirectionalIndex,
                        st_t: IntervalState, st_q: IntervalState,
                        alphabet: Alphabet, *,
                        sigma_only: bool,
                        d_rmq: Optional[RangeMinQuery] = None,
                        stats: Optional[EngineStats] = None
                        ) -> list[tuple[int, int]]:
    """Occurrence pairs (text rank of the left-extended suffix, query
    rank) whose contexts mismatch on both sides.

    ``sigma_only`` restricts text-side context symbols to the characters
    and the extension placeholder, which keeps matches inside the label
    region of a chunk.  ``d_rmq`` additionally keeps only text
    occurrences whose match reaches the last node of its chunk.
    """
    length = st_t.length
    qtext, qsa, qbwt = qb.fwd.text, qb.fwd.sa, qb.fwd.bwt
    qocc = []
    for k2 in range(st_q.lo, st_q.hi):
        qp = int(qsa[k2])
        c = int(qbwt[k2])
        dsym = int(qtext[(qp + length) % len(qtext)])
        qocc.append((k2, c, dsym))
    ttext, tsa = tb.fwd.text, tb.fwd.sa

    def text_ok(sym: int) -> bool:
        if not sigma_only:
            return True
        return sym >= alphabet.sigma_base or sym == 1  # character or placeholder

    out = []
    for a, _count in tb.left_symbols(st_t):
        if not text_ok(a):
            continue
        lo_a, hi_a = tb.fwd.extend_left(st_t.lo, st_t.hi, a)
        if d_rmq is not None:
            before = d_rmq.calls
            ks: Iterable[int] = [k - 1 for k in list_at_most(d_rmq, lo_a + 1, hi_a, length)]
            if stats is not None:
                stats.rmq_calls += d_rmq.calls - before
        else:
            ks = range(lo_a, hi_a)
        for k in ks:
            p0 = int(tsa[k]) + 1
            b = int(ttext[(p0 + length) % len(ttext)])
            if not text_ok(b):
                continue
            for k2, c, dsym in qocc:
                if alphabet.symbols_match(a, c) or alphabet.symbols_match(b, dsym):
                    continue
                out.append((k, k2))
                if stats is not None:
                    stats.cross_pairs += 1
    return out


def _decode_record(pt: PathText, tb: BidirectionalIndex, qb: BidirectionalIndex,
                   k: int, k2: int, length: int, category: str) -> MemRecord:
    p1 = int(tb.fwd.sa[k]) + 2        # 1-based start of the match in the text
    r = pt.boundary.rank(p1)
    chunk = pt.chunks[r - 1]
    x = int(qb.fwd.sa[k2]) + 1
    if pt.kind == KIND_NODES:
        i = p1 - pt.boundary.select(r)
        return MemRecord(x, x + length - 1, i, chunk.path, i + length - 1, category)
    q = p1 - chunk.label_start + 1
    end_q = q + length - 1
    first_len = (chunk.node_starts[1] - 1) if len(chunk.node_starts) > 1 else chunk.label_len
    if not (1 <= q <= first_len and chunk.node_starts[-1] <= end_q <= chunk.label_len):
        raise AssertionError("decoded match does not span the registered walk")
    j = end_q - chunk.node_starts[-1] + 1
    return MemRecord(x, x + length - 1, q, chunk.path, j, category)


def _dedup_sorted(records: Iterable[MemRecord]) -> list[MemRecord]:
    best: dict[tuple, MemRecord] = {}
    rank = {CATEGORY_NODE: 0, CATEGORY_EXACT: 1, CATEGORY_EFG4: 2}
    for rec in records:
        prev = best.get(rec.key)
        if prev is None or rank.get(rec.category, 9) < rank.get(prev.category, 9):
            best[rec.key] = rec
    return sorted(best.values(), key=lambda r: r.sort_key)


def _check_query(query, kappa):
    if kappa < 1:
        raise ValueError("length threshold must be >= 1")
    if len(query.symbols) == 0:
        raise ValueError("empty query cannot satisfy a positive threshold")


def find_node_mems(g: LabeledGraph, query, kappa: int,
                   stats: Optional[EngineStats] = None) -> list[MemRecord]:
    """String MEMs between the query and each node label in isolation."""
    q = PreparedQuery.coerce(g, query)
    _check_query(q, kappa)
    pt = build_nodes_text(g, q.alphabet)
    if len(pt) == 0:
        return []
    tb = BidirectionalIndex(pt.symbols)
    qb = BidirectionalIndex(q.symbols)
    records = []
    for st_t, st_q in explore_mem_strings(tb, qb, kappa, stats):
        for k, k2 in cross_product_pairs(tb, qb, st_t, st_q, q.alphabet,
                                         sigma_only=False, stats=stats):
            records.append(_decode_record(pt, tb, qb, k, k2, st_t.length, CATEGORY_NODE))
    uniq = {rec.key: rec for rec in records}
    return sorted(uniq.values(), key=lambda r: (r.x, r.path, r.start))


def find_exact_l_mems(g: LabeledGraph, query, kappa: int, L: int,
                      max_text_symbols: int = 20_000_000,
                      stats: Optional[EngineStats] = None) -> list[MemRecord]:
    """All MEMs whose match spans exactly L nodes of the graph."""
    q = PreparedQuery.coerce(g, query)
    _check_query(q, kappa)
    if L < 1:
        raise ValueError("node count must be >= 1")
    pt = build_paths_text(g, L, q.alphabet, max_symbols=max_text_symbols)
    if pt.n_chunks == 0:
        return []
    tb = BidirectionalIndex(pt.symbols)
    qb = BidirectionalIndex(q.symbols)
    d_rmq = RangeMinQuery(build_d_array(pt, tb.fwd)) if L > 1 else None
    records = []
    for st_t, st_q in explore_mem_strings(tb, qb, kappa, stats):
        pairs = cross_product_pairs(tb, qb, st_t, st_q, q.alphabet,
                                    sigma_only=True, d_rmq=d_rmq, stats=stats)
        for k, k2 in pairs:
            records.append(_decode_record(pt, tb, qb, k, k2, st_t.length, CATEGORY_EXACT))
    return _dedup_sorted(records)


def find_all_mems_generic(g: LabeledGraph, query, kappa: int, lmax: int,
                          max_text_symbols: int = 20_000_000,
                          stats: Optional[EngineStats] = None) -> list[MemRecord]:
    """Union of the exact-span finders for every span up to ``lmax``."""
    q = PreparedQuery.coerce(g, query)
    _check_query(q, kappa)
    if lmax < 1:
        raise ValueError("maximum node count must be >= 1")
    records: list[MemRecord] = []
    for L in range(1, lmax + 1):
        records.extend(find_exact_l_mems(g, q, kappa, L,
                                         max_text_symbols=max_text_symbols, stats=stats))
    return _dedup_sorted(records)


def mem_satisfies_definition(g: LabeledGraph, query, rec: MemRecord, kappa: int) -> bool:
    """Post-hoc check of the maximality conjunction, independent of the
    index machinery: the spelled substring must equal the query interval
    and each side must be maximal or have a non-singleton extension set."""
    q = PreparedQuery.coerce(g, query)
    if rec.length < kappa:
        return False
    loc = rec.location
    try:
        s = spelled(g, loc)
    except ValueError:
        return False
    if rec.y > len(q.symbols):
        return False
    window = q.symbols[rec.x - 1 : rec.y]
    if len(s) != len(window) or not np.array_equal(q.alphabet.encode(s), window):
        return False
    lext = left_extension(g, loc)
    if rec.x == 1 or q.alphabet.never_matches(int(q.symbols[rec.x - 2])):
        left_ok = True
    else:
        prev = q.alphabet.decode([q.symbols[rec.x - 2]])
        left_ok = (not lext) or (prev not in lext) or len(lext) >= 2
    rext = right_extension(g, loc)
    if rec.y == len(q.symbols) or q.alphabet.never_matches(int(q.symbols[rec.y])):
        right_ok = True
    else:
        nxt = q.alphabet.decode([q.symbols[rec.y]])
        right_ok = (not rext) or (nxt not in rext) or len(rext) >= 2
    return left_ok and right_ok
