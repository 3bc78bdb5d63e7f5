"""Node-labeled graphs, block structure, and extension primitives."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


class GraphFormatError(ValueError):
    """Raised for malformed graph/MSA input."""


@dataclass(frozen=True)
class GraphSubstring:
    """A path with a start offset in its first node and an end offset in
    its last node; offsets are 1-based and inclusive."""

    start: int
    path: tuple[str, ...]
    end: int


class LabeledGraph:
    """Directed graph with a nonempty string label on every node."""

    def __init__(self, nodes: Iterable[tuple[str, str]], edges: Iterable[tuple[str, str]]):
        self.node_ids: list[str] = []
        self.labels: dict[str, str] = {}
        for nid, label in nodes:
            if nid in self.labels:
                raise GraphFormatError(f"duplicate node id {nid!r}")
            if not label:
                raise GraphFormatError(f"empty label on node {nid!r}")
            self.node_ids.append(nid)
            self.labels[nid] = label
        self.edges: list[tuple[str, str]] = []
        seen = set()
        for u, v in edges:
            if u not in self.labels or v not in self.labels:
                raise GraphFormatError(f"edge ({u!r},{v!r}) references undeclared node")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u!r},{v!r})")
            seen.add((u, v))
            self.edges.append((u, v))
        self.out_adj: dict[str, list[str]] = {nid: [] for nid in self.node_ids}
        self.in_adj: dict[str, list[str]] = {nid: [] for nid in self.node_ids}
        for u, v in self.edges:
            self.out_adj[u].append(v)
            self.in_adj[v].append(u)
        self.index = {nid: k for k, nid in enumerate(self.node_ids)}
        self.block_tags: dict[str, int] = {}

    def __repr__(self) -> str:
        return f"LabeledGraph(nodes={len(self.node_ids)}, edges={len(self.edges)})"

    @property
    def chars(self) -> set[str]:
        out: set[str] = set()
        for label in self.labels.values():
            out.update(label)
        return out

    @property
    def total_label_length(self) -> int:
        return sum(len(v) for v in self.labels.values())

    @property
    def max_degree(self) -> int:
        degs = [len(v) for v in self.out_adj.values()] + [len(v) for v in self.in_adj.values()]
        return max(degs, default=0)

    def is_acyclic(self) -> bool:
        indeg = {nid: len(self.in_adj[nid]) for nid in self.node_ids}
        queue = [nid for nid in self.node_ids if indeg[nid] == 0]
        seen = 0
        while queue:
            u = queue.pop()
            seen += 1
            for v in self.out_adj[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        return seen == len(self.node_ids)

    def validate_substring(self, s: GraphSubstring) -> None:
        if not s.path:
            raise ValueError("empty path")
        for u, v in zip(s.path, s.path[1:]):
            if v not in self.out_adj[u]:
                raise ValueError(f"({u},{v}) is not an edge")
        first, last = s.path[0], s.path[-1]
        if not 1 <= s.start <= len(self.labels[first]):
            raise ValueError("start offset outside first label")
        if not 1 <= s.end <= len(self.labels[last]):
            raise ValueError("end offset outside last label")
        if len(s.path) == 1 and s.start > s.end:
            raise ValueError("start offset after end offset in single node")


@dataclass
class EfgStructure:
    """Ordered partition of the nodes into blocks; edges must connect
    consecutive blocks."""

    blocks: tuple[tuple[str, ...], ...]
    block_of: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.block_of:
            self.block_of = {
                nid: k for k, block in enumerate(self.blocks) for nid in block
            }

    @property
    def height(self) -> int:
        return max((len(b) for b in self.blocks), default=0)

    def check_block_graph(self, g: LabeledGraph) -> None:
        covered = set(self.block_of)
        if covered != set(g.node_ids):
            raise GraphFormatError("blocks do not partition the node set")
        if sum(len(b) for b in self.blocks) != len(g.node_ids):
            raise GraphFormatError("a node appears in more than one block")
        for u, v in g.edges:
            if self.block_of[v] != self.block_of[u] + 1:
                raise GraphFormatError(
                    f"edge ({u},{v}) does not connect consecutive blocks"
                )


# -- extension primitives

def spelled(g: LabeledGraph, s: GraphSubstring) -> str:
    g.validate_substring(s)
    if len(s.path) == 1:
        return g.labels[s.path[0]][s.start - 1 : s.end]
    parts = [g.labels[s.path[0]][s.start - 1 :]]
    parts.extend(g.labels[nid] for nid in s.path[1:-1])
    parts.append(g.labels[s.path[-1]][: s.end])
    return "".join(parts)


def left_extension(g: LabeledGraph, s: GraphSubstring) -> set[str]:
    """Symbols that can precede the substring: the single label symbol
    before the start offset, or the last symbols of in-neighbor labels."""
    g.validate_substring(s)
    first = s.path[0]
    if s.start > 1:
        return {g.labels[first][s.start - 2]}
    return {g.labels[u][-1] for u in g.in_adj[first]}


def right_extension(g: LabeledGraph, s: GraphSubstring) -> set[str]:
    g.validate_substring(s)
    last = s.path[-1]
    if s.end < len(g.labels[last]):
        return {g.labels[last][s.end]}
    return {g.labels[v][0] for v in g.out_adj[last]}


def node_left_symbols(g: LabeledGraph, nid: str) -> set[str]:
    return {g.labels[u][-1] for u in g.in_adj[nid]}


def node_right_symbols(g: LabeledGraph, nid: str) -> set[str]:
    return {g.labels[v][0] for v in g.out_adj[nid]}


# -- GFA subset ingestion

def load_gfa(path) -> LabeledGraph:
    """Load a GFA subset: S records with labels, L records with 0M overlap.

    An optional ``bl:i:<k>`` tag on a segment assigns it to block k; tags
    are kept on ``block_tags`` and interpreted by :func:`efg_from_tags`.
    """
    nodes: list[tuple[str, str]] = []
    edges: list[tuple[str, str]] = []
    tags: dict[str, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            kind = fields[0]
            if kind == "H":
                continue
            if kind == "S":
                if len(fields) < 3:
                    raise GraphFormatError(f"line {lineno}: S record needs id and label")
                nid, label = fields[1], fields[2]
                if not label or label == "*":
                    raise GraphFormatError(f"line {lineno}: empty label")
                for tag in fields[3:]:
                    if tag.startswith("bl:i:"):
                        tags[nid] = int(tag[5:])
                nodes.append((nid, label))
            elif kind == "L":
                if len(fields) < 6:
                    raise GraphFormatError(f"line {lineno}: L record needs 5 fields")
                nid_from, o1, nid_to, o2, overlap = fields[1:6]
                if o1 != "+" or o2 != "+":
                    raise GraphFormatError(f"line {lineno}: only + orientations supported")
                if overlap not in ("0M", "*"):
                    raise GraphFormatError(f"line {lineno}: links must declare zero overlap")
                edges.append((nid_from, nid_to))
            else:
                raise GraphFormatError(f"line {lineno}: unsupported record type {kind!r}")
    try:
        g = LabeledGraph(nodes, edges)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc)) from None
    g.block_tags = tags
    return g


def efg_from_tags(g: LabeledGraph) -> EfgStructure:
    if not g.block_tags or set(g.block_tags) != set(g.node_ids):
        raise GraphFormatError("every segment needs a bl:i tag to derive blocks")
    nblocks = max(g.block_tags.values()) + 1
    blocks = [[] for _ in range(nblocks)]
    for nid in g.node_ids:
        blocks[g.block_tags[nid]].append(nid)
    efg = EfgStructure(tuple(tuple(b) for b in blocks))
    efg.check_block_graph(g)
    return efg


def load_blocks(path, g: LabeledGraph) -> EfgStructure:
    """Blocks sidecar: one line per block listing its node ids."""
    blocks = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            blocks.append(tuple(line.split()))
    efg = EfgStructure(tuple(blocks))
    efg.check_block_graph(g)
    return efg


# -- naive EFG construction from an alignment

GAP = "-"


def build_naive_efg(rows: list[str], boundaries: list[int]) -> tuple[LabeledGraph, EfgStructure]:
    """Cut aligned rows at the given column boundaries and collapse equal
    gap-stripped slices into one node per block.

    ``boundaries`` are ascending cut positions strictly inside the row
    length; block i spans columns [b_{i-1}..b_i).  Edges connect nodes of
    consecutive blocks that co-occur in some row.
    """
    if not rows:
        raise GraphFormatError("empty alignment")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise GraphFormatError("rows have unequal lengths")
    if width == 0:
        raise GraphFormatError("zero-width alignment")
    cuts = [0] + list(boundaries) + [width]
    for a, b in zip(cuts, cuts[1:]):
        if not 0 <= a < b <= width:
            raise GraphFormatError(f"boundary out of range: {boundaries}")
    nodes: list[tuple[str, str]] = []
    blocks: list[tuple[str, ...]] = []
    node_of: list[dict[str, str]] = []
    for bi, (a, b) in enumerate(zip(cuts, cuts[1:])):
        slices = {}
        order = []
        for r, row in enumerate(rows):
            piece = row[a:b].replace(GAP, "")
            if not piece:
                raise GraphFormatError(
                    f"row {r} is all gaps in block {bi} (columns {a}..{b})"
                )
            if piece not in slices:
                nid = f"b{bi}n{len(order)}"
                slices[piece] = nid
                order.append(nid)
                nodes.append((nid, piece))
        blocks.append(tuple(order))
        node_of.append(slices)
    edges = set()
    for row in rows:
        prev = None
        for bi, (a, b) in enumerate(zip(cuts, cuts[1:])):
            nid = node_of[bi][row[a:b].replace(GAP, "")]
            if prev is not None:
                edges.add((prev, nid))
            prev = nid
    ordered_edges = sorted(edges)
    g = LabeledGraph(nodes, ordered_edges)
    efg = EfgStructure(tuple(blocks))
    efg.check_block_graph(g)
    return g, efg


# -- semi-repeat-free validation

def _occurrences_of(g: LabeledGraph, target: str):
    """All (node, offset, path) where ``target`` occurs in a path label
    starting at 1-based ``offset`` inside ``node``."""
    hits = []
    for u in g.node_ids:
        lu = g.labels[u]
        for off in range(1, len(lu) + 1):
            stack = [(u, off - 1, 0, (u,))]
            while stack:
                nid, pos, done, path = stack.pop()
                label = g.labels[nid]
                avail = len(label) - pos
                need = len(target) - done
                take = min(avail, need)
                if label[pos : pos + take] != target[done : done + take]:
                    continue
                if done + take == len(target):
                    hits.append((u, off, path))
                    continue
                for w in g.out_adj[nid]:
                    stack.append((w, 0, done + take, path + (w,)))
    return hits


def validate_semi_repeat_free(g: LabeledGraph, efg: EfgStructure):
    """Checks that every node label occurs in the graph only as a prefix
    of paths starting at a node of its own block.

    Returns (ok, violations) where each violation is (node, (witness
    node, offset, witness path)).
    """
    efg.check_block_graph(g)
    if not g.is_acyclic():
        raise GraphFormatError("block graph must be acyclic")
    violations = []
    for v in g.node_ids:
        bv = efg.block_of[v]
        for (u, off, path) in _occurrences_of(g, g.labels[v]):
            if off != 1 or efg.block_of[u] != bv:
                violations.append((v, (u, off, path)))
    return (not violations), violations
