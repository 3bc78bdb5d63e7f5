"""Suffix tree built from the suffix array and LCP array.

Nodes live in parallel arrays; children are per-node dicts keyed by the
first symbol of the edge.  A locus (node, depth) addresses the point at
string depth ``depth`` on the edge entering ``node``; it is explicit
when ``depth == sdepth[node]``.  Suffix links are answered for explicit
and implicit loci alike by binary lifting over parent pointers.
"""
from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from . import kernels
from .alphabet import TERM


class Locus(NamedTuple):
    node: int
    depth: int


class SuffixTree:
    def __init__(self, symbols):
        body = np.asarray(symbols, dtype=np.int32)
        if len(body) and (body == TERM).any():
            raise ValueError("input symbols may not contain the terminator")
        self.text = np.concatenate([body, np.array([TERM], dtype=np.int32)])
        n = len(self.text)
        self.sa = kernels.suffix_array(self.text)
        self.lcp = kernels.lcp_array(self.text, self.sa)
        self.isa = np.empty(n, dtype=np.int32)
        self.isa[self.sa] = np.arange(n, dtype=np.int32)

        self.parent: list[int] = []
        self.sdepth: list[int] = []
        self.lo: list[int] = []
        self.hi: list[int] = []
        self.children: list[dict[int, int]] = []
        self.is_leaf: list[bool] = []
        self.leaf_id = np.empty(n, dtype=np.int64)
        self._build()
        self._build_lifting()

    # -- construction

    def _new_node(self, depth: int, lo: int, leaf: bool) -> int:
        self.parent.append(-1)
        self.sdepth.append(depth)
        self.lo.append(lo)
        self.hi.append(-1)
        self.children.append({})
        self.is_leaf.append(leaf)
        return len(self.parent) - 1

    def _attach(self, par: int, child: int) -> None:
        sym = int(self.text[self.sa[self.lo[child]] + self.sdepth[par]])
        self.children[par][sym] = child
        self.parent[child] = par

    def _build(self) -> None:
        n = len(self.text)
        root = self._new_node(0, 0, False)
        self.parent[root] = root
        stack = [root]
        leaf = self._new_node(n - int(self.sa[0]), 0, True)
        self.leaf_id[0] = leaf
        stack.append(leaf)
        for i in range(1, n):
            h = int(self.lcp[i])
            while self.sdepth[stack[-1]] > h:
                node = stack.pop()
                self.hi[node] = i
                top = stack[-1]
                if self.sdepth[top] >= h:
                    self._attach(top, node)
                else:
                    sp = self._new_node(h, self.lo[node], False)
                    self._attach(sp, node)
                    stack.append(sp)
            assert self.sdepth[stack[-1]] == h, "unique terminator violated"
            leaf = self._new_node(n - int(self.sa[i]), i, True)
            self.leaf_id[i] = leaf
            stack.append(leaf)
        while len(stack) > 1:
            node = stack.pop()
            self.hi[node] = n
            top = stack[-1]
            self._attach(top, node)
        self.hi[root] = n

    def _build_lifting(self) -> None:
        par = np.asarray(self.parent, dtype=np.int64)
        levels = max(len(par).bit_length(), 1)
        self._up = [par]
        for _ in range(1, levels):
            self._up.append(self._up[-1][self._up[-1]])

    # -- basic accessors

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    @property
    def root_locus(self) -> Locus:
        return Locus(0, 0)

    def leaf_count(self) -> int:
        return sum(self.is_leaf)

    def interval(self, locus: Locus) -> tuple[int, int]:
        """Leaf-rank interval [lo, hi) covered by the locus."""
        return self.lo[locus.node], self.hi[locus.node]

    def designated_leaf(self, locus: Locus) -> int:
        """Rank of the lexicographically smallest leaf below the locus."""
        return self.lo[locus.node]

    def suffix_position(self, rank: int) -> int:
        return int(self.sa[rank])

    def spell(self, locus: Locus) -> np.ndarray:
        start = int(self.sa[self.lo[locus.node]])
        return self.text[start : start + locus.depth]

    def is_explicit(self, locus: Locus) -> bool:
        return locus.depth == self.sdepth[locus.node]

    # -- navigation

    def descend(self, locus: Locus, sym: int) -> Optional[Locus]:
        node, depth = locus
        if depth == self.sdepth[node]:
            child = self.children[node].get(int(sym))
            if child is None:
                return None
            return Locus(child, depth + 1)
        nxt = int(self.text[self.sa[self.lo[node]] + depth])
        if nxt == int(sym):
            return Locus(node, depth + 1)
        return None

    def edge_symbols(self, locus: Locus) -> list[int]:
        """Symbols readable from the locus (mid-edge: the single next one)."""
        node, depth = locus
        if depth == self.sdepth[node]:
            return sorted(self.children[node].keys())
        return [int(self.text[self.sa[self.lo[node]] + depth])]

    def child_at(self, locus: Locus, sym: int) -> Optional[Locus]:
        """Explicit child locus reached by reading ``sym`` and the full edge."""
        node, depth = locus
        if depth == self.sdepth[node]:
            child = self.children[node].get(int(sym))
            if child is None:
                return None
            return Locus(child, self.sdepth[child])
        nxt = int(self.text[self.sa[self.lo[node]] + depth])
        if nxt != int(sym):
            return None
        return Locus(node, self.sdepth[node])

    def ancestor_at(self, node: int, depth: int) -> Locus:
        """Locus at string depth ``depth`` on the root path of ``node``."""
        u = int(node)
        if depth == 0:
            return Locus(0, 0)
        for k in range(len(self._up) - 1, -1, -1):
            w = int(self._up[k][u])
            if self.sdepth[w] >= depth:
                u = w
        return Locus(u, depth)

    def suffix_link(self, locus: Locus) -> Locus:
        """Locus spelling the current string minus its first symbol."""
        if locus.depth == 0:
            raise ValueError("suffix link of the root is undefined")
        if locus.depth == 1:
            return self.root_locus
        pos = int(self.sa[self.lo[locus.node]])
        leaf = int(self.leaf_id[int(self.isa[pos + 1])])
        return self.ancestor_at(leaf, locus.depth - 1)

    def skip_descend(self, locus: Locus, symbols) -> tuple[Locus, int]:
        """Descend a string known to occur below the locus.

        Chooses children by symbol and jumps edge lengths without
        re-comparing interior symbols; returns the locus and hop count.
        """
        node, depth = locus
        hops = 0
        i = 0
        m = len(symbols)
        while i < m:
            if depth == self.sdepth[node]:
                node = self.children[node][int(symbols[i])]
                hops += 1
            take = min(self.sdepth[node] - depth, m - i)
            depth += take
            i += take
        return Locus(node, depth), hops
