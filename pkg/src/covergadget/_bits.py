"""Bitmask view of a Graph used by the search-heavy routines."""

from __future__ import annotations

from .graph import Graph


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitGraph:
    __slots__ = ("labels", "index", "adj", "full")

    def __init__(self, G: Graph):
        self.labels = list(G.vertices)
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.adj = [0] * len(self.labels)
        for u, v in G.edges:
            i, j = self.index[u], self.index[v]
            self.adj[i] |= 1 << j
            self.adj[j] |= 1 << i
        self.full = (1 << len(self.labels)) - 1

    def mask_of(self, labels) -> int:
        m = 0
        for v in labels:
            m |= 1 << self.index[v]
        return m

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in iter_bits(mask)]

    def closed(self, v: int, mask: int) -> int:
        return (self.adj[v] | (1 << v)) & mask

    def has_edges(self, mask: int) -> bool:
        return any(self.adj[v] & mask for v in iter_bits(mask))

    def strip(self, mask: int) -> int:
        """Drop vertices with no neighbour inside ``mask``."""
        out = mask
        for v in iter_bits(mask):
            if not self.adj[v] & mask:
                out &= ~(1 << v)
        return out

    def is_independent(self, mask: int) -> bool:
        return not any(self.adj[v] & mask for v in iter_bits(mask))

    def maximal_independent_sets(self, mask: int):
        """Bron-Kerbosch with pivoting on the complement, restricted to ``mask``."""
        non = [(mask & ~self.adj[v]) & ~(1 << v) for v in range(len(self.labels))]

        def bk(r: int, p: int, x: int):
            if not p and not x:
                yield r
                return
            pivot = max(iter_bits(p | x), key=lambda u: (non[u] & p).bit_count())
            for v in iter_bits(p & ~non[pivot]):
                yield from bk(r | (1 << v), p & non[v], x & non[v])
                p &= ~(1 << v)
                x |= 1 << v

        yield from bk(0, mask, 0)
