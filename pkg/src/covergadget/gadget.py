"""Layered edge blocks and the weighted gadget graph built from them.

Every edge {x_i, x_j} with weight p becomes a bipartite block on layered
vertices x_i@1..x_i@p and x_j@1..x_j@p, with x_i@l ~ x_j@m whenever
l + m <= p + 1.  A weight-0 edge contributes the two layer-1 vertices and
no edges.  Gluing the blocks along shared layered vertices gives the gadget.

The ``base@layer`` labels produced by :func:`layer_label` are also the
variable names used by polarization, so cover ideals of gadgets and
polarized ideals can be compared as plain generator sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, classify, strip_isolated

LayeredVertex = tuple[str, int]


def layer_label(base: str, layer: int) -> str:
    return f"{base}@{layer}"


def split_label(label: str) -> LayeredVertex:
    base, sep, layer = label.rpartition("@")
    if not sep:
        raise ValueError(f"{label!r} is not a layered label")
    return base, int(layer)


def polarization_naming(base: str, m: int) -> list[LayeredVertex]:
    """Layered vertices replacing ``base**m``: layers 1..m."""
    if m < 0:
        raise ValueError("exponent must be non-negative")
    return [(base, a) for a in range(1, m + 1)]


def _block_edges(u: str, v: str, p: int) -> list[tuple[str, str]]:
    return [(layer_label(u, l), layer_label(v, m))
            for l in range(1, p + 1) for m in range(1, p + 2 - l)]


def edge_power(edge: Sequence[str], p: int) -> Graph:
    u, v = edge
    if p < 0:
        raise ValueError("edge weight must be non-negative")
    if p == 0:
        return Graph((layer_label(u, 1), layer_label(v, 1)))
    verts = [layer_label(u, a) for a in range(1, p + 1)] + [layer_label(v, a) for a in range(1, p + 1)]
    return Graph(tuple(verts), tuple(_block_edges(u, v, p)))


def layer_counts(G: Graph, ktuple: Sequence[int]) -> dict[str, int]:
    top = {v: 1 for v in G.vertices}
    for (u, v), k in zip(G.edges, ktuple):
        top[u] = max(top[u], k)
        top[v] = max(top[v], k)
    return top


def _check_tuple(G: Graph, ktuple: Sequence[int]) -> tuple[int, ...]:
    k = tuple(int(x) for x in ktuple)
    if len(k) != len(G.edges):
        raise GraphError(f"tuple has {len(k)} entries but the graph has {len(G.edges)} edges")
    if any(x < 0 for x in k):
        raise GraphError("tuple entries must be non-negative")
    return k


@dataclass(frozen=True)
class LayeredGraph:
    base: Graph
    ktuple: tuple[int, ...]
    graph: Graph

    @property
    def vertices(self) -> list[LayeredVertex]:
        return [split_label(v) for v in self.graph.vertices]

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "k": list(self.ktuple),
            "vertices": [list(split_label(v)) for v in self.graph.vertices],
            "edges": [[list(split_label(u)), list(split_label(v))] for u, v in self.graph.edges],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LayeredGraph":
        lg = build_gadget(Graph.from_dict(data["base"]), data["k"])
        if "edges" in data:
            given = {frozenset(layer_label(b, a) for b, a in e) for e in data["edges"]}
            if given != {frozenset(e) for e in lg.graph.edges}:
                raise GraphError("materialized edges disagree with base graph and tuple")
        return lg


def build_gadget(G: Graph, ktuple: Sequence[int]) -> LayeredGraph:
    k = _check_tuple(G, ktuple)
    top = layer_counts(G, k)
    verts = tuple(layer_label(v, a) for v in G.vertices for a in range(1, top[v] + 1))
    edges = []
    for (u, v), p in zip(G.edges, k):
        edges.extend(_block_edges(u, v, p))
    return LayeredGraph(G, k, Graph(verts, tuple(edges)))


def uniform(G: Graph, k: int) -> tuple[int, ...]:
    return (k,) * len(G.edges)


# -- leaf collapse and link decomposition ------------------------------------

def _require_forest(G: Graph) -> None:
    if not classify(G).is_forest:
        raise GraphError("base graph must be a forest")


def support_of(G: Graph, leaf: str) -> str:
    if G.degree(leaf) != 1:
        raise GraphError(f"{leaf!r} is not a leaf")
    (b,) = G.adjacency[leaf]
    return b


def collapse_tuple(G: Graph, ktuple: Sequence[int], support: str) -> tuple[int, ...]:
    """Decrease (floored at 0) the weight of every edge at ``support``."""
    return tuple(max(0, k - 1) if support in e else k for e, k in zip(G.edges, ktuple))


def leaf_collapse(G: Graph, ktuple: Sequence[int], leaf: str) -> tuple[Graph, tuple[int, ...]]:
    """Weights after deleting support@1 and shifting the support's layers down by one.

    With ``b`` the neighbour of ``leaf``, ``(gadget(G, k) - b@1)`` with
    isolated vertices removed is isomorphic, via b@j -> b@(j-1), to
    ``gadget(G, k')`` with isolated vertices removed, where ``k'`` lowers
    each edge at ``b`` by one.  When ``b`` is itself a leaf (a single-edge
    component) the roles are symmetric and the same rule applies.
    """
    k = _check_tuple(G, ktuple)
    _require_forest(G)
    b = support_of(G, leaf)
    return G, collapse_tuple(G, k, b)


def collapse_map(G: Graph, ktuple: Sequence[int], leaf: str) -> dict[str, str]:
    """Explicit isomorphism from the collapsed gadget onto the deletion (both stripped)."""
    _, k2 = leaf_collapse(G, ktuple, leaf)
    b = support_of(G, leaf)
    small = strip_isolated(build_gadget(G, k2).graph)
    out = {}
    for lab in small.vertices:
        v, a = split_label(lab)
        out[lab] = layer_label(v, a + 1) if v == b else lab
    return out


def link_tuple(G: Graph, ktuple: Sequence[int], support: str) -> tuple[tuple[int, ...], dict[str, int]]:
    """Weights and per-vertex layer shifts describing gadget(G, k) - N[support@1].

    Edges at ``support`` vanish.  An edge {y, w} with y a neighbour of
    ``support`` keeps only its excess weight k(y, w) - k(support, y); the
    surviving layers of y are renumbered from 1, i.e. shifted by
    k(support, y).
    """
    k = _check_tuple(G, ktuple)
    weight = {frozenset(e): w for e, w in zip(G.edges, k)}
    shift = {y: weight[frozenset((support, y))] for y in G.adjacency[support]}
    out = []
    for (u, v), w in zip(G.edges, k):
        if support in (u, v):
            out.append(0)
        elif u in shift:
            out.append(max(0, w - shift[u]))
        elif v in shift:
            out.append(max(0, w - shift[v]))
        else:
            out.append(w)
    return tuple(out), {y: s for y, s in shift.items() if s}


def link_decomposition(G: Graph, ktuple: Sequence[int], support: str) -> tuple[Graph, dict[str, str]]:
    """Stripped right-hand graph and the layer-shift bijection onto the stripped link.

    The right-hand graph is the gadget of G minus the closed neighbourhood
    of ``support`` together with the residual blocks on edges leaving the
    non-leaf neighbours.  ``f`` is the identity except on layers of
    neighbours y, where y@t goes to y@(k(support, y) + t).
    """
    k = _check_tuple(G, ktuple)
    _require_forest(G)
    if not any(G.degree(y) == 1 for y in G.adjacency[support]):
        raise GraphError(f"{support!r} has no leaf neighbour")
    k2, shift = link_tuple(G, k, support)
    rhs = strip_isolated(build_gadget(G, k2).graph)
    f = {}
    for lab in rhs.vertices:
        v, a = split_label(lab)
        f[lab] = layer_label(v, a + shift.get(v, 0))
    return rhs, f
