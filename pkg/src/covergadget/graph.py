"""Simple undirected graphs with an observable edge order.

Vertices are opaque string labels.  The edge list order is part of the
graph's identity because edge weight tuples bind to edges by position.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class SizeLimitError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            dup = [v for v, c in Counter(verts).items() if c > 1]
            raise GraphError(f"duplicate vertex label(s): {dup}")
        pos = {v: i for i, v in enumerate(verts)}
        seen = set()
        norm = []
        for e in self.edges:
            u, v = tuple(e)
            if u not in pos or v not in pos:
                raise GraphError(f"edge {e!r} has an unknown endpoint")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {{{u}, {v}}}")
            seen.add(key)
            norm.append((u, v) if pos[u] < pos[v] else (v, u))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, x):
        return x in self.index

    def degree(self, x: str) -> int:
        return len(self.adjacency[x])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adjacency.get(u, ())

    def edge_index(self, u: str, v: str) -> int:
        key = frozenset((u, v))
        for i, e in enumerate(self.edges):
            if frozenset(e) == key:
                return i
        raise GraphError(f"no edge {{{u}, {v}}}")

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return build_graph(data["vertices"], [tuple(e) for e in data.get("edges", [])])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class GraphClass:
    kind: str  # "forest", "tree", "unicyclic" or "other"
    bipartite: bool
    cycle_length: int | None = None

    @property
    def is_forest(self) -> bool:
        return self.kind in ("forest", "tree")


def build_graph(vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()) -> Graph:
    return Graph(tuple(vertices), tuple(tuple(e) for e in edges))


def _require(G: Graph, xs: Iterable[str]) -> None:
    for x in xs:
        if x not in G.index:
            raise GraphError(f"unknown vertex {x!r}")


def neighborhood(G: Graph, x: str, closed: bool = False) -> frozenset[str]:
    _require(G, [x])
    nb = G.adjacency[x]
    return nb | {x} if closed else nb


def delete_vertices(G: Graph, K: Iterable[str]) -> Graph:
    """Induced subgraph on V(G) minus K; surviving edges keep their order."""
    K = set(K)
    _require(G, K)
    if not K:
        return G
    return Graph(
        tuple(v for v in G.vertices if v not in K),
        tuple(e for e in G.edges if e[0] not in K and e[1] not in K),
    )


def strip_isolated(G: Graph) -> Graph:
    keep = tuple(v for v in G.vertices if G.adjacency[v])
    if len(keep) == len(G.vertices):
        return G
    return Graph(keep, G.edges)


def add_whisker(G: Graph, x: str, new: str | None = None) -> Graph:
    _require(G, [x])
    if new is None:
        i = len(G.vertices) + 1
        while f"w{i}" in G.index:
            i += 1
        new = f"w{i}"
    if new in G.index:
        raise GraphError(f"label {new!r} already in use")
    return Graph(G.vertices + (new,), G.edges + ((x, new),))


def components(G: Graph) -> list[list[str]]:
    seen: set[str] = set()
    out = []
    for s in G.vertices:
        if s in seen:
            continue
        comp, queue = [], deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in G.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_bipartite(G: Graph) -> bool:
    side: dict[str, int] = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def cycle_vertices(G: Graph) -> list[str]:
    """Vertices left after repeatedly pruning degree <= 1 vertices (the 2-core)."""
    deg = {v: G.degree(v) for v in G.vertices}
    alive = set(G.vertices)
    queue = deque(v for v in G.vertices if deg[v] <= 1)
    while queue:
        u = queue.popleft()
        if u not in alive:
            continue
        alive.discard(u)
        for w in G.adjacency[u]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return [v for v in G.vertices if v in alive]


def classify(G: Graph) -> GraphClass:
    bip = is_bipartite(G)
    n, m = len(G.vertices), len(G.edges)
    ncomp = len(components(G))
    if m == n - ncomp:
        return GraphClass("tree" if ncomp <= 1 else "forest", bip)
    if ncomp == 1 and m == n:
        return GraphClass("unicyclic", bip, len(cycle_vertices(G)))
    return GraphClass("other", bip)


# -- trees -----------------------------------------------------------------

def _rooted_code(adj: dict[str, frozenset[str]], root: str, parent: str | None) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def tree_centers(G: Graph) -> list[str]:
    if len(G.vertices) <= 2:
        return list(G.vertices)
    deg = {v: G.degree(v) for v in G.vertices}
    layer = [v for v in G.vertices if deg[v] == 1]
    remaining = len(G.vertices)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in G.adjacency[u]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_canonical_form(G: Graph) -> str:
    """AHU string of a tree rooted at its center (minimum over bicentres)."""
    if not G.vertices:
        return ""
    return min(_rooted_code(G.adjacency, c, None) for c in tree_centers(G))


def _tree_from_code(code: str, prefix: str = "x") -> Graph:
    # depth-first relabelling of a rooted AHU code, so output is deterministic
    vertices, edges, stack = [], [], []
    for ch in code:
        if ch == "(":
            v = f"{prefix}{len(vertices) + 1}"
            if stack:
                edges.append((stack[-1], v))
            vertices.append(v)
            stack.append(v)
        else:
            stack.pop()
    return Graph(tuple(vertices), tuple(edges))


def tree_from_pruefer(seq: Sequence[int], prefix: str = "x") -> Graph:
    """Decode a Prüfer sequence over 1..len(seq)+2."""
    n = len(seq) + 2
    degree = [1] * (n + 1)
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = next(i for i in range(1, n + 1) if degree[i] == 1)
        edges.append((leaf, s))
        degree[leaf] -= 1
        degree[s] -= 1
    u, v = (i for i in range(1, n + 1) if degree[i] == 1)
    edges.append((u, v))
    return build_graph([f"{prefix}{i}" for i in range(1, n + 1)],
                       [(f"{prefix}{a}", f"{prefix}{b}") for a, b in edges])


def enumerate_trees(n: int, method: str = "extend") -> list[Graph]:
    """Pairwise non-isomorphic trees on ``n`` vertices, sorted by canonical form.

    ``method="extend"`` grows trees leaf by leaf from the classes on n-1
    vertices.  ``method="pruefer"`` decodes every Prüfer sequence and keeps
    one tree per canonical form; it costs n**(n-2) decodes, so it is only
    practical up to n = 8 or so.
    """
    if not 1 <= n <= 10:
        raise GraphError(f"n={n} out of range 1..10")
    if n == 1:
        return [Graph(("x1",))]
    if method == "pruefer":
        codes = {tree_canonical_form(tree_from_pruefer(seq))
                 for seq in product(range(1, n + 1), repeat=n - 2)}
    elif method == "extend":
        codes = {"(())"}
        for _ in range(n - 2):
            bigger = set()
            for code in codes:
                T = _tree_from_code(code)
                for v in T.vertices:
                    bigger.add(tree_canonical_form(add_whisker(T, v, new="new")))
            codes = bigger
    else:
        raise GraphError(f"unknown method {method!r}")
    return [_tree_from_code(c) for c in sorted(codes)]


# -- isomorphism -------------------------------------------------------------

def _refine(graphs: Sequence[Graph]) -> list[dict[str, int]]:
    """Colour refinement run jointly so colours are comparable across graphs."""
    colors = [{v: G.degree(v) for v in G.vertices} for G in graphs]
    nclasses = -1
    while True:
        palette: dict[tuple, int] = {}
        new = []
        for G, col in zip(graphs, colors):
            sig = {v: (col[v], tuple(sorted(col[w] for w in G.adjacency[v]))) for v in G.vertices}
            for s in sorted(set(sig.values())):
                palette.setdefault(s, len(palette))
            new.append(sig)
        # palette ids depend on insertion order, so rebuild them sorted
        order = {s: i for i, s in enumerate(sorted(palette))}
        colors = [{v: order[s] for v, s in sig.items()} for sig in new]
        if len(order) == nclasses:
            return colors
        nclasses = len(order)


def are_isomorphic(G: Graph, H: Graph, limit: int = 24) -> tuple[bool, dict[str, str] | None]:
    """Return ``(True, mapping)`` with an edge-preserving bijection G -> H, or ``(False, None)``.

    Colour refinement prunes, then backtracking extends partial maps along
    already-mapped neighbours.  Edge order is ignored.
    """
    if max(len(G.vertices), len(H.vertices)) > limit:
        raise SizeLimitError(f"isomorphism test limited to {limit} vertices")
    if len(G.vertices) != len(H.vertices) or len(G.edges) != len(H.edges):
        return False, None
    cg, ch = _refine([G, H])
    if Counter(cg.values()) != Counter(ch.values()):
        return False, None
    by_color: dict[int, list[str]] = {}
    for v in H.vertices:
        by_color.setdefault(ch[v], []).append(v)

    # visit order: rarest colour first, then stay connected to mapped vertices
    order: list[str] = []
    placed: set[str] = set()
    while len(order) < len(G.vertices):
        frontier = [v for v in G.vertices if v not in placed and G.adjacency[v] & placed]
        pool = frontier or [v for v in G.vertices if v not in placed]
        v = min(pool, key=lambda u: (len(by_color[cg[u]]), -G.degree(u), G.index[u]))
        order.append(v)
        placed.add(v)

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        mapped_nbrs = [mapping[w] for w in G.adjacency[v] if w in mapping]
        cands = by_color[cg[v]]
        if mapped_nbrs:
            cands = [h for h in H.adjacency[mapped_nbrs[0]] if ch[h] == cg[v]]
        for h in cands:
            if h in used:
                continue
            if any((w in mapping) and (mapping[w] in H.adjacency[h]) != (w in G.adjacency[v])
                   for w in G.vertices if w in mapping):
                continue
            mapping[v] = h
            used.add(h)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(h)
        return False

    if extend(0):
        return True, dict(mapping)
    return False, None


def is_isomorphism(G: Graph, H: Graph, f: dict[str, str]) -> bool:
    """Check that ``f`` is a bijection V(G) -> V(H) carrying E(G) exactly onto E(H)."""
    if set(f) != set(G.vertices) or set(f.values()) != set(H.vertices):
        return False
    if len(set(f.values())) != len(f):
        return False
    image = {frozenset((f[u], f[v])) for u, v in G.edges}
    return image == {frozenset(e) for e in H.edges}


# -- common small graphs ------------------------------------------------------

def path_graph(n: int, prefix: str = "x") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return build_graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int, prefix: str = "x") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return build_graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star_graph(leaves: int, prefix: str = "x") -> Graph:
    vs = [f"{prefix}{i}" for i in range(1, leaves + 2)]
    return build_graph(vs, [(vs[0], v) for v in vs[1:]])
