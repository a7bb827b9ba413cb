"""Vertex decomposability of graphs, with replayable certificates.

A graph is vertex decomposable when it has no edges, or some vertex x is a
shedding vertex and both G - x and G - N[x] are vertex decomposable.  The
shedding condition used throughout is the independent-set form: every
independent set of G - N[x] stays independent after adding some neighbour
of x.  Isolated vertices never matter, so every search state is stripped
of them first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ._bits import BitGraph, iter_bits
from .gadget import (build_gadget, collapse_tuple, layer_label, link_tuple, uniform)
from .graph import Graph, GraphError, classify, cycle_vertices


class VDBudgetError(RuntimeError):
    pass


class CertificateError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Certificate:
    """Shedding-vertex decomposition tree; a node without ``vertex`` means edgeless.

    Subtrees may be shared, so a certificate is really a DAG.
    """

    vertex: str | None = None
    delete: "Certificate | None" = None
    link: "Certificate | None" = None

    @property
    def is_edgeless(self) -> bool:
        return self.vertex is None

    def to_dict(self):
        if self.is_edgeless:
            return "edgeless"
        return {"vertex": self.vertex, "del": self.delete.to_dict(), "link": self.link.to_dict()}

    @classmethod
    def from_dict(cls, data) -> "Certificate":
        if data == "edgeless":
            return EDGELESS
        return cls(data["vertex"], cls.from_dict(data["del"]), cls.from_dict(data["link"]))

    def nodes(self) -> int:
        """Number of distinct nodes."""
        seen, stack = set(), [self]
        while stack:
            c = stack.pop()
            if id(c) in seen:
                continue
            seen.add(id(c))
            if not c.is_edgeless:
                stack += [c.delete, c.link]
        return len(seen)

    def depth(self) -> int:
        memo: dict[int, int] = {}

        def d(c):
            if c.is_edgeless:
                return 0
            if id(c) not in memo:
                memo[id(c)] = 1 + max(d(c.delete), d(c.link))
            return memo[id(c)]
        return d(self)


EDGELESS = Certificate()


@dataclass(frozen=True, eq=False)
class Attempt:
    vertex: str
    failure: str  # "not-shedding", "del-branch" or "link-branch"
    witness: tuple[str, ...]
    sub: "Refutation | None" = None

    def to_dict(self) -> dict:
        d = {"vertex": self.vertex, "failure": self.failure, "witness": list(self.witness)}
        if self.sub is not None:
            d["refutation"] = self.sub.to_dict()
        return d


@dataclass(frozen=True, eq=False)
class Refutation:
    """Evidence that a graph is not vertex decomposable: every vertex fails."""

    vertices: tuple[str, ...]
    attempts: tuple[Attempt, ...] = field(default=())

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "attempts": [a.to_dict() for a in self.attempts]}

    @classmethod
    def from_dict(cls, data: dict) -> "Refutation":
        atts = tuple(
            Attempt(a["vertex"], a["failure"], tuple(a["witness"]),
                    cls.from_dict(a["refutation"]) if "refutation" in a else None)
            for a in data["attempts"])
        return cls(tuple(data["vertices"]), atts)

    def failures(self) -> dict[str, str]:
        return {a.vertex: a.failure for a in self.attempts}


# -- shedding tests ------------------------------------------------------------

def _dominating_independent(bg: BitGraph, region: int, targets: int) -> int | None:
    """An independent C within ``region`` adjacent to every target, or None."""

    def rec(chosen: int, allowed: int, remaining: int):
        if not remaining:
            return chosen
        best, best_opts = -1, None
        for t in iter_bits(remaining):
            opts = bg.adj[t] & allowed
            if best_opts is None or opts.bit_count() < best_opts.bit_count():
                best, best_opts = t, opts
                if not opts:
                    return None
        for c in iter_bits(best_opts):
            got = rec(chosen | (1 << c), allowed & ~bg.closed(c, allowed), remaining & ~bg.adj[c])
            if got is not None:
                return got
        return None

    return rec(0, region, targets)


def _shedding_witness(bg: BitGraph, mask: int, x: int) -> int | None:
    """None when x is shedding in G[mask]; otherwise a violating independent set."""
    region = mask & ~bg.closed(x, mask)
    return _dominating_independent(bg, region, bg.adj[x] & mask)


def _dominated(bg: BitGraph, mask: int, x: int) -> bool:
    nx = bg.closed(x, mask)
    for y in iter_bits(bg.adj[x] & mask):
        if bg.closed(y, mask) & ~nx == 0:
            return True
    return False


def is_shedding_vertex(G: Graph, x: str) -> tuple[bool, frozenset[str] | None]:
    if x not in G:
        raise GraphError(f"unknown vertex {x!r}")
    bg = BitGraph(G)
    w = _shedding_witness(bg, bg.full, bg.index[x])
    if w is None:
        return True, None
    return False, frozenset(bg.labels_of(w))


def dominated_shedding(G: Graph, x: str) -> bool:
    """True if some other vertex's closed neighbourhood lies inside N[x] (sufficient, not necessary)."""
    bg = BitGraph(G)
    return _dominated(bg, bg.full, bg.index[x])


def shedding_vertices(G: Graph) -> list[str]:
    bg = BitGraph(G)
    return [bg.labels[x] for x in range(len(bg.labels)) if _shedding_witness(bg, bg.full, x) is None]


# -- exhaustive checker ---------------------------------------------------------

class _Search:
    def __init__(self, bg: BitGraph, max_states: int):
        self.bg = bg
        self.memo: dict[int, Certificate | Refutation] = {}
        self.max_states = max_states

    def order(self, mask: int) -> list[int]:
        bg = self.bg
        verts = list(iter_bits(mask))
        return sorted(verts, key=lambda v: (not _dominated(bg, mask, v), -(bg.adj[v] & mask).bit_count(), v))

    def run(self, mask: int):
        bg = self.bg
        mask = bg.strip(mask)
        if not mask:
            return EDGELESS
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        if len(self.memo) >= self.max_states:
            raise VDBudgetError(f"more than {self.max_states} search states")
        attempts = []
        result = None
        for x in self.order(mask):
            w = _shedding_witness(bg, mask, x)
            if w is not None:
                attempts.append(Attempt(bg.labels[x], "not-shedding", tuple(bg.labels_of(w))))
                continue
            dmask = mask & ~(1 << x)
            d = self.run(dmask)
            if isinstance(d, Refutation):
                attempts.append(Attempt(bg.labels[x], "del-branch", tuple(bg.labels_of(bg.strip(dmask))), d))
                continue
            lmask = mask & ~bg.closed(x, mask)
            lk = self.run(lmask)
            if isinstance(lk, Refutation):
                attempts.append(Attempt(bg.labels[x], "link-branch", tuple(bg.labels_of(bg.strip(lmask))), lk))
                continue
            result = Certificate(bg.labels[x], d, lk)
            break
        if result is None:
            result = Refutation(tuple(bg.labels_of(mask)), tuple(attempts))
        self.memo[mask] = result
        return result


def is_vertex_decomposable(G: Graph, max_vertices: int = 24,
                           max_states: int = 500_000) -> Certificate | Refutation:
    """Exhaustive memoised search over shedding vertices.

    Returns a :class:`Certificate` when G is vertex decomposable and a
    :class:`Refutation` listing, for every vertex, why it cannot be the
    first shedding vertex.
    """
    if len(G.vertices) > max_vertices:
        raise VDBudgetError(f"{len(G.vertices)} vertices exceeds the budget of {max_vertices}")
    bg = BitGraph(G)
    out = _Search(bg, max_states).run(bg.full)
    if isinstance(out, Refutation):
        isolated = [v for v in G.vertices if not G.adjacency[v]]
        out = Refutation(tuple(G.vertices),
                         out.attempts + tuple(Attempt(v, "not-shedding", ()) for v in isolated))
    return out


# -- replay ---------------------------------------------------------------------

def replay_certificate(G: Graph, cert: Certificate) -> bool:
    """Re-derive vertex decomposability from ``cert`` without any search."""
    bg = BitGraph(G)
    done: set[tuple[int, int]] = set()

    def check(node: Certificate, mask: int) -> bool:
        mask = bg.strip(mask)
        if node.is_edgeless:
            return mask == 0
        key = (id(node), mask)
        if key in done:
            return True
        x = bg.index.get(node.vertex)
        if x is None or not (mask >> x) & 1:
            return False
        if not _dominated(bg, mask, x) and _shedding_witness(bg, mask, x) is not None:
            return False
        ok = check(node.delete, mask & ~(1 << x)) and check(node.link, mask & ~bg.closed(x, mask))
        if ok:
            done.add(key)
        return ok

    return check(cert, bg.full)


def validate_refutation(G: Graph, ref: Refutation) -> bool:
    """Check every recorded failure, recursing into failing branches."""
    bg = BitGraph(G)
    done: set[tuple[int, int]] = set()

    def check(r: Refutation, mask: int, top: bool) -> bool:
        key = (id(r), mask)
        if key in done:
            return True
        core = bg.strip(mask)
        if not core:
            return False
        by_vertex = {a.vertex: a for a in r.attempts}
        if any(v not in by_vertex for v in bg.labels_of(core)):
            return False
        for a in r.attempts:
            x = bg.index.get(a.vertex)
            if x is None or not (mask >> x) & 1:
                return False
            if not top and not (core >> x) & 1:
                return False
            if a.failure == "not-shedding":
                try:
                    c = bg.mask_of(a.witness)
                except KeyError:
                    return False
                region = mask & ~bg.closed(x, mask)
                if c & ~region or not bg.is_independent(c):
                    return False
                if any(not bg.adj[y] & c for y in iter_bits(bg.adj[x] & mask)):
                    return False
            elif a.failure == "del-branch":
                if a.sub is None or not check(a.sub, bg.strip(core & ~(1 << x)), False):
                    return False
            elif a.failure == "link-branch":
                if a.sub is None or not check(a.sub, bg.strip(core & ~bg.closed(x, core)), False):
                    return False
            else:
                return False
        done.add(key)
        return True

    return check(ref, bg.full, True)


# -- guided certificates for gadgets -----------------------------------------------

def _positive_leaf(G: Graph, k: Sequence[int]) -> tuple[str, str] | None:
    deg = {v: 0 for v in G.vertices}
    for (u, v), w in zip(G.edges, k):
        if w > 0:
            deg[u] += 1
            deg[v] += 1
    for a in G.vertices:
        if deg[a] == 1:
            for (u, v), w in zip(G.edges, k):
                if w > 0 and a in (u, v):
                    return a, (v if u == a else u)
    return None


class _ForestGuide:
    """Certificates for states of the form: gadget(G, k) up to per-vertex layer shifts.

    A state is the actual vertex mask together with the weights ``k`` on the
    fixed base graph and, for each base vertex, the offset between the layer
    numbering of gadget(G, k) and the actual labels.  The positive-weight
    edges must form a forest.
    """

    def __init__(self, G: Graph, bg: BitGraph):
        self.G = G
        self.bg = bg
        self.memo: dict[int, Certificate] = {}

    def build(self, mask: int, k: tuple[int, ...], shift: dict[str, int]) -> Certificate:
        bg = self.bg
        mask = bg.strip(mask)
        if not mask:
            return EDGELESS
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        pick = _positive_leaf(self.G, k)
        if pick is None:
            raise CertificateError("state has edges but its weighted base has no positive leaf")
        _, b = pick
        x = bg.index[layer_label(b, 1 + shift.get(b, 0))]
        if not (mask >> x) & 1:
            raise CertificateError(f"{bg.labels[x]} missing from state")
        k_del = collapse_tuple(self.G, k, b)
        s_del = dict(shift)
        s_del[b] = s_del.get(b, 0) + 1
        k_lnk, extra = link_tuple(self.G, k, b)
        s_lnk = dict(shift)
        for y, s in extra.items():
            s_lnk[y] = s_lnk.get(y, 0) + s
        cert = Certificate(bg.labels[x],
                           self.build(mask & ~(1 << x), k_del, s_del),
                           self.build(mask & ~bg.closed(x, mask), k_lnk, s_lnk))
        self.memo[mask] = cert
        return cert


def guided_vd_tree_gadget(G: Graph, ktuple: Sequence[int]) -> Certificate:
    """Certificate for gadget(G, k) on a tree or forest, shedding support@1 at a leaf each step.

    Never searches or backtracks: the deletion branch follows the leaf
    collapse and the link branch follows the link decomposition.
    """
    if not classify(G).is_forest:
        raise GraphError("base graph must be a tree or forest")
    lg = build_gadget(G, ktuple)
    bg = BitGraph(lg.graph)
    return _ForestGuide(G, bg).build(bg.full, lg.ktuple, {})


def find_cycle_whisker(G: Graph) -> tuple[str, str] | None:
    cyc = set(cycle_vertices(G))
    for a in G.vertices:
        if G.degree(a) == 1:
            (b,) = G.adjacency[a]
            if b in cyc:
                return a, b
    return None


def guided_vd_unicyclic(G: Graph, k: int, whisker: tuple[str, str] | None = None) -> Certificate:
    """Certificate for the uniform gadget of a whiskered unicyclic graph.

    Sheds b@1, ..., b@k in turn, where {a, b} is a whisker with b on the
    cycle.  Every link branch and the final deletion are forest gadgets,
    handled by the tree guide with explicit layer shifts.
    """
    cls = classify(G)
    if cls.kind != "unicyclic":
        raise GraphError("graph is not unicyclic")
    if cls.cycle_length in (3, 5):
        raise GraphError(f"cycle length {cls.cycle_length} is excluded")
    if whisker is None:
        whisker = find_cycle_whisker(G)
    if whisker is None:
        raise GraphError("no whisker attached to the cycle")
    a, b = whisker
    if G.degree(a) != 1 or not G.has_edge(a, b) or b not in cycle_vertices(G):
        raise GraphError(f"{whisker} is not a whisker on the cycle")
    if k < 0:
        raise GraphError("k must be non-negative")
    lg = build_gadget(G, uniform(G, k))
    bg = BitGraph(lg.graph)
    guide = _ForestGuide(G, bg)
    nbrs = G.adjacency[b]

    def weights(inner: int) -> tuple[int, ...]:
        out = []
        for u, v in G.edges:
            if b in (u, v):
                out.append(0)
            elif u in nbrs or v in nbrs:
                out.append(inner)
            else:
                out.append(k)
        return tuple(out)

    layers = [bg.index[layer_label(b, i)] for i in range(1, k + 1)]
    psi = [bg.full]
    for x in layers:
        psi.append(psi[-1] & ~(1 << x))
    cert = guide.build(psi[k], weights(k), {})
    for i in range(k, 0, -1):
        x = layers[i - 1]
        phi = psi[i - 1] & ~bg.closed(x, psi[i - 1])
        link_cert = guide.build(phi, weights(i - 1), {y: k + 1 - i for y in nbrs})
        cert = Certificate(bg.labels[x], cert, link_cert)
    return cert
