"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

from collections import defaultdict
from itertools import chain, combinations, product

import networkx as nx
import sympy

from covergadget.graph import Graph


def subsets(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))


def independent_sets(G: Graph):
    return [frozenset(s) for s in subsets(G.vertices)
            if not any(G.has_edge(u, v) for u, v in combinations(s, 2))]


def maximal_independent_sets(G: Graph):
    ind = independent_sets(G)
    return {s for s in ind if not any(s < t for t in ind)}


def minimal_covers(G: Graph):
    covers = [frozenset(s) for s in subsets(G.vertices)
              if all(u in s or v in s for u, v in G.edges)]
    return {c for c in covers if not any(d < c for d in covers)}


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    return H


def nx_isomorphic(G: Graph, H: Graph) -> bool:
    return nx.is_isomorphic(to_nx(G), to_nx(H))


def vd_by_definition(facets: frozenset[frozenset]) -> bool:
    """Vertex decomposability straight from the facet-level definition."""
    facets = frozenset(facets)
    if len(facets) <= 1:
        return True  # simplex or {empty}
    verts = set().union(*facets)
    for x in verts:
        dele = frozenset(_maximal(f - {x} for f in facets))
        lk = frozenset(_maximal(f - {x} for f in facets if x in f))
        if lk & dele:
            continue  # not shedding: some link facet is a deletion facet
        if vd_by_definition(dele) and vd_by_definition(lk):
            return True
    return False


def _maximal(sets):
    sets = set(map(frozenset, sets))
    return {s for s in sets if not any(s < t for t in sets)}


def rank(matrix) -> int:
    return sympy.Matrix(matrix).rank() if matrix and matrix[0] else 0


def in_symbolic_power(G: Graph, m, s: int) -> bool:
    return all(m[G.index[u]] + m[G.index[v]] >= s for u, v in G.edges)


def minimal_symbolic_generators(G: Graph, s: int):
    """Minimal lattice points of the symbolic power, by enumeration over the box [0, s]^n."""
    n = len(G.vertices)
    members = [m for m in product(range(s + 1), repeat=n) if in_symbolic_power(G, m, s)]
    def below(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))
    return {m for m in members if not any(below(o, m) for o in members)}


def taylor_betti(gens) -> dict[tuple[int, int], int]:
    """Graded Betti numbers from the Taylor complex, reduced strand by strand.

    The Taylor complex splits over lcm multidegrees; within a strand the
    Betti number beta_{i,b} is the homology of the chain complex of subsets
    with that lcm, i.e. the reduced homology of the lower interval.
    """
    gens = [tuple(g) for g in gens]
    r = len(gens)
    by_lcm = defaultdict(lambda: defaultdict(list))
    for size in range(1, r + 1):
        for S in combinations(range(r), size):
            l = tuple(max(gens[i][v] for i in S) for v in range(len(gens[0])))
            by_lcm[l][size].append(S)
    out = defaultdict(int)
    for l, strata in by_lcm.items():
        ranks = {}
        for size in strata:
            if size == 1:
                continue
            lower = {S: i for i, S in enumerate(strata.get(size - 1, []))}
            rows = []
            for S in strata[size]:
                row = [0] * len(lower)
                for pos in range(size):
                    T = S[:pos] + S[pos + 1:]
                    if T in lower:
                        row[lower[T]] = (-1) ** pos
                rows.append(row)
            ranks[size] = rank(rows) if lower else 0
        for size, faces in strata.items():
            b = len(faces) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if b:
                out[size - 1, sum(l)] += b
    return dict(out)


def koszul_betti_complete_intersection(degrees) -> dict[tuple[int, int], int]:
    """Betti numbers of an ideal generated by a regular sequence of the given degrees."""
    out = defaultdict(int)
    for size in range(1, len(degrees) + 1):
        for S in combinations(degrees, size):
            out[size - 1, sum(S)] += 1
    return dict(out)
