"""Simplicial complexes stored by their facets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ._bits import BitGraph
from .graph import Graph


class ComplexError(ValueError):
    pass


def _maximal(sets: Iterable[frozenset]) -> tuple[frozenset, ...]:
    uniq = sorted(set(sets), key=lambda s: (-len(s), sorted(s)))
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s <= t for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Facets plus an ambient ground set.

    ``facets == ()`` is the void complex (no faces at all);
    ``facets == (frozenset(),)`` is the complex whose only face is empty.
    Ground elements that lie in no facet are allowed; the Stanley-Reisner
    complex of an ideal containing a variable has such ghost vertices.
    """

    facets: tuple[frozenset[str], ...]
    ground: tuple[str, ...] = ()

    def __post_init__(self):
        facets = _maximal(frozenset(f) for f in self.facets)
        ground = tuple(self.ground)
        seen = set(ground)
        extra = sorted({v for f in facets for v in f} - seen)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "ground", ground + tuple(extra))

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_face(self, F: Iterable[str]) -> bool:
        F = frozenset(F)
        return any(F <= f for f in self.facets)

    def faces(self):
        """Every face, each exactly once, by increasing size."""
        seen = set()
        top = max((len(f) for f in self.facets), default=-1)
        for size in range(top + 1):
            for f in self.facets:
                for c in combinations(sorted(f), size):
                    if c not in seen:
                        seen.add(c)
                        yield frozenset(c)

    def restrict(self, sigma: Iterable[str]) -> "SimplicialComplex":
        sigma = frozenset(sigma)
        if not self.facets:
            return SimplicialComplex((), tuple(v for v in self.ground if v in sigma))
        return SimplicialComplex(tuple(f & sigma for f in self.facets),
                                 tuple(v for v in self.ground if v in sigma))

    def facet_set(self) -> set[frozenset[str]]:
        return set(self.facets)


def independence_complex(G: Graph) -> SimplicialComplex:
    bg = BitGraph(G)
    facets = [frozenset(bg.labels_of(m)) for m in bg.maximal_independent_sets(bg.full)]
    return SimplicialComplex(tuple(facets), G.vertices)


def deletion(D: SimplicialComplex, F: Iterable[str]) -> SimplicialComplex:
    F = frozenset(F)
    if not D.facets:
        return D
    return SimplicialComplex(tuple(f - F for f in D.facets),
                             tuple(v for v in D.ground if v not in F))


def link(D: SimplicialComplex, F: Iterable[str]) -> SimplicialComplex:
    F = frozenset(F)
    if not D.is_face(F):
        raise ComplexError(f"{sorted(F)} is not a face")
    facets = tuple(f - F for f in D.facets if F <= f)
    verts = frozenset().union(*facets)
    return SimplicialComplex(facets, tuple(v for v in D.ground if v in verts))
