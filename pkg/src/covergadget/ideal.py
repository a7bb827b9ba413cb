"""Monomial ideals stored by minimal generators.

Monomials are exponent tuples aligned with the ideal's variable registry.
Every constructor minimalizes, so ``gens`` is always an antichain under
divisibility, sorted by degree and then lexicographically (x1 > x2 > ...).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from ._bits import BitGraph
from .gadget import layer_label, polarization_naming, split_label
from .graph import Graph

Monomial = tuple[int, ...]


class IdealError(ValueError):
    pass


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _order_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=_order_key)
    kept: list[Monomial] = []
    for g in uniq:
        d = sum(g)
        if not any(sum(h) < d and divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    vars: tuple[str, ...]
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        vars_ = tuple(self.vars)
        if len(set(vars_)) != len(vars_):
            raise IdealError("duplicate variable names")
        gens = [tuple(int(e) for e in g) for g in self.gens]
        for g in gens:
            if len(g) != len(vars_) or min(g, default=0) < 0:
                raise IdealError(f"bad exponent vector {g}")
        object.__setattr__(self, "vars", vars_)
        object.__setattr__(self, "gens", minimalize(gens))

    # construction helpers
    @classmethod
    def from_monomials(cls, vars: Sequence[str], monos: Iterable[dict[str, int]]) -> "MonomialIdeal":
        pos = {v: i for i, v in enumerate(vars)}
        gens = []
        for m in monos:
            e = [0] * len(pos)
            for v, x in m.items():
                if v not in pos:
                    raise IdealError(f"unknown variable {v!r}")
                e[pos[v]] += x
            gens.append(tuple(e))
        return cls(tuple(vars), tuple(gens))

    @classmethod
    def from_supports(cls, vars: Sequence[str], supports: Iterable[Iterable[str]]) -> "MonomialIdeal":
        return cls.from_monomials(vars, ({v: 1 for v in s} for s in supports))

    def monomials(self) -> list[dict[str, int]]:
        return [{v: e for v, e in zip(self.vars, g) if e} for g in self.gens]

    def supports(self) -> set[frozenset[str]]:
        return {frozenset(v for v, e in zip(self.vars, g) if e) for g in self.gens}

    def to_dict(self) -> dict:
        return {"vars": list(self.vars), "gens": self.monomials()}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        return cls.from_monomials(data["vars"], data["gens"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        def show(g):
            parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, g) if e]
            return "*".join(parts) or "1"
        return "<" + ", ".join(show(g) for g in self.gens) + ">"

    # predicates
    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @property
    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def with_vars(self, vars: Sequence[str]) -> "MonomialIdeal":
        """Same ideal over a registry that contains every variable in use."""
        pos = {v: i for i, v in enumerate(vars)}
        out = []
        for g in self.gens:
            e = [0] * len(pos)
            for v, x in zip(self.vars, g):
                if x:
                    if v not in pos:
                        raise IdealError(f"variable {v!r} missing from registry")
                    e[pos[v]] = x
            out.append(tuple(e))
        return MonomialIdeal(tuple(vars), tuple(out))

    def same_generators(self, other: "MonomialIdeal") -> bool:
        return sorted(map(sorted_items, self.monomials())) == sorted(map(sorted_items, other.monomials()))


def sorted_items(m: dict[str, int]) -> tuple:
    return tuple(sorted(m.items()))


def _align(I: MonomialIdeal, J: MonomialIdeal) -> tuple[MonomialIdeal, MonomialIdeal]:
    if I.vars == J.vars:
        return I, J
    vars_ = I.vars + tuple(v for v in J.vars if v not in I.vars)
    return I.with_vars(vars_), J.with_vars(vars_)


def unit_ideal(vars: Sequence[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(vars), ((0,) * len(vars),))


# -- graph ideals ------------------------------------------------------------

def minimal_vertex_covers(G: Graph) -> list[frozenset[str]]:
    """Complements of the maximal independent sets."""
    bg = BitGraph(G)
    covers = [frozenset(bg.labels_of(bg.full & ~m)) for m in bg.maximal_independent_sets(bg.full)]
    return sorted(covers, key=lambda c: (len(c), sorted(G.index[v] for v in c)))


def cover_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_supports(G.vertices, minimal_vertex_covers(G))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_supports(G.vertices, G.edges)


# -- arithmetic ----------------------------------------------------------------

def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I, J = _align(I, J)
    return MonomialIdeal(I.vars, tuple(tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise IdealError("power needs s >= 1")
    out = I
    for _ in range(s - 1):
        out = multiply(out, I)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I, J = _align(I, J)
    return MonomialIdeal(I.vars, tuple(lcm(g, h) for g in I.gens for h in J.gens))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the primes <x : x | g> over the generators g."""
    if not I.is_squarefree:
        raise IdealError("Alexander dual needs a squarefree ideal")
    n = len(I.vars)
    out = unit_ideal(I.vars)
    for g in I.gens:
        prime = MonomialIdeal(I.vars, tuple(tuple(int(j == i) for j in range(n)) for i in range(n) if g[i]))
        out = intersect(out, prime)
    return out


def symbolic_power_cover(G: Graph, s: int) -> MonomialIdeal:
    """Intersection over the edges {x_i, x_j} of <x_i, x_j>**s."""
    if s < 1:
        raise IdealError("symbolic power needs s >= 1")
    n = len(G.vertices)
    out = unit_ideal(G.vertices)
    for u, v in G.edges:
        i, j = G.index[u], G.index[v]
        gens = []
        for a in range(s + 1):
            e = [0] * n
            e[i], e[j] = a, s - a
            gens.append(tuple(e))
        out = intersect(out, MonomialIdeal(G.vertices, tuple(gens)))
    return out


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Replace each x**m by the product of the layered variables x@1..x@m."""
    top = [max((g[i] for g in I.gens), default=0) for i in range(len(I.vars))]
    vars_ = tuple(layer_label(b, a) for v, m in zip(I.vars, top) for b, a in polarization_naming(v, m))
    pos = {v: i for i, v in enumerate(vars_)}
    out = []
    for g in I.gens:
        e = [0] * len(vars_)
        for v, m in zip(I.vars, g):
            for b, a in polarization_naming(v, m):
                e[pos[layer_label(b, a)]] = 1
        out.append(tuple(e))
    return MonomialIdeal(vars_, tuple(out))


def depolarize(I: MonomialIdeal) -> MonomialIdeal:
    """Inverse of :func:`polarize`: count layers per base variable."""
    bases: list[str] = []
    for v in I.vars:
        b, _ = split_label(v)
        if b not in bases:
            bases.append(b)
    pos = {b: i for i, b in enumerate(bases)}
    out = []
    for g in I.gens:
        e = [0] * len(bases)
        for v, x in zip(I.vars, g):
            if x:
                e[pos[split_label(v)[0]]] += 1
        out.append(tuple(e))
    return MonomialIdeal(tuple(bases), tuple(out))


def _monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """Ideal generated by the degree-j monomials of I."""
    if j < 0:
        raise IdealError("degree must be non-negative")
    n = len(I.vars)
    out = set()
    for g in I.gens:
        d = sum(g)
        if d <= j:
            for m in _monomials_of_degree(n, j - d):
                out.add(tuple(a + b for a, b in zip(g, m)))
    return MonomialIdeal(I.vars, tuple(out))


def max_gen_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise IdealError("zero ideal has no generators")
    return max(I.degrees)


# -- linear quotients ------------------------------------------------------------

def _colon_is_linear(prev: Sequence[Monomial], u: Monomial) -> bool:
    """Is <prev> : u generated by variables?"""
    quotients = [tuple(max(0, a - b) for a, b in zip(g, u)) for g in prev]
    singles = {q.index(1) for q in quotients if sum(q) == 1}
    return all(any(q[i] for i in singles) for q in quotients)


def colon_generators(I: MonomialIdeal, order: Sequence[Monomial], i: int) -> MonomialIdeal:
    """Minimal generators of <u_1..u_{i-1}> : u_i (0-based ``i``)."""
    u = order[i]
    return MonomialIdeal(I.vars, tuple(tuple(max(0, a - b) for a, b in zip(g, u)) for g in order[:i]))


def is_linear_quotients_order(I: MonomialIdeal, order: Sequence[Monomial]) -> bool:
    order = [tuple(g) for g in order]
    if sorted(order) != sorted(I.gens):
        return False
    return all(_colon_is_linear(order[:i], order[i]) for i in range(len(order)))


def linear_quotients_order(I: MonomialIdeal, max_states: int = 1_000_000) -> list[Monomial] | None:
    """Backtracking search for a linear quotients order; None once every order is ruled out.

    Whether a generator can come next depends only on the set already
    placed, so failed sets are remembered.
    """
    gens = list(I.gens)
    r = len(gens)
    if r == 0:
        return []
    full = (1 << r) - 1
    dead: set[int] = set()
    order: list[int] = []

    def dfs(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        if len(dead) > max_states:
            raise RuntimeError("linear quotients search budget exceeded")
        prev = [gens[i] for i in order]
        for i in range(r):
            if not (placed >> i) & 1 and _colon_is_linear(prev, gens[i]):
                order.append(i)
                if dfs(placed | (1 << i)):
                    return True
                order.pop()
        dead.add(placed)
        return False

    if dfs(0):
        return [gens[i] for i in order]
    return None
