"""Graded Betti numbers of monomial ideals from simplicial homology.

Two exact engines are provided.

``koszul``
    For each multidegree b, beta_{i,b}(I) is the rank of the reduced
    homology H_{i-1} of the upper Koszul complex
    K^b = {F squarefree : x^(b-F) in I}.  Only b below the coordinatewise
    maximum of the generators can contribute (otherwise K^b is a cone), and
    complexes are cached by their face pattern, so the whole box is handled
    with a few numpy passes.

``hochster``
    Polarize, take the Stanley-Reisner complex D of the squarefree ideal,
    and sum rank H_{|s|-i-2}(D restricted to s) over vertex subsets s.
    Only unions of generator supports are visited; any other restriction is
    a cone.

Both count dimensions over the rationals with exact integer elimination.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from ._bits import iter_bits
from .complex import SimplicialComplex
from .ideal import MonomialIdeal, alexander_dual, component, polarize
from .linalg import sparse_rank


class BettiBudgetError(RuntimeError):
    pass


HOCHSTER_MAX_VARS = 16
KOSZUL_MAX_CELLS = 4_000_000
KOSZUL_MAX_VARS = 14


@dataclass
class BettiTable:
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    ideal: str = ""

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(j - i for i, j in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def to_dict(self) -> dict:
        return {"beta": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        return cls({(i, j): v for i, j, v in data["beta"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def text(self) -> str:
        """Macaulay-style table: column i, row j - i."""
        if not self.entries:
            return "0"
        cols = range(max(i for i, _ in self.entries) + 1)
        rows = sorted({j - i for i, j in self.entries})
        cells = [[str(self[i, i + r]) if self[i, i + r] else "." for i in cols] for r in rows]
        totals = [str(self.total(i)) for i in cols]
        width = max(len(c) for c in [*totals, *(c for row in cells for c in row)])
        lab = len("total:")
        def line(head, items):
            return head.rjust(lab) + "".join(" " + c.rjust(width) for c in items)
        lines = [line("", [str(i) for i in cols]), line("total:", totals)]
        lines += [line(f"{r}:", row) for r, row in zip(rows, cells)]
        return "\n".join(lines)


# -- homology ----------------------------------------------------------------------

def homology_of_faces(faces) -> dict[int, int]:
    """Reduced homology ranks of a complex given as a collection of face bitmasks.

    The collection must be closed under subsets; an empty collection is the
    void complex, which has no homology.
    """
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_dim[f.bit_count() - 1].append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index.get(d - 1, {})
        rows = []
        for f in by_dim[d]:
            row = {}
            for pos, v in enumerate(iter_bits(f)):
                row[lower[f & ~(1 << v)]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[d] = sparse_rank(rows)
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


@lru_cache(maxsize=200_000)
def _homology_cached(faces: frozenset[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(homology_of_faces(faces).items()))


def reduced_homology(D: SimplicialComplex, sigma=None, max_vertices: int = 20) -> dict[int, int]:
    """Ranks of reduced homology of D (restricted to ``sigma`` if given), keyed by dimension."""
    if sigma is not None:
        D = D.restrict(sigma)
    verts = sorted(D.vertices)
    if len(verts) > max_vertices:
        raise BettiBudgetError(f"{len(verts)} vertices exceeds the homology budget of {max_vertices}")
    pos = {v: i for i, v in enumerate(verts)}
    faces = set()
    for f in D.facets:
        bits = [1 << pos[v] for v in f]
        for r in range(len(bits) + 1):
            for c in combinations(bits, r):
                faces.add(sum(c))
    return homology_of_faces(faces)


def euler_characteristic(D: SimplicialComplex) -> int:
    """Reduced Euler characteristic: alternating face count including the empty face."""
    return sum((-1) ** (len(f) - 1) for f in D.faces())


# -- Stanley-Reisner / Hochster ------------------------------------------------------

def stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """Complex of subsets whose product avoids I; facets are complements of dual generators."""
    if not I.is_squarefree:
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
    dual = alexander_dual(I)
    ground = frozenset(I.vars)
    facets = tuple(ground - s for s in dual.supports())
    return SimplicialComplex(facets, I.vars)


def _union_closure(masks: list[int]) -> set[int]:
    closed: set[int] = set()
    for m in masks:
        closed |= {m | c for c in closed}
        closed.add(m)
    return closed


def _restricted_faces(sigma: int, gens: list[int]) -> set[int]:
    inside = [g for g in gens if g & ~sigma == 0]
    faces = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for f in frontier:
            hi = f.bit_length()
            for v in iter_bits(sigma >> hi):
                g = f | (1 << (v + hi))
                if not any(h & ~g == 0 for h in inside):
                    faces.add(g)
                    nxt.append(g)
        frontier = nxt
    return faces


def betti_hochster(I: MonomialIdeal, max_vars: int = HOCHSTER_MAX_VARS) -> BettiTable:
    if I.is_zero:
        return BettiTable({}, str(I))
    P = polarize(I)
    if any(not any(g) for g in P.gens):
        return BettiTable({(0, 0): 1}, str(I))
    if len(P.vars) > max_vars:
        raise BettiBudgetError(f"{len(P.vars)} polarized variables exceeds the budget of {max_vars}")
    gens = [sum(1 << i for i, e in enumerate(g) if e) for g in P.gens]
    table: dict[tuple[int, int], int] = defaultdict(int)
    for sigma in _union_closure(gens):
        size = sigma.bit_count()
        for d, r in _homology_cached(frozenset(_restricted_faces(sigma, gens))):
            i = size - d - 2
            if i >= 0:
                table[i, size] += r
    return BettiTable(dict(table), str(I))


# -- upper Koszul engine ---------------------------------------------------------------

def _koszul_patterns(gens: np.ndarray, min_degree: int = 0, max_cells: int = KOSZUL_MAX_CELLS):
    """Yield (face bitmasks, |b|, multiplicity) over multidegrees b <= max(gens) with x^b in <gens>.

    Faces are subsets F of the used variables with x^(b-F) in <gens> and
    |b| - |F| >= ``min_degree``.
    """
    used = np.flatnonzero(gens.max(axis=0) > 0)
    g = gens[:, used]
    n = len(used)
    top = g.max(axis=0)
    shape = tuple(int(t) + 1 for t in top)
    cells = int(np.prod(shape, dtype=np.int64))
    if cells > max_cells:
        raise BettiBudgetError(f"multidegree box of {cells} cells exceeds the budget of {max_cells}")
    if n > KOSZUL_MAX_VARS:
        raise BettiBudgetError(f"{n} variables in use exceeds the budget of {KOSZUL_MAX_VARS}")
    member = np.zeros(shape, dtype=bool)
    member[tuple(g.T)] = True
    for ax in range(n):
        member = np.logical_or.accumulate(member, axis=ax)
    deg = np.indices(shape).sum(axis=0)
    live = member & (deg >= min_degree)
    idx = np.flatnonzero(live)
    if idx.size == 0:
        return
    nwords = max(1, (1 << n) // 64 + (1 if (1 << n) % 64 else 0))
    words = np.zeros((idx.size, nwords), dtype=np.uint64)
    for F in range(1 << n):
        shifted = np.zeros(shape, dtype=bool)
        dst, src = [], []
        for v in range(n):
            if (F >> v) & 1:
                dst.append(slice(1, None))
                src.append(slice(0, -1))
            else:
                dst.append(slice(None))
                src.append(slice(None))
        shifted[tuple(dst)] = member[tuple(src)]
        bit = shifted.ravel()[idx].astype(np.uint64) << np.uint64(F % 64)
        words[:, F // 64] |= bit
    rows = np.concatenate([words, deg.ravel()[idx].astype(np.uint64)[:, None]], axis=1)
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    for row, cnt in zip(uniq, counts):
        total = int(row[-1])
        faces = []
        for w in range(nwords):
            word = int(row[w])
            for b in iter_bits(word):
                F = w * 64 + b
                if total - F.bit_count() >= min_degree:
                    faces.append(F)
        yield frozenset(faces), total, int(cnt)


def betti_koszul(I: MonomialIdeal, max_cells: int = KOSZUL_MAX_CELLS) -> BettiTable:
    if I.is_zero:
        return BettiTable({}, str(I))
    gens = np.array(I.gens, dtype=np.int64)
    if not gens.any(axis=1).all():
        return BettiTable({(0, 0): 1}, str(I))
    table: dict[tuple[int, int], int] = defaultdict(int)
    for faces, total, cnt in _koszul_patterns(gens, 0, max_cells):
        for d, r in _homology_cached(faces):
            table[d + 1, total] += r * cnt
    return BettiTable(dict(table), str(I))


def betti_table(I: MonomialIdeal, method: str = "koszul") -> BettiTable:
    if method == "koszul":
        return betti_koszul(I)
    if method == "hochster":
        return betti_hochster(I)
    raise ValueError(f"unknown method {method!r}")


def regularity(I: MonomialIdeal, method: str = "koszul") -> int:
    if I.is_zero:
        raise ValueError("regularity of the zero ideal is undefined here")
    return betti_table(I, method).regularity


def _equigenerated_degree(I: MonomialIdeal) -> int:
    degs = set(I.degrees)
    if len(degs) != 1:
        raise ValueError(f"ideal is not generated in a single degree (degrees {sorted(degs)})")
    return degs.pop()


def has_linear_resolution(I: MonomialIdeal, method: str = "koszul") -> bool:
    d = _equigenerated_degree(I)
    return all(j - i == d for i, j in betti_table(I, method).entries)


def component_nonlinear_betti(I: MonomialIdeal, j: int) -> dict[tuple[int, int], int]:
    """Betti numbers of the degree-j component off the linear strand.

    With I' the ideal of generators of degree <= j, the upper Koszul complex
    of the component at b is the (|b| - j - 1)-skeleton of K^b(I').  When b
    exceeds max(I') in some coordinate, K^b(I') is a cone, and a skeleton of
    a cone only has homology in its top dimension, which is the linear
    strand.  So the off-strand numbers are found inside the small box of I'.
    """
    low = [g for g in I.gens if sum(g) <= j]
    if not low:
        return {}
    gens = np.array(low, dtype=np.int64)
    if not gens.any(axis=1).all():
        # unit ideal: the component is m^j, which is linear
        return {}
    out: dict[tuple[int, int], int] = defaultdict(int)
    for faces, total, cnt in _koszul_patterns(gens, j):
        for d, r in _homology_cached(faces):
            if total - (d + 1) != j:
                out[d + 1, total] += r * cnt
    return dict(out)


def is_componentwise_linear(I: MonomialIdeal, method: str = "reduced") -> tuple[bool, dict[int, bool]]:
    """Check that each component I_<j> has a linear resolution.

    Degrees from the lowest to the highest generator degree are examined;
    beyond that every component is m times the previous one, and m times
    an ideal with linear resolution again has linear resolution.

    ``method="reduced"`` uses :func:`component_nonlinear_betti`; any Betti
    engine name instead materializes each component and tabulates it fully.
    """
    if I.is_zero:
        return True, {}
    degs = I.degrees
    span = range(min(degs), max(degs) + 1)
    if method == "reduced":
        report = {j: not component_nonlinear_betti(I, j) for j in span}
    else:
        report = {j: has_linear_resolution(component(I, j), method) for j in span}
    return all(report.values()), report
