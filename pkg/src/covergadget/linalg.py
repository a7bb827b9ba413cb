"""Exact rank of integer matrices by fraction-free elimination."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()} if g > 1 else row


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over the rationals of a matrix given as sparse rows ``{column: value}``.

    Each elimination step replaces r by p*r - a*pivot and divides out the
    row content, so entries stay integral and small.
    """
    work = [dict((c, v) for c, v in r.items() if v) for r in rows]
    work = [r for r in work if r]
    rank = 0
    while work:
        # sparsest row first limits fill-in
        k = min(range(len(work)), key=lambda i: len(work[i]))
        piv = work[k]
        work[k] = work[-1]
        work.pop()
        col = min(piv, key=lambda c: (abs(piv[c]), c))
        p = piv[col]
        rank += 1
        nxt = []
        for r in work:
            a = r.get(col)
            if not a:
                nxt.append(r)
                continue
            new = {}
            for c in r.keys() | piv.keys():
                v = p * r.get(c, 0) - a * piv.get(c, 0)
                if v:
                    new[c] = v
            if new:
                nxt.append(_normalize(new))
        work = nxt
    return rank


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    return sparse_rank({j: v for j, v in enumerate(row) if v} for row in matrix)
