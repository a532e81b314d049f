"""Fully packed loop configurations on the n x n grid with periodic boundary.

Grid vertices are ``(x, y)`` with ``0 <= x, y < n`` and ``y`` pointing up.
An external edge joins a boundary vertex to the point just outside the grid,
e.g. ``(0, y)`` to ``(-1, y)``. Walking counterclockwise around the grid from
the topmost edge of the left side (down the left side, along the bottom, up
the right side, back along the top) every other external edge is selected,
starting with that first one; the selected edges are numbered ``1..2n`` in
the same walk.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from ._loops import LoopSearch
from .dyck import DyckWord, enumerate_dyck, linkpattern_to_word

DEFAULT_MAX_N = 7

Point = tuple[int, int]
Edge = tuple[Point, Point]


class EnumerationBoundError(ValueError):
    """Raised when a requested size exceeds the configured enumeration bound."""


def check_bound(n: int, max_n: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what}: size must be nonnegative, got {n}")
    if n > max_n:
        raise EnumerationBoundError(
            f"{what}: size {n} exceeds the enumeration bound {max_n}; raise the bound explicitly"
        )


def _sorted_edge(p: Point, q: Point) -> Edge:
    return (p, q) if p <= q else (q, p)


def external_edges(n: int) -> list[Edge]:
    """The ``2n`` selected external edges, in numbering order (label = index + 1)."""
    ring = []
    for y in range(n - 1, -1, -1):
        ring.append(((0, y), (-1, y)))
    for x in range(n):
        ring.append(((x, 0), (x, -1)))
    for y in range(n):
        ring.append(((n - 1, y), (n, y)))
    for x in range(n - 1, -1, -1):
        ring.append(((x, n - 1), (x, n)))
    return [ring[k] for k in range(0, 4 * n, 2)]


@dataclass(frozen=True)
class GridFPL:
    n: int
    edges: frozenset  # sorted point pairs, external edges included

    def degree(self, v: Point) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_valid(self) -> bool:
        ext = {_sorted_edge(*e) for e in external_edges(self.n)}
        inside = lambda p: 0 <= p[0] < self.n and 0 <= p[1] < self.n
        for p, q in self.edges:
            if abs(p[0] - q[0]) + abs(p[1] - q[1]) != 1:
                return False
            if not (inside(p) and inside(q)) and (p, q) not in ext:
                return False
        if not ext <= self.edges:
            return False
        deg = Counter(v for e in self.edges for v in e)
        return all(deg[(x, y)] == 2 for x in range(self.n) for y in range(self.n))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[*p, *q] for p, q in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: dict | str) -> GridFPL:
        if isinstance(data, str):
            data = json.loads(data)
        edges = frozenset(_sorted_edge((e[0], e[1]), (e[2], e[3])) for e in data["edges"])
        return cls(int(data["n"]), edges)


def _search(n: int) -> LoopSearch:
    ext = external_edges(n)
    outer = [e[1] for e in ext]
    grid = [(x, y) for y in range(n - 1, -1, -1) for x in range(n)]
    target = {v: 2 for v in grid}
    target.update({v: 1 for v in outer})
    free = []
    for x, y in grid:
        if x + 1 < n:
            free.append(((x, y), (x + 1, y)))
        if y > 0:
            free.append(((x, y), (x, y - 1)))
    return LoopSearch(outer + grid, target, ext, free)


def enumerate_fpl(n: int, max_n: int = DEFAULT_MAX_N) -> list[GridFPL]:
    """All FPL configurations of size ``n``, sorted by edge list."""
    check_bound(n, max_n, "enumerate_fpl")
    if n == 0:
        return [GridFPL(0, frozenset())]
    found = [GridFPL(n, sol.edges) for sol in _search(n).solutions()]
    return sorted(found, key=lambda f: sorted(f.edges))


def link_pattern(fpl: GridFPL) -> DyckWord:
    """Link pattern of the paths joining the numbered external edges."""
    n = fpl.n
    label = {e[1]: k + 1 for k, e in enumerate(external_edges(n))}
    adj: dict[Point, list[Point]] = {}
    for p, q in fpl.edges:
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)
    pairs, seen = [], set()
    for start in label:
        if start in seen:
            continue
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if cur in label:
                break
        seen.update((start, cur))
        pairs.append((label[start], label[cur]))
    return linkpattern_to_word(pairs, n)


@lru_cache(maxsize=None)
def fpl_census(n: int, max_n: int = DEFAULT_MAX_N) -> dict[str, int]:
    """``A_pi`` for every link pattern of size ``n`` (zeros included)."""
    check_bound(n, max_n, "fpl_census")
    counts = Counter({w: 0 for w in enumerate_dyck(n)})
    if n == 0:
        counts[DyckWord("")] = 1
        return dict(counts)
    ext = external_edges(n)
    label = {e[1]: k + 1 for k, e in enumerate(ext)}
    for sol in _search(n).solutions():
        counts[linkpattern_to_word([(label[a], label[b]) for a, b in sol.pairs], n)] += 1
    return dict(counts)


def a_pi(pi: str, max_n: int = DEFAULT_MAX_N) -> int:
    """Number of FPLs of size ``len(pi) / 2`` with link pattern ``pi``."""
    pi = DyckWord(pi)
    return fpl_census(pi.n, max_n)[pi]


def pi_union_m(pi: str, m: int) -> DyckWord:
    """``pi`` surrounded by ``m`` nested arcs: the word ``0^m pi 1^m``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return DyckWord("0" * m + DyckWord(pi) + "1" * m)


def a_pi_m(pi: str, m: int, max_n: int = DEFAULT_MAX_N) -> int:
    return a_pi(pi_union_m(pi, m), max_n)
