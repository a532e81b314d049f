"""Backtracking enumeration of degree-constrained subgraphs made of paths and loops.

Shared engine behind the grid FPL and triangle TFPL enumerators. Vertices are
processed in a fixed order; when a vertex is reached, every edge to an
earlier vertex has been decided, and a subset of its free edges to later
vertices is chosen so that its degree hits the target exactly. Path ends are
tracked with a ``mate`` table so that a path whose two ends are terminals
(target degree 1) can be accepted or rejected the moment it closes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterator, Sequence


@dataclass(frozen=True)
class LoopSolution:
    edges: frozenset  # frozenset of (u, v) vertex pairs, each pair sorted
    pairs: tuple  # terminal pairs joined by a path, each sorted
    loops: int


class LoopSearch:
    """Enumerate subgraphs where each vertex has a prescribed degree.

    ``fixed`` edges are always present, ``free`` edges may be chosen; any
    other pair is absent. Vertices with target degree 1 are terminals;
    ``pair_ok(a, b)`` decides whether a path may join terminals ``a`` and
    ``b``. Closed loops are allowed unless ``allow_loops`` is false.
    """

    def __init__(
        self,
        order: Sequence[Hashable],
        target: dict,
        fixed: Sequence[tuple],
        free: Sequence[tuple],
        pair_ok: Callable[[Hashable, Hashable], bool] | None = None,
        allow_loops: bool = True,
    ):
        self.order = list(order)
        self.index = {v: i for i, v in enumerate(self.order)}
        if len(self.index) != len(self.order):
            raise ValueError("duplicate vertex in order")
        self.target = [target[v] for v in self.order]
        self.fixed = [self._ranked(e) for e in fixed]
        self.forward: list[list[tuple[int, int]]] = [[] for _ in self.order]
        for e in free:
            a, b = self._ranked(e)
            self.forward[a].append((a, b))
        self.pair_ok = pair_ok or (lambda a, b: True)
        self.allow_loops = allow_loops

    def _ranked(self, edge: tuple) -> tuple[int, int]:
        a, b = self.index[edge[0]], self.index[edge[1]]
        return (a, b) if a < b else (b, a)

    def solutions(self) -> Iterator[LoopSolution]:
        size = len(self.order)
        target = self.target
        deg = [0] * size
        mate = list(range(size))
        chosen: list[tuple[int, int]] = []
        pairs: list[tuple[int, int]] = []
        loops = [0]
        order = self.order
        pair_ok = self.pair_ok

        def add(a: int, b: int):
            if deg[a] >= target[a] or deg[b] >= target[b]:
                return None
            pa, pb = mate[a], mate[b]
            if pa == b:
                if not self.allow_loops:
                    return None
                deg[a] += 1
                deg[b] += 1
                loops[0] += 1
                return (a, b, -1, -1, 0, 0, False)
            old_a, old_b = mate[pa], mate[pb]
            deg[a] += 1
            deg[b] += 1
            mate[pa], mate[pb] = pb, pa
            closed = deg[pa] == target[pa] and deg[pb] == target[pb]
            if closed:
                if not pair_ok(order[pa], order[pb]):
                    deg[a] -= 1
                    deg[b] -= 1
                    mate[pa], mate[pb] = old_a, old_b
                    return None
                pairs.append((pa, pb))
            return (a, b, pa, pb, old_a, old_b, closed)

        def undo(record) -> None:
            a, b, pa, pb, old_a, old_b, closed = record
            deg[a] -= 1
            deg[b] -= 1
            if pa < 0:
                loops[0] -= 1
                return
            if closed:
                pairs.pop()
            mate[pb] = old_b
            mate[pa] = old_a

        base = []
        for a, b in self.fixed:
            rec = add(a, b)
            if rec is None:
                for r in reversed(base):
                    undo(r)
                return
            base.append(rec)

        def snapshot() -> LoopSolution:
            edges = [(order[a], order[b]) for a, b in chosen]
            edges += [(order[a], order[b]) for a, b in self.fixed]
            return LoopSolution(
                edges=frozenset(tuple(sorted(e)) for e in edges),
                pairs=tuple(sorted(tuple(sorted((order[a], order[b]))) for a, b in pairs)),
                loops=loops[0],
            )

        def visit(i: int) -> Iterator[LoopSolution]:
            if i == size:
                yield snapshot()
                return
            need = target[i] - deg[i]
            if need == 0:
                yield from visit(i + 1)
                return
            options = self.forward[i]
            if need < 0 or need > len(options):
                return
            for combo in combinations(options, need):
                done = []
                for a, b in combo:
                    rec = add(a, b)
                    if rec is None:
                        break
                    done.append(rec)
                else:
                    chosen.extend(combo)
                    yield from visit(i + 1)
                    del chosen[len(chosen) - need:]
                for rec in reversed(done):
                    undo(rec)

        yield from visit(0)
        for r in reversed(base):
            undo(r)
