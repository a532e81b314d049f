"""Fully packed loops in the triangle ``T^n(sigma, tau)``.

The triangle has vertices ``(x, y)`` with ``x >= y >= 0`` and
``x + y <= 4n - 2``. Row ``y`` runs from the left vertex ``(y, y)`` to the
right vertex ``(4n - 2 - y, y)``; the apex ``(2n - 1, 2n - 1)`` is both the
last left vertex and the first right vertex and never carries an edge.
Bottom stubs ``e_i`` join ``(2i - 2, 0)`` to the point ``(2i - 2, -1)``
below it. A vertex is even or odd with ``x + y``.

Configurations store their edges as sorted point pairs (undirected) or as
``(tail, head)`` pairs (oriented), stubs and fixed boundary edges included.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator

from ._loops import LoopSearch
from .dyck import DyckWord, conjugate, degree, enumerate_dyck, linkpattern_to_word, word_to_linkpattern
from .fpl import check_bound

DEFAULT_MAX_N = 4

Point = tuple[int, int]
Edge = tuple[Point, Point]


def _edge(p: Point, q: Point) -> Edge:
    return (p, q) if p <= q else (q, p)


@dataclass(frozen=True)
class TriangleGraph:
    """The triangle ``T^n(sigma, tau)`` with its boundary constraints."""

    sigma: DyckWord
    tau: DyckWord
    n: int = field(init=False)

    def __post_init__(self):
        sigma, tau = DyckWord(self.sigma), DyckWord(self.tau)
        if sigma.n != tau.n:
            raise ValueError(f"sigma and tau have different sizes ({sigma.n} and {tau.n})")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "n", sigma.n)

    @property
    def top(self) -> int:
        """Largest coordinate sum, ``4n - 2``."""
        return 4 * self.n - 2

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        """Vertices row by row from the bottom, left to right."""
        return tuple((x, y) for y in range(2 * self.n) for x in range(y, self.top - y + 1))

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def left_vertex(self, i: int) -> Point:
        return (i - 1, i - 1)

    def right_vertex(self, i: int) -> Point:
        return (2 * self.n - 2 + i, 2 * self.n - i)

    @cached_property
    def left_vertices(self) -> tuple[Point, ...]:
        return tuple(self.left_vertex(i) for i in range(1, 2 * self.n + 1))

    @cached_property
    def right_vertices(self) -> tuple[Point, ...]:
        return tuple(self.right_vertex(i) for i in range(1, 2 * self.n + 1))

    def is_left(self, v: Point) -> bool:
        return v[0] == v[1]

    def is_right(self, v: Point) -> bool:
        return v[1] >= 0 and v[0] + v[1] == self.top

    def is_inner(self, v: Point) -> bool:
        return v in self.vertex_set and not self.is_left(v) and not self.is_right(v)

    @staticmethod
    def is_even(v: Point) -> bool:
        return (v[0] + v[1]) % 2 == 0

    @cached_property
    def stub_points(self) -> tuple[Point, ...]:
        """Lower ends of the bottom stubs ``e_1 .. e_2n``."""
        return tuple((2 * i - 2, -1) for i in range(1, 2 * self.n + 1))

    def stub_index(self, p: Point) -> int:
        return p[0] // 2 + 1

    @cached_property
    def stubs(self) -> tuple[Edge, ...]:
        return tuple(_edge((x, -1), (x, 0)) for x, _ in self.stub_points)

    @cached_property
    def lattice_edges(self) -> frozenset:
        """Every unit edge between triangle vertices, plus the bottom stubs."""
        out = set(self.stubs)
        vs = self.vertex_set
        for x, y in self.vertices:
            if (x + 1, y) in vs:
                out.add(_edge((x, y), (x + 1, y)))
            if (x, y + 1) in vs:
                out.add(_edge((x, y), (x, y + 1)))
        return frozenset(out)

    @cached_property
    def _boundary(self) -> tuple[frozenset, frozenset]:
        n, top = self.n, self.top
        present = set(self.stubs)
        absent = set()
        for h in range(2 * n - 1):
            present.add(_edge((h, h), (h + 1, h)))
            present.add(_edge((top - h - 1, h), (top - h, h)))
        for i in range(2, 2 * n + 1):
            stub = _edge((i - 1, i - 2), (i - 1, i - 1))
            (present if self.sigma[i - 1] == "0" else absent).add(stub)
        for i in range(1, 2 * n):
            x, y = self.right_vertex(i)
            stub = _edge((x, y - 1), (x, y))
            (present if self.tau[i - 1] == "1" else absent).add(stub)
        if present & absent:
            raise AssertionError("boundary edge both required and forbidden")
        return frozenset(present), frozenset(absent)

    @property
    def fixed_edges(self) -> frozenset:
        return self._boundary[0]

    @property
    def forbidden_edges(self) -> frozenset:
        return self._boundary[1]

    @cached_property
    def free_edges(self) -> frozenset:
        return self.lattice_edges - self.fixed_edges - self.forbidden_edges

    @cached_property
    def target_degree(self) -> dict[Point, int]:
        deg: Counter = Counter()
        for e in self.fixed_edges:
            deg.update(e)
        target = {p: 1 for p in self.stub_points}
        for v in self.vertices:
            target[v] = deg[v] if (self.is_left(v) or self.is_right(v)) else 2
        return target

    def terminal_kind(self, v: Point) -> str | None:
        """``'B'`` for a stub end, ``'L'``/``'R'`` for side vertices of degree 1."""
        if v[1] == -1:
            return "B"
        if self.target_degree.get(v) == 1:
            return "L" if self.is_left(v) else "R"
        return None


def build_triangle(n: int, sigma: str, tau: str) -> TriangleGraph:
    tri = TriangleGraph(DyckWord(sigma), DyckWord(tau))
    if tri.n != n:
        raise ValueError(f"words have size {tri.n}, expected {n}")
    return tri


@dataclass(frozen=True)
class PathClassification:
    left_right: list = field(default_factory=list)
    bottom: list = field(default_factory=list)
    closed: list = field(default_factory=list)
    invalid: list = field(default_factory=list)  # paths joining incompatible ends

    def bottom_pairs(self, tri: TriangleGraph) -> list[tuple[int, int]]:
        return [(tri.stub_index(p[0]), tri.stub_index(p[-1])) for p in self.bottom]


def _trace(adj: dict, start: Point, directed: bool) -> list[Point]:
    """Follow a path or cycle from ``start`` until it ends or closes."""
    path, prev, cur = [start], None, start
    while True:
        nxt = adj.get(cur, []) if directed else [w for w in adj[cur] if w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        if cur == start:
            return path
        path.append(cur)


def _classify(tri: TriangleGraph, pairs: list[Edge], directed: bool) -> PathClassification:
    adj: dict[Point, list[Point]] = {}
    deg: Counter = Counter()
    for p, q in pairs:
        adj.setdefault(p, []).append(q)
        if not directed:
            adj.setdefault(q, []).append(p)
        deg.update((p, q))
    result = PathClassification()
    seen: set = set()
    ends = sorted(v for v in deg if deg[v] == 1)
    if directed:
        ends = [v for v in ends if v in adj]
    for v in ends:
        if v in seen:
            continue
        path = _trace(adj, v, directed)
        seen.update(path)
        a, b = tri.terminal_kind(path[0]), tri.terminal_kind(path[-1])
        if not directed:
            # undirected paths read left to right
            if (a, b) == ("R", "L") or (
                a == b == "B" and tri.stub_index(path[0]) > tri.stub_index(path[-1])
            ):
                path.reverse()
                a, b = b, a
        if {a, b} == {"L", "R"}:
            result.left_right.append(tuple(path))
        elif a == b == "B":
            result.bottom.append(tuple(path))
        else:
            result.invalid.append(tuple(path))
    for v in sorted(deg):
        if v not in seen:
            cycle = _trace(adj, v, directed)
            seen.update(cycle)
            result.closed.append(tuple(cycle))
    return result


def signed_area(cycle) -> int:
    """Twice the signed area of a lattice polygon; positive when counterclockwise."""
    total = 0
    for (x1, y1), (x2, y2) in zip(cycle, cycle[1:] + cycle[:1]):
        total += x1 * y2 - x2 * y1
    return total


@dataclass(frozen=True)
class TFPLConfig:
    sigma: DyckWord
    tau: DyckWord
    pi: DyckWord
    edges: frozenset

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def triangle(self) -> TriangleGraph:
        return _triangle(self.sigma, self.tau)

    def classify(self) -> PathClassification:
        return _classify(self.triangle, list(self.edges), directed=False)

    def link_pattern(self) -> DyckWord | None:
        """Link pattern of the Bottom paths, or ``None`` if some path is invalid."""
        paths = self.classify()
        if paths.invalid:
            return None
        return linkpattern_to_word(paths.bottom_pairs(self.triangle), self.n)

    def is_valid(self) -> bool:
        """Degrees, fixed boundary edges, and the bottom link pattern."""
        tri = self.triangle
        if not self.edges <= tri.lattice_edges:
            return False
        if not tri.fixed_edges <= self.edges or self.edges & tri.forbidden_edges:
            return False
        deg: Counter = Counter(v for e in self.edges for v in e)
        if any(deg[v] != t for v, t in tri.target_degree.items()):
            return False
        return self.link_pattern() == self.pi

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "pi": str(self.pi),
            "edges": [[*p, *q] for p, q in sorted(self.edges)],
            "directed": False,
        }


@dataclass(frozen=True)
class OrientedTFPLConfig:
    sigma: DyckWord
    tau: DyckWord
    pi: DyckWord
    arcs: frozenset  # (tail, head) pairs

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def triangle(self) -> TriangleGraph:
        return _triangle(self.sigma, self.tau)

    def undirected(self) -> TFPLConfig:
        """Forget the orientation; the pattern is read from the graph itself."""
        edges = frozenset(_edge(p, q) for p, q in self.arcs)
        probe = TFPLConfig(self.sigma, self.tau, self.pi, edges)
        pattern = probe.link_pattern()
        return TFPLConfig(self.sigma, self.tau, pattern if pattern is not None else self.pi, edges)

    def classify(self) -> PathClassification:
        return _classify(self.triangle, list(self.arcs), directed=True)

    def is_valid(self) -> bool:
        """Local conditions: in = out = 1 at inner vertices and fixed boundary arcs."""
        tri = self.triangle
        edges = Counter(_edge(p, q) for p, q in self.arcs)
        if any(c > 1 for c in edges.values()) or not set(edges) <= tri.lattice_edges:
            return False
        if not tri.fixed_edges <= set(edges) or set(edges) & tri.forbidden_edges:
            return False
        if not self.arcs >= _required_arcs(tri, self.pi):
            return False
        return all(_in_out(self.arcs, v) == (1, 1) for v in tri.vertices if tri.is_inner(v))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "pi": str(self.pi),
            "edges": [[*p, *q] for p, q in sorted(self.arcs)],
            "directed": True,
        }


def _in_out(arcs, v: Point) -> tuple[int, int]:
    return sum(1 for _, q in arcs if q == v), sum(1 for p, _ in arcs if p == v)


@lru_cache(maxsize=None)
def _triangle(sigma: str, tau: str) -> TriangleGraph:
    return TriangleGraph(DyckWord(sigma), DyckWord(tau))


def _required_arcs(tri: TriangleGraph, pi: str) -> frozenset:
    """Orientation of every fixed boundary edge in an oriented TFPL."""
    arcs = set()
    n, top = tri.n, tri.top
    for h in range(2 * n - 1):
        arcs.add(((h, h), (h + 1, h)))
        arcs.add(((top - h - 1, h), (top - h, h)))
    for i in range(2, 2 * n + 1):
        if tri.sigma[i - 1] == "0":
            arcs.add(((i - 1, i - 2), (i - 1, i - 1)))
    for i in range(1, 2 * n):
        if tri.tau[i - 1] == "1":
            x, y = tri.right_vertex(i)
            arcs.add(((x, y), (x, y - 1)))
    for i, (x, _) in enumerate(tri.stub_points, start=1):
        arcs.add(((x, -1), (x, 0)) if pi[i - 1] == "0" else ((x, 0), (x, -1)))
    return frozenset(arcs)


def _words(sigma, tau, pi=None):
    sigma, tau = DyckWord(sigma), DyckWord(tau)
    if sigma.n != tau.n:
        raise ValueError("sigma and tau must have the same size")
    if pi is None:
        return sigma, tau
    pi = DyckWord(pi)
    if pi.n != sigma.n:
        raise ValueError("pi must have the same size as sigma and tau")
    return sigma, tau, pi


def _search(tri: TriangleGraph, pi: DyckWord | None) -> LoopSearch:
    allowed = set(word_to_linkpattern(pi)) if pi is not None else None
    kind = tri.terminal_kind

    def pair_ok(a: Point, b: Point) -> bool:
        ka, kb = kind(a), kind(b)
        if {ka, kb} == {"L", "R"}:
            return True
        if ka == kb == "B":
            if allowed is None:
                return True
            i, j = sorted((tri.stub_index(a), tri.stub_index(b)))
            return (i, j) in allowed
        return False

    order = list(tri.stub_points) + list(tri.vertices)
    return LoopSearch(order, tri.target_degree, sorted(tri.fixed_edges), sorted(tri.free_edges), pair_ok)


def enumerate_tfpl(sigma: str, tau: str, pi: str, max_n: int = DEFAULT_MAX_N) -> list[TFPLConfig]:
    """All TFPLs with boundary ``sigma``, ``tau`` and link pattern ``pi``."""
    sigma, tau, pi = _words(sigma, tau, pi)
    check_bound(sigma.n, max_n, "enumerate_tfpl")
    if sigma.n == 0:
        return [TFPLConfig(sigma, tau, pi, frozenset())]
    tri = _triangle(sigma, tau)
    found = [TFPLConfig(sigma, tau, pi, sol.edges) for sol in _search(tri, pi).solutions()]
    return sorted(found, key=lambda f: sorted(f.edges))


def tfpl_count(sigma: str, tau: str, pi: str, max_n: int = DEFAULT_MAX_N) -> int:
    sigma, tau, pi = _words(sigma, tau, pi)
    check_bound(sigma.n, max_n, "tfpl_count")
    if sigma.n == 0:
        return 1
    return sum(1 for _ in _search(_triangle(sigma, tau), pi).solutions())


@lru_cache(maxsize=None)
def tfpl_census(sigma: str, tau: str, max_n: int = DEFAULT_MAX_N) -> dict[DyckWord, int]:
    """``t^pi_{sigma, tau}`` for every ``pi``, from a single search over ``T^n(sigma, tau)``."""
    sigma, tau = _words(sigma, tau)
    n = sigma.n
    check_bound(n, max_n, "tfpl_census")
    counts = Counter({w: 0 for w in enumerate_dyck(n)})
    if n == 0:
        counts[DyckWord("")] = 1
        return dict(counts)
    tri = _triangle(sigma, tau)
    for sol in _search(tri, None).solutions():
        pairs = [
            (tri.stub_index(a), tri.stub_index(b)) for a, b in sol.pairs if a[1] == -1 and b[1] == -1
        ]
        counts[linkpattern_to_word(pairs, n)] += 1
    return dict(counts)


def enumerate_oriented_tfpl(
    sigma: str, tau: str, pi: str, max_n: int = DEFAULT_MAX_N
) -> list[OrientedTFPLConfig]:
    """All oriented TFPLs, found by a purely local in/out-degree search.

    No connectivity information is used: every free edge is absent or
    directed either way, and each inner vertex needs exactly one incoming
    and one outgoing arc.
    """
    sigma, tau, pi = _words(sigma, tau, pi)
    n = sigma.n
    check_bound(n, max_n, "enumerate_oriented_tfpl")
    if n == 0:
        return [OrientedTFPLConfig(sigma, tau, pi, frozenset())]
    tri = _triangle(sigma, tau)
    fixed = _required_arcs(tri, pi)
    order = list(tri.vertices)
    rank = {v: i for i, v in enumerate(order)}
    inner = [tri.is_inner(v) for v in order]
    indeg = [0] * len(order)
    outdeg = [0] * len(order)
    for p, q in fixed:
        if q in rank:
            indeg[rank[q]] += 1
        if p in rank:
            outdeg[rank[p]] += 1
    forward: list[list[int]] = [[] for _ in order]
    for p, q in tri.free_edges:
        a, b = sorted((rank[p], rank[q]))
        forward[a].append(b)
    arcs: list[tuple[Point, Point]] = []
    out: list[OrientedTFPLConfig] = []

    def visit(i: int) -> None:
        if i == len(order):
            out.append(OrientedTFPLConfig(sigma, tau, pi, fixed | frozenset(arcs)))
            return
        if not inner[i]:
            visit(i + 1)
            return
        need_in, need_out = 1 - indeg[i], 1 - outdeg[i]
        if need_in < 0 or need_out < 0:
            return
        options = forward[i]
        if need_in + need_out > len(options):
            return

        def assign(k: int, need_in: int, need_out: int) -> None:
            if need_in == need_out == 0:
                visit(i + 1)
                return
            if k == len(options):
                return
            j = options[k]
            v, w = order[i], order[j]
            if len(options) - k > need_in + need_out:
                assign(k + 1, need_in, need_out)
            if need_out and (not inner[j] or indeg[j] == 0):
                indeg[j] += 1
                arcs.append((v, w))
                assign(k + 1, need_in, need_out - 1)
                arcs.pop()
                indeg[j] -= 1
            if need_in and (not inner[j] or outdeg[j] == 0):
                outdeg[j] += 1
                arcs.append((w, v))
                assign(k + 1, need_in - 1, need_out)
                arcs.pop()
                outdeg[j] -= 1

        assign(0, need_in, need_out)

    visit(0)
    return out


def classify_paths(config) -> PathClassification:
    return config.classify()


def canonical_orientation(f: TFPLConfig) -> OrientedTFPLConfig:
    """Open paths left to right, closed paths clockwise."""
    paths = f.classify()
    if paths.invalid:
        raise ValueError("configuration has paths joining incompatible boundary points")
    arcs = set()
    for path in paths.left_right + paths.bottom:
        arcs.update(zip(path, path[1:]))
    for cycle in paths.closed:
        cycle = list(cycle)
        if signed_area(cycle) > 0:
            cycle.reverse()
        arcs.update(zip(cycle, cycle[1:] + cycle[:1]))
    return OrientedTFPLConfig(f.sigma, f.tau, f.pi, frozenset(arcs))


def _mirror(tri: TriangleGraph, p: Point) -> Point:
    return (tri.top - p[0], p[1])


def reflect(f: TFPLConfig) -> TFPLConfig:
    """Mirror about the vertical axis; lands in the ``(tau*, sigma*, pi*)`` family."""
    tri = f.triangle
    edges = frozenset(_edge(_mirror(tri, p), _mirror(tri, q)) for p, q in f.edges)
    return TFPLConfig(conjugate(f.tau), conjugate(f.sigma), conjugate(f.pi), edges)


def reflect_oriented(f: OrientedTFPLConfig) -> OrientedTFPLConfig:
    """Mirror, then reverse every arc so horizontal arcs keep their direction
    and vertical arcs flip."""
    tri = f.triangle
    arcs = frozenset((_mirror(tri, q), _mirror(tri, p)) for p, q in f.arcs)
    return OrientedTFPLConfig(conjugate(f.tau), conjugate(f.sigma), conjugate(f.pi), arcs)


def tfpl_from_json(data: dict | str):
    """Load an undirected or oriented configuration written by ``to_json``."""
    if isinstance(data, str):
        data = json.loads(data)
    sigma, tau, pi = (DyckWord(data[k]) for k in ("sigma", "tau", "pi"))
    pairs = [((e[0], e[1]), (e[2], e[3])) for e in data["edges"]]
    if data.get("directed"):
        return OrientedTFPLConfig(sigma, tau, pi, frozenset(pairs))
    return TFPLConfig(sigma, tau, pi, frozenset(_edge(p, q) for p, q in pairs))


def is_degree_balanced(sigma: str, tau: str, pi: str) -> bool:
    return degree(sigma) + degree(tau) == degree(pi)


def balanced_triples(n: int) -> Iterator[tuple[DyckWord, DyckWord, DyckWord]]:
    words = enumerate_dyck(n)
    for pi in words:
        for sigma in words:
            for tau in words:
                if is_degree_balanced(sigma, tau, pi):
                    yield sigma, tau, pi
