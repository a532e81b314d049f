"""Knutson-Tao puzzles on the triangle of side 2n.

Lattice layout
--------------
The triangle points up and is cut into horizontal strips ``h = 0..2n-1``
counted from the bottom. Strip ``h`` holds ``2n - h`` upward unit triangles
``U(h, j)`` and ``2n - h - 1`` downward ones ``D(h, j)``, with ``D(h, j)``
sitting between ``U(h, j)`` and ``U(h, j + 1)``.

* ``H(h, j)``: horizontal edge ``j`` at height ``h`` (``0 <= j < 2n - h``),
  the base of ``U(h, j)`` and the top of ``D(h - 1, j)``.
* ``S(h, k)``: slanted edge ``k`` of strip ``h`` (``0 <= k < 2(2n - h)``),
  read left to right. Even ``k`` are ``/`` edges, odd ``k`` are ``\\`` edges.
  ``U(h, j)`` has sides ``S(h, 2j)`` and ``S(h, 2j + 1)``; ``D(h, j)`` has
  sides ``S(h, 2j + 1)`` and ``S(h, 2j + 2)``.

Boundary: the left side carries ``sigma`` read from the bottom corner up to
the apex (``S(h, 0) = sigma[h]``), the right side carries ``tau`` read from
the apex down (``S(h, last) = tau[2n - 1 - h]``) and the bottom carries
``pi`` left to right (``H(0, j) = pi[j]``).

Flat label order (the JSON ``labels`` array): for each height ``g`` from
``2n`` down to ``0``, the horizontal edges ``H(g, 0..)``, then, if ``g > 0``,
the slanted edges ``S(g - 1, 0..)`` of the strip just below.

Unit triangles are allowed when their labels read counterclockwise are
``000``, ``111`` or a rotation of ``012``. Counterclockwise means
``(base, right, left)`` for an upward triangle and ``(top, left, right)``
for a downward one.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .dyck import DyckWord
from .fpl import EnumerationBoundError, check_bound

DEFAULT_MAX_N = 5

_CCW_ALLOWED = frozenset({(0, 0, 0), (1, 1, 1), (0, 1, 2), (1, 2, 0), (2, 0, 1)})

# (left, base, right) of an upward triangle
UP_TRIANGLES = frozenset((a, b, c) for b, c, a in _CCW_ALLOWED)
# (top, left, right) of a downward triangle
DOWN_TRIANGLES = _CCW_ALLOWED

# right side of an upward triangle given (left, base); unique when it exists
_UP_RIGHT = {(a, b): c for a, b, c in UP_TRIANGLES}
# (top, right) choices of a downward triangle given its left side
_DOWN_CHOICES: dict[int, list[tuple[int, int]]] = {}
for _t, _l, _r in sorted(DOWN_TRIANGLES):
    _DOWN_CHOICES.setdefault(_l, []).append((_t, _r))


class PuzzleLattice:
    """Edge indexing for the triangle of side ``2n``."""

    def __init__(self, n: int):
        self.n = n
        side = 2 * n
        self.side = side
        self._h: dict[tuple[int, int], int] = {}
        self._s: dict[tuple[int, int], int] = {}
        idx = 0
        for g in range(side, -1, -1):
            for j in range(side - g):
                self._h[g, j] = idx
                idx += 1
            if g > 0:
                for k in range(2 * (side - g + 1)):
                    self._s[g - 1, k] = idx
                    idx += 1
        self.size = idx
        self.up: list[tuple[tuple[int, int], tuple[int, int, int]]] = []
        self.down: list[tuple[tuple[int, int], tuple[int, int, int]]] = []
        for h in range(side):
            for j in range(side - h):
                self.up.append(((h, j), (self.s(h, 2 * j), self.h(h, j), self.s(h, 2 * j + 1))))
            for j in range(side - h - 1):
                self.down.append(((h, j), (self.h(h + 1, j), self.s(h, 2 * j + 1), self.s(h, 2 * j + 2))))

    def h(self, height: int, j: int) -> int:
        return self._h[height, j]

    def s(self, strip: int, k: int) -> int:
        return self._s[strip, k]

    def strip_width(self, strip: int) -> int:
        """Number of upward triangles in a strip."""
        return self.side - strip

    @property
    def triangle_count(self) -> int:
        return len(self.up) + len(self.down)


@lru_cache(maxsize=None)
def lattice(n: int) -> PuzzleLattice:
    return PuzzleLattice(n)


@dataclass(frozen=True)
class Puzzle:
    n: int
    labels: tuple  # flat, in PuzzleLattice order; ``None`` marks a missing label

    @property
    def lattice(self) -> PuzzleLattice:
        return lattice(self.n)

    def H(self, height: int, j: int):
        return self.labels[self.lattice.h(height, j)]

    def S(self, strip: int, k: int):
        return self.labels[self.lattice.s(strip, k)]

    @property
    def sigma(self) -> str:
        return "".join(str(self.S(h, 0)) for h in range(2 * self.n))

    @property
    def tau(self) -> str:
        lat = self.lattice
        return "".join(
            str(self.S(h, 2 * lat.strip_width(h) - 1)) for h in range(2 * self.n - 1, -1, -1)
        )

    @property
    def pi(self) -> str:
        return "".join(str(self.H(0, j)) for j in range(2 * self.n))

    def to_json(self) -> dict:
        return {"n": self.n, "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict | str) -> Puzzle:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(data["labels"]))


def validate_puzzle(puzzle: Puzzle) -> bool:
    """True iff every unit triangle is one of the ten allowed labelings.

    Boundary words are not checked here; see :func:`has_boundary`.
    Raises ``ValueError`` if the labeling is incomplete.
    """
    lat = puzzle.lattice
    labels = puzzle.labels
    if len(labels) != lat.size or any(v not in (0, 1, 2) for v in labels):
        raise ValueError("puzzle labeling is incomplete or has labels outside {0, 1, 2}")
    for _, (a, b, c) in lat.up:
        if (labels[a], labels[b], labels[c]) not in UP_TRIANGLES:
            return False
    for _, (t, l, r) in lat.down:
        if (labels[t], labels[l], labels[r]) not in DOWN_TRIANGLES:
            return False
    return True


def has_boundary(puzzle: Puzzle, sigma: str, tau: str, pi: str) -> bool:
    return (puzzle.sigma, puzzle.tau, puzzle.pi) == (sigma, tau, pi)


def _check_words(sigma: str, tau: str, pi: str) -> tuple[DyckWord, DyckWord, DyckWord]:
    sigma, tau, pi = DyckWord(sigma), DyckWord(tau), DyckWord(pi)
    if not sigma.n == tau.n == pi.n:
        raise ValueError("sigma, tau and pi must have the same length")
    return sigma, tau, pi


def _strip_fillings(bottom: tuple, left: int, right: int) -> Iterator[tuple[tuple, tuple]]:
    """Fill one strip from its bottom labels and its two boundary labels.

    Yields ``(slanted, top)``: the slanted labels left to right and the
    labels of the horizontal edges on top of the strip.
    """
    width = len(bottom)
    slanted = [left]
    top: list[int] = []

    def go(j: int) -> Iterator[tuple[tuple, tuple]]:
        c = _UP_RIGHT.get((slanted[-1], bottom[j]))
        if c is None:
            return
        slanted.append(c)
        if j == width - 1:
            if c == right:
                yield tuple(slanted), tuple(top)
        else:
            for t, r in _DOWN_CHOICES[c]:
                top.append(t)
                slanted.append(r)
                yield from go(j + 1)
                slanted.pop()
                top.pop()
        slanted.pop()

    yield from go(0)


def enumerate_puzzles(sigma: str, tau: str, pi: str, max_n: int = DEFAULT_MAX_N) -> list[Puzzle]:
    """All KT puzzles with boundary ``sigma`` (left), ``tau`` (right), ``pi`` (bottom)."""
    sigma, tau, pi = _check_words(sigma, tau, pi)
    n = sigma.n
    check_bound(n, max_n, "enumerate_puzzles")
    if n == 0:
        return [Puzzle(0, ())]
    lat = lattice(n)
    side = 2 * n
    out = []
    strips: list[tuple] = []

    def go(h: int, bottom: tuple) -> None:
        if h == side:
            labels = [None] * lat.size
            for j, v in enumerate(pi):
                labels[lat.h(0, j)] = int(v)
            for strip, (slanted, top) in enumerate(strips):
                for k, v in enumerate(slanted):
                    labels[lat.s(strip, k)] = v
                for j, v in enumerate(top):
                    labels[lat.h(strip + 1, j)] = v
            out.append(Puzzle(n, tuple(labels)))
            return
        for filling in _strip_fillings(bottom, int(sigma[h]), int(tau[side - 1 - h])):
            strips.append(filling)
            go(h + 1, filling[1])
            strips.pop()

    go(0, tuple(int(v) for v in pi))
    return out


def puzzle_count(sigma: str, tau: str, pi: str, max_n: int = DEFAULT_MAX_N) -> int:
    """Number of KT puzzles, counted strip by strip without storing puzzles."""
    sigma, tau, pi = _check_words(sigma, tau, pi)
    n = sigma.n
    check_bound(n, max_n, "puzzle_count")
    if n == 0:
        return 1
    side = 2 * n
    layer = Counter({tuple(int(v) for v in pi): 1})
    for h in range(side):
        nxt: Counter = Counter()
        for bottom, ways in layer.items():
            for _, top in _strip_fillings(bottom, int(sigma[h]), int(tau[side - 1 - h])):
                nxt[top] += ways
        layer = nxt
    return layer[()]


__all__ = [
    "DOWN_TRIANGLES",
    "EnumerationBoundError",
    "Puzzle",
    "PuzzleLattice",
    "UP_TRIANGLES",
    "enumerate_puzzles",
    "has_boundary",
    "lattice",
    "puzzle_count",
    "validate_puzzle",
]
