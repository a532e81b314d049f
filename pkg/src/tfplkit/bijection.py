"""The local-rule map from KT puzzles to (oriented) TFPLs and its inverse.

Geometry: strip ``h`` of the puzzle becomes row ``y = h`` of the triangle.
The slanted edges ``S(h, 1), S(h, 2), ...`` become the vertices
``(h, h), (h + 1, h), ...`` (``\\`` edges land on even vertices, ``/`` edges
on odd ones) and the left boundary edge ``S(h, 0)`` is dropped. A horizontal
edge ``H(h, j)`` becomes the vertical edge between ``(h + 2j, h - 1)`` and
``(h + 2j, h)``; at height 0 these are the bottom stubs. Every unit triangle
carries the horizontal TFPL edge joining the images of its two slanted
sides, except the leftmost upward triangle of each strip whose left vertex
is dropped.

Each allowed unit triangle maps to a fragment ``(horizontal, vertical)``:
``horizontal`` is ``0`` (no edge), ``+1`` (pointing right) or ``-1``
(pointing left); ``vertical`` is the half edge through the triangle's
horizontal side, ``"up"``, ``"down"`` or ``None`` for labels 0, 1, 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Mapping

from .dyck import DyckWord
from .puzzles import DOWN_TRIANGLES, UP_TRIANGLES, Puzzle, lattice, validate_puzzle
from .tfpl import (
    OrientedTFPLConfig,
    TFPLConfig,
    _edge,
    canonical_orientation,
    is_degree_balanced,
)

VERTICAL_OF_LABEL = {0: "up", 1: "down", 2: None}
LABEL_OF_VERTICAL = {v: k for k, v in VERTICAL_OF_LABEL.items()}

Key = tuple[str, tuple[int, int, int]]  # ("up", (left, base, right)) or ("down", (top, left, right))


class RuleTableError(ValueError):
    """A local rule table violates one of its structural invariants."""

    def __init__(self, invariant: str, detail: str):
        super().__init__(f"LocalRuleTable invariant '{invariant}' violated: {detail}")
        self.invariant = invariant


def _triangle_keys() -> list[Key]:
    return [("up", t) for t in sorted(UP_TRIANGLES)] + [("down", t) for t in sorted(DOWN_TRIANGLES)]


def _horizontal_side_label(key: Key) -> int:
    kind, labels = key
    return labels[1] if kind == "up" else labels[0]


def _balance_failures(horizontal: Mapping[Key, int]) -> list[str]:
    """Vertices, indexed by slanted label and edge type, that are not in 1 / out 1."""
    ups = [t for t in sorted(UP_TRIANGLES)]
    downs = [t for t in sorted(DOWN_TRIANGLES)]
    fails = []
    # even vertex: right side c of an upward triangle = left side l of a downward one
    for a, b, c in ups:
        hu = horizontal[("up", (a, b, c))]
        vu = VERTICAL_OF_LABEL[b]
        for t, l, r in downs:
            if l != c:
                continue
            hd = horizontal[("down", (t, l, r))]
            ins = (hu == 1) + (vu == "up") + (hd == -1)
            outs = (hu == -1) + (vu == "down") + (hd == 1)
            if (ins, outs) != (1, 1):
                fails.append(f"'\\' edge labeled {c} between up{(a, b, c)} and down{(t, l, r)}")
    # odd vertex: right side r of a downward triangle = left side a of an upward one
    for t, l, r in downs:
        hd = horizontal[("down", (t, l, r))]
        vd = VERTICAL_OF_LABEL[t]
        for a, b, c in ups:
            if a != r:
                continue
            hu = horizontal[("up", (a, b, c))]
            ins = (hd == 1) + (vd == "down") + (hu == -1)
            outs = (hd == -1) + (vd == "up") + (hu == 1)
            if (ins, outs) != (1, 1):
                fails.append(f"'/' edge labeled {r} between down{(t, l, r)} and up{(a, b, c)}")
    return fails


@dataclass(frozen=True)
class LocalRuleTable:
    """Fragment for each of the ten allowed unit triangles."""

    fragments: Mapping[Key, tuple[int, str | None]]

    def fragment(self, kind: str, labels: tuple[int, int, int]) -> tuple[int, str | None]:
        return self.fragments[(kind, labels)]

    @lru_cache(maxsize=None)
    def inverse(self) -> dict[tuple[str, int, str | None], tuple[int, int, int]]:
        return {(kind, *frag): labels for (kind, labels), frag in self.fragments.items()}

    def __hash__(self):
        return hash(tuple(sorted(self.fragments.items(), key=repr)))


def validate_rule_table(table: LocalRuleTable) -> None:
    """Raise :class:`RuleTableError` naming the first invariant that fails."""
    keys = _triangle_keys()
    if set(table.fragments) != set(keys):
        raise RuleTableError("coverage", "table must list exactly the ten allowed triangles")
    for key in keys:
        h, v = table.fragments[key]
        if h not in (-1, 0, 1):
            raise RuleTableError("horizontal edge state", f"{key} has state {h!r}")
        if v != VERTICAL_OF_LABEL[_horizontal_side_label(key)]:
            raise RuleTableError(
                "horizontal-edge rule", f"{key}: labels 0, 1, 2 must give up, down, no vertical edge"
            )
    # two triangles sharing a horizontal side draw the same vertical edge
    for (ku, up), (kd, down) in product(keys, keys):
        if ku == "up" and kd == "down" and up[1] == down[0]:
            if table.fragments[(ku, up)][1] != table.fragments[(kd, down)][1]:
                raise RuleTableError("compatibility", f"{up} above {down} disagree on the vertical edge")
    for kind in ("up", "down"):
        frags = [table.fragments[k] for k in keys if k[0] == kind]
        if len(set(frags)) != len(frags):
            raise RuleTableError("distinct fragments", f"two {kind} triangles share a fragment")
    fails = _balance_failures({k: table.fragments[k][0] for k in keys})
    if fails:
        raise RuleTableError("vertex balance", fails[0])


def derive_rule_tables() -> list[LocalRuleTable]:
    """Every assignment of horizontal states that satisfies all invariants."""
    keys = _triangle_keys()
    found = []
    for states in product((0, 1, -1), repeat=len(keys)):
        horizontal = dict(zip(keys, states))
        if _balance_failures(horizontal):
            continue
        table = LocalRuleTable(
            {k: (horizontal[k], VERTICAL_OF_LABEL[_horizontal_side_label(k)]) for k in keys}
        )
        try:
            validate_rule_table(table)
        except RuleTableError:
            continue
        found.append(table)
    return found


@lru_cache(maxsize=None)
def default_rule_table() -> LocalRuleTable:
    tables = derive_rule_tables()
    if len(tables) != 1:
        raise RuleTableError("uniqueness", f"{len(tables)} tables satisfy the local constraints")
    return tables[0]


def _check_puzzle(puzzle: Puzzle) -> tuple[DyckWord, DyckWord, DyckWord]:
    if not validate_puzzle(puzzle):
        raise ValueError("not a valid KT puzzle")
    try:
        return DyckWord(puzzle.sigma), DyckWord(puzzle.tau), DyckWord(puzzle.pi)
    except ValueError as exc:
        raise ValueError(f"puzzle boundary is not made of Dyck words: {exc}") from None


def phi_oriented(puzzle: Puzzle, table: LocalRuleTable | None = None) -> OrientedTFPLConfig:
    """Apply the local rules triangle by triangle."""
    table = table or default_rule_table()
    sigma, tau, pi = _check_puzzle(puzzle)
    n = puzzle.n
    lat = lattice(n)
    arcs = set()
    vertical: dict[tuple[int, int], str | None] = {}
    for (h, j), (a, b, c) in lat.up:
        labels = (puzzle.labels[a], puzzle.labels[b], puzzle.labels[c])
        horiz, vert = table.fragment("up", labels)
        vertical[h, j] = vert
        if j > 0 and horiz:
            p, q = (h + 2 * j - 1, h), (h + 2 * j, h)
            arcs.add((p, q) if horiz == 1 else (q, p))
    for (h, j), (t, l, r) in lat.down:
        labels = (puzzle.labels[t], puzzle.labels[l], puzzle.labels[r])
        horiz, vert = table.fragment("down", labels)
        if vertical[h + 1, j] != vert:
            raise RuleTableError("compatibility", f"vertical edge above strip {h}, position {j}")
        if horiz:
            p, q = (h + 2 * j, h), (h + 2 * j + 1, h)
            arcs.add((p, q) if horiz == 1 else (q, p))
    for (h, j), vert in vertical.items():
        if vert is None:
            continue
        low, high = (h + 2 * j, h - 1), (h + 2 * j, h)
        arcs.add((low, high) if vert == "up" else (high, low))
    return OrientedTFPLConfig(sigma, tau, pi, frozenset(arcs))


def phi(puzzle: Puzzle, table: LocalRuleTable | None = None) -> TFPLConfig:
    oriented = phi_oriented(puzzle, table)
    edges = frozenset(_edge(p, q) for p, q in oriented.arcs)
    return TFPLConfig(oriented.sigma, oriented.tau, oriented.pi, edges)


def phi_inverse(f: TFPLConfig, table: LocalRuleTable | None = None) -> Puzzle:
    """The puzzle whose image is ``f``; only for degree-balanced boundaries."""
    table = table or default_rule_table()
    if not is_degree_balanced(f.sigma, f.tau, f.pi):
        raise ValueError("degree-unbalanced boundary: no puzzle preimage guaranteed")
    oriented = canonical_orientation(f)
    arcs = oriented.arcs
    n = f.n
    lat = lattice(n)
    labels: list[int | None] = [None] * lat.size
    inverse = table.inverse()

    def put(index: int, value: int) -> None:
        if labels[index] not in (None, value):
            raise ValueError("configuration is not in the image of the local rules")
        labels[index] = value

    def horizontal_state(p, q) -> int:
        return 1 if (p, q) in arcs else -1 if (q, p) in arcs else 0

    for h in range(2 * n):
        for j in range(lat.strip_width(h)):
            low, high = (h + 2 * j, h - 1), (h + 2 * j, h)
            vert = "up" if (low, high) in arcs else "down" if (high, low) in arcs else None
            put(lat.h(h, j), LABEL_OF_VERTICAL[vert])
    for (h, j), (a, b, c) in lat.up:
        vert = VERTICAL_OF_LABEL[labels[b]]
        if j == 0:
            left = int(f.sigma[h])
            right = [t[2] for t in UP_TRIANGLES if t[:2] == (left, labels[b])]
            if not right:
                raise ValueError("configuration is not in the image of the local rules")
            found = (left, labels[b], right[0])
        else:
            key = ("up", horizontal_state((h + 2 * j - 1, h), (h + 2 * j, h)), vert)
            if key not in inverse:
                raise ValueError("configuration is not in the image of the local rules")
            found = inverse[key]
        for index, value in zip((a, b, c), found):
            put(index, value)
    for (h, j), (t, l, r) in lat.down:
        vert = VERTICAL_OF_LABEL[labels[t]]
        key = ("down", horizontal_state((h + 2 * j, h), (h + 2 * j + 1, h)), vert)
        if key not in inverse:
            raise ValueError("configuration is not in the image of the local rules")
        for index, value in zip((t, l, r), inverse[key]):
            put(index, value)
    puzzle = Puzzle(n, tuple(labels))
    if not validate_puzzle(puzzle) or (puzzle.sigma, puzzle.tau, puzzle.pi) != (f.sigma, f.tau, f.pi):
        raise ValueError("configuration is not in the image of the local rules")
    return puzzle


def check_balanced_characterization(f: TFPLConfig) -> bool:
    """True iff the canonical orientation has no two consecutive left-pointing
    edges and no vertical edge whose lower vertex is even."""
    arcs = canonical_orientation(f).arcs
    left = {(p, q) for p, q in arcs if p[1] == q[1] and q[0] == p[0] - 1}
    heads = {q for _, q in left}
    if any(p in heads for p, _ in left):
        return False
    for p, q in arcs:
        if p[0] == q[0]:
            lower = p if p[1] < q[1] else q
            if (lower[0] + lower[1]) % 2 == 0:
                return False
    return True
