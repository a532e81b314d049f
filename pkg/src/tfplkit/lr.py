"""Littlewood-Richardson coefficients by the classical tableau rule.

Kept deliberately independent of the puzzle code: coefficients are counted
by direct enumeration of skew fillings whose reverse reading word is a
lattice word.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .dyck import Partition, contains, normalize_partition, partitions


def lr_tableaux(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]):
    """Yield LR tableaux of shape ``outer / inner`` with the given content.

    Each tableau is a dict ``{(row, col): entry}`` over the skew cells.
    Cells are filled row by row from the top, right to left within a row,
    which is exactly the order of the reverse reading word.
    """
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    content = normalize_partition(content)
    if not contains(outer, inner) or sum(outer) - sum(inner) != sum(content):
        return
    padded_inner = list(inner) + [0] * (len(outer) - len(inner))
    order = [
        (r, c)
        for r in range(len(outer))
        for c in range(outer[r] - 1, padded_inner[r] - 1, -1)
    ]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (len(content) + 1)

    def place(k: int):
        if k == len(order):
            yield dict(filling)
            return
        r, c = order[k]
        high = len(content)
        right = filling.get((r, c + 1))
        if right is not None:
            high = min(high, right)
        low = 1
        above = filling.get((r - 1, c))
        if above is not None:
            low = above + 1
        for v in range(low, high + 1):
            if used[v] >= content[v - 1]:
                continue
            if v > 1 and used[v - 1] <= used[v]:
                continue
            used[v] += 1
            filling[r, c] = v
            yield from place(k + 1)
            del filling[r, c]
            used[v] -= 1

    yield from place(0)


@lru_cache(maxsize=None)
def _lr(outer: Partition, inner: Partition, content: Partition) -> int:
    return sum(1 for _ in lr_tableaux(outer, inner, content))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{mu, nu}``: coefficient of ``s_lam`` in ``s_mu * s_nu``."""
    lam, mu, nu = (normalize_partition(p) for p in (lam, mu, nu))
    if sum(mu) + sum(nu) != sum(lam) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _lr(lam, mu, nu)


def schur_product_expand(mu: Sequence[int], nu: Sequence[int], max_size: int | None = None) -> dict[Partition, int]:
    """Expansion of ``s_mu * s_nu`` in the Schur basis, zero terms omitted."""
    mu, nu = normalize_partition(mu), normalize_partition(nu)
    size = sum(mu) + sum(nu)
    if max_size is not None and size > max_size:
        raise ValueError(f"|mu| + |nu| = {size} exceeds max_size = {max_size}")
    out = {}
    for lam in partitions(size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out
