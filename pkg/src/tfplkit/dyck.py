"""Dyck words, link patterns, Ferrers diagrams and partition statistics.

A Dyck word of half-length ``n`` is a string over ``{'0', '1'}`` with ``n``
letters of each kind in which no prefix has more ``1`` than ``0``. The same
word encodes a noncrossing perfect matching of ``{1, ..., 2n}`` (each ``1``
closes the nearest open ``0``) and a Ferrers diagram inside the staircase
``(n-1, ..., 1, 0)``. Partitions are plain tuples of positive parts in weakly
decreasing order; the empty partition is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Iterator, Sequence

from .polynomial import Polynomial

Partition = tuple[int, ...]
LinkPattern = frozenset  # frozenset of (i, j) pairs with i < j, 1-based


class DyckWord(str):
    """An immutable, validated Dyck word.

    >>> DyckWord("0011").n
    2
    """

    def __new__(cls, bits) -> DyckWord:
        if isinstance(bits, DyckWord):
            return bits
        if not isinstance(bits, str):
            bits = "".join(str(int(b)) for b in bits)
        height = 0
        for ch in bits:
            if ch == "0":
                height += 1
            elif ch == "1":
                height -= 1
                if height < 0:
                    raise ValueError(f"{bits!r} is not a Dyck word: prefix goes negative")
            else:
                raise ValueError(f"{bits!r} is not a Dyck word: letter {ch!r}")
        if height:
            raise ValueError(f"{bits!r} is not a Dyck word: unbalanced")
        return super().__new__(cls, bits)

    @property
    def n(self) -> int:
        return len(self) // 2

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(ch) for ch in self)

    def __repr__(self) -> str:
        return f"DyckWord({str(self)!r})"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _dyck_words(n: int) -> tuple[DyckWord, ...]:
    out = []

    def extend(prefix: str, opened: int, closed: int) -> None:
        if opened == closed == n:
            out.append(DyckWord(prefix))
            return
        if opened < n:
            extend(prefix + "0", opened + 1, closed)
        if closed < opened:
            extend(prefix + "1", opened, closed + 1)

    extend("", 0, 0)
    return tuple(out)


def enumerate_dyck(n: int) -> list[DyckWord]:
    """All Dyck words of half-length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_dyck_words(n))


def word_to_linkpattern(word: str) -> LinkPattern:
    word = DyckWord(word)
    stack, pairs = [], []
    for pos, ch in enumerate(word, start=1):
        if ch == "0":
            stack.append(pos)
        else:
            pairs.append((stack.pop(), pos))
    return frozenset(pairs)


def linkpattern_to_word(pairs, n: int | None = None) -> DyckWord:
    """Inverse of :func:`word_to_linkpattern`; validates noncrossing."""
    pairs = [tuple(sorted(p)) for p in pairs]
    size = 2 * len(pairs) if n is None else 2 * n
    seen = sorted(x for p in pairs for x in p)
    if seen != list(range(1, size + 1)):
        raise ValueError("pairs do not partition {1, ..., 2n}")
    for (i, j), (k, l) in combinations(pairs, 2):
        if i < k < j < l or k < i < l < j:
            raise ValueError(f"pairs {(i, j)} and {(k, l)} cross")
    letters = ["0"] * size
    for _, j in pairs:
        letters[j - 1] = "1"
    return DyckWord("".join(letters))


def degree(word: str) -> int:
    """Number of inversions, i.e. pairs ``i < j`` with letters ``(1, 0)``."""
    ones = total = 0
    for ch in DyckWord(word):
        if ch == "1":
            ones += 1
        else:
            total += ones
    return total


def word_to_diagram(word: str) -> Partition:
    """Ferrers diagram of a Dyck word.

    Each ``0`` contributes a row whose length is the number of ``1`` read
    before it; rows are listed longest first and empty rows dropped. For
    ``0010100111`` this gives ``(2, 2, 1)``.
    """
    ones = 0
    rows = []
    for ch in DyckWord(word):
        if ch == "1":
            ones += 1
        elif ones:
            rows.append(ones)
    return tuple(sorted(rows, reverse=True))


def diagram_to_word(shape: Sequence[int], n: int) -> DyckWord:
    """Inverse of :func:`word_to_diagram` inside the staircase of size ``n``."""
    shape = normalize_partition(shape)
    if not fits_staircase(shape, n):
        raise ValueError(f"{shape} does not fit in the staircase of size {n}")
    padded = list(shape) + [0] * (n - len(shape))
    letters, ones = [], 0
    for k in range(n):
        want = padded[n - 1 - k]
        letters.append("1" * (want - ones))
        ones = want
        letters.append("0")
    letters.append("1" * (n - ones))
    return DyckWord("".join(letters))


def fits_staircase(shape: Sequence[int], n: int) -> bool:
    return len(shape) <= n and all(part <= n - 1 - i for i, part in enumerate(shape))


def normalize_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    return tuple(p for p in parts if p)


def parse_partition(text: str) -> Partition:
    """Parse ``"2,2,1"``; the empty string gives the empty partition."""
    text = text.strip()
    if not text:
        return ()
    return normalize_partition(int(p) for p in text.split(","))


def format_partition(shape: Sequence[int]) -> str:
    return ",".join(str(p) for p in shape)


def conjugate(word: str) -> DyckWord:
    """Reverse-complement of the word; transposes the diagram."""
    word = DyckWord(word)
    return DyckWord("".join("1" if ch == "0" else "0" for ch in reversed(word)))


def transpose(shape: Sequence[int]) -> Partition:
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > col) for col in range(shape[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def leq(a: str, b: str) -> bool:
    """Containment order on diagrams of two words of equal length."""
    a, b = DyckWord(a), DyckWord(b)
    if a.n != b.n:
        raise ValueError(f"words of different sizes: {a.n} and {b.n}")
    return contains(word_to_diagram(b), word_to_diagram(a))


def cells(shape: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Cells ``(row, col)``, zero-based, row by row."""
    for r, length in enumerate(shape):
        for c in range(length):
            yield r, c


def hook_length(shape: Sequence[int], row: int, col: int) -> int:
    arm = shape[row] - col - 1
    leg = sum(1 for r in range(row + 1, len(shape)) if shape[r] > col)
    return arm + leg + 1


def hook_product(shape: Sequence[int]) -> int:
    shape = tuple(shape)
    return prod(hook_length(shape, r, c) for r, c in cells(shape))


def contents(shape: Sequence[int]) -> list[int]:
    return [c - r for r, c in cells(shape)]


def ssyt_count_polynomial(shape: Sequence[int]) -> Polynomial:
    """SSYT(shape, N) as a polynomial in N via the hook-content formula."""
    poly = Polynomial.constant(1)
    for content in contents(shape):
        poly = poly * Polynomial.linear_root(content)
    return poly.scale(Fraction(1, hook_product(shape)))


def ssyt_count(shape: Sequence[int], N: int) -> Fraction:
    """Evaluate the hook-content polynomial at any integer ``N``."""
    return ssyt_count_polynomial(shape)(N)


def ssyt_enumerate(shape: Sequence[int], N: int) -> int:
    """Count semistandard tableaux with entries in ``1..N`` by brute force."""
    if N < 1:
        raise ValueError("N must be positive")
    shape = normalize_partition(shape)
    order = list(cells(shape))
    filling: dict[tuple[int, int], int] = {}

    def fill(k: int) -> int:
        if k == len(order):
            return 1
        r, c = order[k]
        low = 1
        if c > 0:
            low = max(low, filling[r, c - 1])
        if r > 0:
            low = max(low, filling[r - 1, c] + 1)
        total = 0
        for value in range(low, N + 1):
            filling[r, c] = value
            total += fill(k + 1)
        filling.pop((r, c), None)
        return total

    return fill(0)


@lru_cache(maxsize=None)
def partitions(size: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``size``, parts bounded by ``max_part``."""
    if max_part is None:
        max_part = size
    if size == 0:
        return ((),)
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, first):
            out.append((first,) + rest)
    return tuple(out)
