"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial stored as coefficients from the constant term upward.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls([value])

    @classmethod
    def linear_root(cls, shift) -> Polynomial:
        """The polynomial ``N + shift``."""
        return cls([shift, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + other.scale(-1)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, factor) -> Polynomial:
        factor = Fraction(factor)
        return Polynomial(c * factor for c in self.coeffs)

    def to_json(self) -> list[str]:
        """Coefficients as ``"num/den"`` strings, constant term first."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Polynomial:
        return cls(Fraction(s) for s in data)

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "N") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if power and c == 1:
                terms.append(power)
            elif power:
                terms.append(f"({c})*{power}")
            else:
                terms.append(str(c))
        return " + ".join(reversed(terms))


def interpolate(points: Sequence[tuple[int, int | Fraction]]) -> Polynomial:
    """Lagrange interpolation through ``(x, y)`` pairs with distinct ``x``."""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = Polynomial()
    for i, (xi, yi) in enumerate(points):
        basis = Polynomial.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial.linear_root(-xj)
                denom *= xi - xj
        result = result + basis.scale(Fraction(yi) / denom)
    return result
