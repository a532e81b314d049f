"""Exact checks of the summation identities linking TFPL counts, LR
coefficients, hook products and FPL counts.

Every ``verify_*`` function returns an :class:`IdentityReport`, which is
truthy exactly when the identity holds; failing terms are listed
individually.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .dyck import (
    DyckWord,
    conjugate,
    contains,
    degree,
    enumerate_dyck,
    hook_product,
    normalize_partition,
    partitions,
    ssyt_count,
    word_to_diagram,
)
from .fpl import DEFAULT_MAX_N as FPL_MAX_N
from .fpl import a_pi_m, check_bound
from .lr import lr_coefficient
from .polynomial import Polynomial, interpolate
from .tfpl import DEFAULT_MAX_N as TFPL_MAX_N
from .tfpl import tfpl_census


@dataclass
class IdentityReport:
    identity: str
    subject: str
    lhs: Fraction
    rhs: Fraction
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "subject": self.subject,
            "pass": self.passed,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "failures": self.failures,
            **self.details,
        }


def _weight(shape) -> Fraction:
    """``1 / (2^|shape| * H_shape)``."""
    return Fraction(1, 2 ** sum(shape) * hook_product(shape))


def _t(sigma: str, tau: str, pi: str, max_n: int) -> int:
    return tfpl_census(sigma, tau, max_n)[pi]


def verify_identity_t(pi: str, max_n: int = TFPL_MAX_N) -> IdentityReport:
    """``1/H_pi`` against the weighted sum of TFPL counts over balanced pairs."""
    pi = DyckWord(pi)
    words = enumerate_dyck(pi.n)
    lhs = Fraction(1, hook_product(word_to_diagram(pi)))
    rhs = Fraction(0)
    terms = 0
    for sigma in words:
        for tau in words:
            if degree(sigma) + degree(tau) != degree(pi):
                continue
            t = _t(sigma, tau, pi, max_n)
            rhs += t * _weight(word_to_diagram(sigma)) * _weight(word_to_diagram(tau))
            terms += t > 0
    report = IdentityReport("t", str(pi), lhs, rhs, details={"nonzero_terms": terms})
    if lhs != rhs:
        report.failures.append({"lhs": str(lhs), "rhs": str(rhs)})
    return report


def verify_identity_c(lam: Sequence[int]) -> IdentityReport:
    """``1/H_lam`` against the weighted sum of LR coefficients ``c^lam_{mu,nu}``."""
    lam = normalize_partition(lam)
    size = sum(lam)
    lhs = Fraction(1, hook_product(lam))
    rhs = Fraction(0)
    for k in range(size + 1):
        for mu in partitions(k):
            if not contains(lam, mu):
                continue
            for nu in partitions(size - k):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    rhs += c * _weight(mu) * _weight(nu)
    report = IdentityReport("c", ",".join(map(str, lam)), lhs, rhs)
    if lhs != rhs:
        report.failures.append({"lhs": str(lhs), "rhs": str(rhs)})
    return report


def verify_identity_tc(pi: str, max_n: int = TFPL_MAX_N) -> IdentityReport:
    """Sum of ``(t - c) / (H_sigma H_tau)`` over balanced pairs must vanish.

    Each nonzero ``t - c`` is also recorded in ``failures`` so that the
    termwise statement ``t = c`` is checked at the same time.
    """
    pi = DyckWord(pi)
    words = enumerate_dyck(pi.n)
    lam = word_to_diagram(pi)
    total = Fraction(0)
    failures = []
    terms = 0
    for sigma in words:
        for tau in words:
            if degree(sigma) + degree(tau) != degree(pi):
                continue
            mu, nu = word_to_diagram(sigma), word_to_diagram(tau)
            t = _t(sigma, tau, pi, max_n)
            c = lr_coefficient(lam, mu, nu)
            terms += 1
            total += Fraction(t - c, hook_product(mu) * hook_product(nu))
            if t != c:
                failures.append({"sigma": str(sigma), "tau": str(tau), "t": t, "c": c})
    return IdentityReport(
        "tc", str(pi), total, Fraction(0), failures, details={"terms": terms, "termwise": not failures}
    )


def api_rhs(pi: str, m: int, k: int, max_n: int = TFPL_MAX_N) -> Fraction:
    """Right-hand side of the FPL/TFPL bridge formula.

    SSYT factors are evaluated through the hook-content polynomial, so any
    integer ``k`` is meaningful.
    """
    pi = DyckWord(pi)
    n = pi.n
    words = enumerate_dyck(n)
    total = Fraction(0)
    for sigma in words:
        for tau in words:
            t = _t(sigma, tau, pi, max_n)
            if t:
                left = ssyt_count(word_to_diagram(sigma), n + k)
                right = ssyt_count(word_to_diagram(conjugate(tau)), m - k - 2 * n + 1)
                total += left * t * right
    return total


def nonnegative_k_range(n: int, m: int) -> range:
    """Values of ``k`` for which both SSYT arguments are nonnegative."""
    return range(-n, m - 2 * n + 2)


def verify_api_formula(
    pi: str, m: int, k: int, fpl_max_n: int = FPL_MAX_N, tfpl_max_n: int = TFPL_MAX_N
) -> IdentityReport:
    """Compare ``A_pi(m)`` from direct FPL enumeration with the TFPL sum."""
    pi = DyckWord(pi)
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    check_bound(pi.n + m, fpl_max_n, "verify_api_formula")
    lhs = Fraction(a_pi_m(pi, m, fpl_max_n))
    rhs = api_rhs(pi, m, k, tfpl_max_n)
    report = IdentityReport("api", f"{pi} m={m} k={k}", lhs, rhs)
    if lhs != rhs:
        report.failures.append({"m": m, "k": k, "lhs": str(lhs), "rhs": str(rhs)})
    return report


def interpolate_api(pi: str, points: Sequence[int], max_n: int = FPL_MAX_N) -> Polynomial:
    """Interpolate ``m -> A_pi(m)`` through the given sample points."""
    pi = DyckWord(pi)
    points = sorted(set(points))
    if len(points) < degree(pi) + 1:
        raise ValueError(f"need at least {degree(pi) + 1} points for degree {degree(pi)}, got {len(points)}")
    return interpolate([(m, a_pi_m(pi, m, max_n)) for m in points])


def leading_term_matches(poly: Polynomial, pi: str) -> bool:
    """Degree ``d(pi)`` with leading coefficient ``1/H_pi``."""
    pi = DyckWord(pi)
    return poly.degree == degree(pi) and poly.leading == Fraction(1, hook_product(word_to_diagram(pi)))
