"""The full verification pipeline: every headline claim, checked exhaustively.

Each ``check_*`` function takes its range explicitly and returns a
:class:`CheckResult`. :func:`verify_all` runs them all with ranges capped by
a :class:`~tfplkit.config.Config`, noting any reduction in scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import bijection
from .bijection import LocalRuleTable, RuleTableError, default_rule_table, validate_rule_table
from .config import Config
from .dyck import (
    catalan,
    conjugate,
    degree,
    enumerate_dyck,
    partitions,
    ssyt_count_polynomial,
    ssyt_enumerate,
    word_to_diagram,
)
from .fpl import enumerate_fpl, fpl_census
from .identities import verify_api_formula, verify_identity_c, verify_identity_t, verify_identity_tc
from .lr import lr_coefficient
from .polynomial import Polynomial
from .puzzles import enumerate_puzzles, puzzle_count
from .tfpl import (
    balanced_triples,
    canonical_orientation,
    enumerate_tfpl,
    is_degree_balanced,
    reflect,
    tfpl_census,
    tfpl_count,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    scope: str
    checked: int = 0
    failures: list = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "scope": self.scope,
            "checked": self.checked,
            "failures": self.failures[:20],
            "note": self.note,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        note = f"; {self.note}" if self.note else ""
        return f"[{status}] {self.name} ({self.scope}; {self.checked} checks{note})"


def _result(name: str, scope: str, checked: int, failures: list) -> CheckResult:
    return CheckResult(name, not failures, scope, checked, failures)


def check_counts_agree(n_max: int = 4) -> CheckResult:
    """TFPL count = puzzle count = LR coefficient on balanced triples."""
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        for sigma, tau, pi in balanced_triples(n):
            t = tfpl_count(sigma, tau, pi, max_n=n)
            p = puzzle_count(sigma, tau, pi, max_n=n)
            c = lr_coefficient(word_to_diagram(pi), word_to_diagram(sigma), word_to_diagram(tau))
            checked += 1
            if not t == p == c:
                failures.append({"sigma": sigma, "tau": tau, "pi": pi, "t": t, "puzzles": p, "c": c})
    return _result("TFPL count = puzzle count = LR coefficient", f"n <= {n_max}", checked, failures)


def check_bijection(n_max: int = 3, table: LocalRuleTable | None = None) -> CheckResult:
    """phi is a bijection on each balanced class, with both round trips."""
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        for sigma, tau, pi in balanced_triples(n):
            puzzles = enumerate_puzzles(sigma, tau, pi, max_n=n)
            tfpls = enumerate_tfpl(sigma, tau, pi, max_n=n)
            images = [bijection.phi(p, table) for p in puzzles]
            checked += 1
            where = {"sigma": sigma, "tau": tau, "pi": pi}
            if len(set(images)) != len(images):
                failures.append({**where, "problem": "not injective"})
            if set(images) != set(tfpls):
                failures.append({**where, "problem": "image differs from TFPL set"})
            for p, f in zip(puzzles, images):
                if bijection.phi_inverse(f, table) != p:
                    failures.append({**where, "problem": "phi_inverse(phi(P)) != P"})
                if canonical_orientation(f) != bijection.phi_oriented(p, table):
                    failures.append({**where, "problem": "oriented phi != can(phi)"})
            for f in tfpls:
                try:
                    back = bijection.phi(bijection.phi_inverse(f, table), table)
                except ValueError as exc:
                    failures.append({**where, "problem": f"phi_inverse failed: {exc}"})
                    continue
                if back != f:
                    failures.append({**where, "problem": "phi(phi_inverse(f)) != f"})
    return _result("phi bijective, both round trips", f"n <= {n_max}", checked, failures)


def check_no_cycles(n_max: int = 3, table: LocalRuleTable | None = None) -> CheckResult:
    """Images of puzzles have no directed cycles and left-to-right Bottom paths."""
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        for sigma, tau, pi in balanced_triples(n):
            for p in enumerate_puzzles(sigma, tau, pi, max_n=n):
                image = bijection.phi_oriented(p, table)
                paths = image.classify()
                checked += 1
                bad_bottom = [path for path in paths.bottom if path[0][0] > path[-1][0]]
                if not image.is_valid() or paths.closed or bad_bottom or paths.invalid:
                    failures.append({"sigma": sigma, "tau": tau, "pi": pi, "cycles": len(paths.closed)})
    return _result("oriented images: no cycles, Bottom paths left to right", f"n <= {n_max}", checked, failures)


def check_vanishing(n_max: int = 3) -> CheckResult:
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        words = enumerate_dyck(n)
        for sigma in words:
            for tau in words:
                counts = tfpl_census(sigma, tau, max_n=n)
                for pi in words:
                    if degree(sigma) + degree(tau) > degree(pi):
                        checked += 1
                        if counts[pi]:
                            failures.append({"sigma": sigma, "tau": tau, "pi": pi, "t": counts[pi]})
    return _result("vanishing: t = 0 when d(sigma) + d(tau) > d(pi)", f"n <= {n_max}", checked, failures)


def check_identity_t(n_max: int = 4) -> CheckResult:
    reports = [verify_identity_t(pi, max_n=n_max) for n in range(1, n_max + 1) for pi in enumerate_dyck(n)]
    failures = [r.to_json() for r in reports if not r]
    return _result("identity_t exact", f"n <= {n_max}", len(reports), failures)


def check_identity_c(max_size: int = 6) -> CheckResult:
    reports = [verify_identity_c(lam) for k in range(max_size + 1) for lam in partitions(k)]
    failures = [r.to_json() for r in reports if not r]
    return _result("identity_c exact", f"|lambda| <= {max_size}", len(reports), failures)


def check_identity_tc(n_max: int = 4) -> CheckResult:
    reports = [verify_identity_tc(pi, max_n=n_max) for n in range(1, n_max + 1) for pi in enumerate_dyck(n)]
    failures = [r.to_json() for r in reports if not r]
    return _result("identity_tc zero, termwise", f"n <= {n_max}", len(reports), failures)


def check_api_formula(
    sizes=(1, 2), ms=range(4), ks=(-2, -1, 0, 1, 2), fpl_max_n: int = 5
) -> CheckResult:
    failures, checked = [], 0
    for n in sizes:
        for pi in enumerate_dyck(n):
            for m in ms:
                if n + m > fpl_max_n:
                    continue
                for k in ks:
                    report = verify_api_formula(pi, m, k, fpl_max_n=fpl_max_n)
                    checked += 1
                    if not report:
                        failures.append(report.to_json())
    scope = f"n in {tuple(sizes)}, m in {tuple(ms)}, k in {tuple(ks)}"
    return _result("api formula exact", scope, checked, failures)


FACTORED_221 = (
    Polynomial.linear_root(1)
    * Polynomial([0, 1])
    * Polynomial([0, 1])
    * Polynomial.linear_root(-1)
    * Polynomial.linear_root(-2)
).scale(Fraction(1, 24))


def check_hook_content(max_size: int = 6, max_N: int = 5) -> CheckResult:
    failures, checked = [], 0
    for k in range(max_size + 1):
        for lam in partitions(k):
            poly = ssyt_count_polynomial(lam)
            for N in range(1, max_N + 1):
                checked += 1
                if ssyt_enumerate(lam, N) != poly(N):
                    failures.append({"lambda": lam, "N": N})
    checked += 1
    if ssyt_count_polynomial((2, 2, 1)).coeffs != FACTORED_221.coeffs:
        failures.append({"lambda": (2, 2, 1), "problem": "differs from (1/24)(N+1)N^2(N-1)(N-2)"})
    return _result("hook-content formula", f"|lambda| <= {max_size}, N <= {max_N}", checked, failures)


def check_characterization(n_max: int = 3) -> CheckResult:
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        words = enumerate_dyck(n)
        for sigma in words:
            for tau in words:
                for pi in words:
                    balanced = is_degree_balanced(sigma, tau, pi)
                    for f in enumerate_tfpl(sigma, tau, pi, max_n=n):
                        checked += 1
                        if bijection.check_balanced_characterization(f) != balanced:
                            failures.append({"sigma": sigma, "tau": tau, "pi": pi})
    return _result("balanced characterization", f"n <= {n_max}", checked, failures)


def check_structural(dyck_max: int = 8, fpl_max: int = 5) -> CheckResult:
    failures, checked = [], 0
    for n in range(dyck_max + 1):
        checked += 1
        if len(enumerate_dyck(n)) != catalan(n):
            failures.append({"n": n, "problem": "Dyck count"})
    totals = {}
    for n in range(1, fpl_max + 1):
        checked += 1
        total = sum(fpl_census(n, max_n=fpl_max).values())
        totals[n] = total
        if total != len(enumerate_fpl(n, max_n=fpl_max)):
            failures.append({"n": n, "problem": "sum of A_pi differs from FPL count"})
    result = _result("structural counts", f"Dyck n <= {dyck_max}, FPL n <= {fpl_max}", checked, failures)
    result.note = f"FPL totals {totals}"
    return result


def check_symmetries(n_max: int = 3, lr_max: int = 8) -> CheckResult:
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        words = enumerate_dyck(n)
        for sigma in words:
            for tau in words:
                counts = tfpl_census(sigma, tau, max_n=n)
                mirrored = tfpl_census(conjugate(tau), conjugate(sigma), max_n=n)
                for pi in words:
                    checked += 1
                    if counts[pi] != mirrored[conjugate(pi)]:
                        failures.append({"sigma": sigma, "tau": tau, "pi": pi})
                for pi in words:
                    for f in enumerate_tfpl(sigma, tau, pi, max_n=n):
                        checked += 1
                        if not reflect(f).is_valid() or reflect(reflect(f)) != f:
                            failures.append({"sigma": sigma, "tau": tau, "pi": pi, "problem": "reflect"})
    for size in range(lr_max + 1):
        for lam in partitions(size):
            for k in range(size + 1):
                for mu in partitions(k):
                    for nu in partitions(size - k):
                        checked += 1
                        if lr_coefficient(lam, mu, nu) != lr_coefficient(lam, nu, mu):
                            failures.append({"lambda": lam, "mu": mu, "nu": nu})
    return _result("symmetries", f"TFPL n <= {n_max}, |lambda| <= {lr_max}", checked, failures)


def verify_all(config: Config | None = None, rule_table: LocalRuleTable | None = None) -> dict:
    """Run every check, capped by the config bounds. Returns a JSON-able report."""
    config = config or Config()
    results: list[CheckResult] = []
    if rule_table is not None:
        try:
            validate_rule_table(rule_table)
        except RuleTableError as exc:
            results.append(CheckResult("local rule table", False, "table", 1, [str(exc)], exc.invariant))
            return _report(results, config)
    else:
        default_rule_table()
    tfpl_n, puzzle_n, fpl_n = config.tfpl_max_n, config.puzzle_max_n, config.fpl_max_n
    small = min(3, tfpl_n, puzzle_n)
    plan = [
        (check_counts_agree, {"n_max": min(4, tfpl_n, puzzle_n)}, 4),
        (check_bijection, {"n_max": small, "table": rule_table}, 3),
        (check_no_cycles, {"n_max": min(3, puzzle_n), "table": rule_table}, 3),
        (check_vanishing, {"n_max": min(3, tfpl_n)}, 3),
        (check_identity_t, {"n_max": min(4, tfpl_n)}, 4),
        (check_identity_c, {"max_size": 6}, 6),
        (check_identity_tc, {"n_max": min(4, tfpl_n)}, 4),
        (check_api_formula, {"sizes": tuple(n for n in (1, 2) if n <= tfpl_n), "fpl_max_n": min(5, fpl_n)}, 5),
        (check_hook_content, {}, 6),
        (check_characterization, {"n_max": min(3, tfpl_n)}, 3),
        (check_structural, {"fpl_max": min(5, fpl_n)}, 5),
        (check_symmetries, {"n_max": min(3, tfpl_n)}, 3),
    ]
    for func, kwargs, full in plan:
        try:
            result = func(**kwargs)
        except Exception as exc:  # surfaced in the report with context
            result = CheckResult(func.__name__, False, str(kwargs), 0, [f"{type(exc).__name__}: {exc}"])
        capped = [v for k, v in kwargs.items() if k in ("n_max", "fpl_max_n", "fpl_max") and v < full]
        if capped:
            result.note = (result.note + "; " if result.note else "") + "reduced scope from config bounds"
        results.append(result)
    return _report(results, config)


def _report(results: list[CheckResult], config: Config) -> dict:
    return {
        "pass": all(r.passed for r in results),
        "config": config.to_json(),
        "checks": [r.to_json() for r in results],
        "lines": [r.line() for r in results],
    }
