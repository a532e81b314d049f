"""Census tables for one size n, written as JSON files."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .config import Config
from .dyck import enumerate_dyck, format_partition, word_to_diagram
from .fpl import check_bound, fpl_census
from .identities import verify_identity_c, verify_identity_t, verify_identity_tc
from .lr import lr_coefficient
from .puzzles import puzzle_count
from .tfpl import is_degree_balanced, tfpl_census


def _pair_census(args) -> tuple[str, str, dict[str, int]]:
    sigma, tau, max_n = args
    return sigma, tau, {str(pi): t for pi, t in tfpl_census(sigma, tau, max_n).items()}


def _write(path: Path, data) -> str:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        raise OSError(f"census: cannot write {path}: {exc}") from exc
    return str(path)


def run_census(config: Config, n: int) -> dict:
    """Tabulate A_pi, t and c for size ``n`` and write them under ``config.output_dir``.

    TFPL censuses of the (sigma, tau) pairs are farmed out to
    ``config.parallelism`` worker processes; the written tables are sorted,
    so output does not depend on the worker count.
    """
    check_bound(n, config.fpl_max_n, "run_census (FPL)")
    check_bound(n, config.tfpl_max_n, "run_census (TFPL)")
    check_bound(n, config.puzzle_max_n, "run_census (puzzles)")
    words = enumerate_dyck(n)
    a_table = {str(pi): count for pi, count in sorted(fpl_census(n, config.fpl_max_n).items())}

    jobs = [(sigma, tau, config.tfpl_max_n) for sigma in words for tau in words]
    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            results = list(pool.map(_pair_census, jobs))
    else:
        results = [_pair_census(job) for job in jobs]
    t_of = {(s, t): counts for s, t, counts in results}

    rows = []
    for sigma in words:
        for tau in words:
            for pi in words:
                if not is_degree_balanced(sigma, tau, pi):
                    continue
                lam, mu, nu = word_to_diagram(pi), word_to_diagram(sigma), word_to_diagram(tau)
                rows.append({
                    "sigma": sigma,
                    "tau": tau,
                    "pi": pi,
                    "t": t_of[sigma, tau][pi],
                    "puzzles": puzzle_count(sigma, tau, pi, config.puzzle_max_n),
                    "c": lr_coefficient(lam, mu, nu),
                    "shapes": [format_partition(s) for s in (mu, nu, lam)],
                })

    reports = []
    for pi in words:
        reports.append(verify_identity_t(pi, config.tfpl_max_n).to_json())
        reports.append(verify_identity_tc(pi, config.tfpl_max_n).to_json())
        reports.append(verify_identity_c(word_to_diagram(pi)).to_json())
    summary = {
        "n": n,
        "pass": all(r["pass"] for r in reports) and all(r["t"] == r["puzzles"] == r["c"] for r in rows),
        "identities": reports,
    }

    out = Path(config.output_dir)
    files = {
        "a_pi": _write(out / f"a_pi_n{n}.json", {"n": n, "total": sum(a_table.values()), "counts": a_table}),
        "tc": _write(out / f"tc_n{n}.json", {"n": n, "rows": rows}),
        "identities": _write(out / f"identities_n{n}.json", summary),
    }
    return {
        "n": n,
        "fpl_total": sum(a_table.values()),
        "balanced_triples": len(rows),
        "t_equals_c": all(r["t"] == r["c"] for r in rows),
        "pass": summary["pass"],
        "files": files,
    }
