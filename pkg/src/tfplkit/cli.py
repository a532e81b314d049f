"""Command-line entry point: ``tfplkit <command> [options]``.

Every command prints JSON on stdout except ``lr`` (a bare integer) and
``render`` without ``--out`` (the SVG document). Verification commands exit
with status 1 when a check fails; bad input exits with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bijection, identities, verification
from .census import run_census
from .config import load_config
from .dyck import (
    DyckWord,
    degree,
    enumerate_dyck,
    format_partition,
    parse_partition,
    word_to_diagram,
)
from .fpl import GridFPL, a_pi_m, enumerate_fpl, fpl_census, link_pattern
from .lr import lr_coefficient
from .puzzles import Puzzle, enumerate_puzzles, puzzle_count
from .render import render_svg
from .tfpl import enumerate_oriented_tfpl, enumerate_tfpl, tfpl_census, tfpl_count, tfpl_from_json


def _emit(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _need(args, *names) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"{args.command} requires {', '.join(missing)}")


def cmd_dyck(args, config) -> int:
    _need(args, "n")
    rows = [
        {"word": w, "degree": degree(w), "diagram": format_partition(word_to_diagram(w))}
        for w in enumerate_dyck(args.n)
    ]
    _emit({"n": args.n, "count": len(rows), "words": rows})
    return 0


def cmd_fpl(args, config) -> int:
    _need(args, "n")
    if args.pi is not None:
        m = args.m or 0
        _emit({"pi": args.pi, "m": m, "count": a_pi_m(args.pi, m, config.fpl_max_n)})
        return 0
    if args.list:
        fpls = enumerate_fpl(args.n, config.fpl_max_n)
        _emit([{**f.to_json(), "pi": link_pattern(f)} for f in fpls])
        return 0
    census = fpl_census(args.n, config.fpl_max_n)
    _emit({"n": args.n, "total": sum(census.values()), "counts": dict(sorted(census.items()))})
    return 0


def cmd_tfpl(args, config) -> int:
    _need(args, "sigma", "tau")
    if args.pi is None:
        census = tfpl_census(args.sigma, args.tau, config.tfpl_max_n)
        _emit({"sigma": args.sigma, "tau": args.tau, "counts": {str(k): v for k, v in census.items()}})
        return 0
    if args.list:
        if args.oriented:
            configs = enumerate_oriented_tfpl(args.sigma, args.tau, args.pi, config.tfpl_max_n)
        else:
            configs = enumerate_tfpl(args.sigma, args.tau, args.pi, config.tfpl_max_n)
        _emit([c.to_json() for c in configs])
        return 0
    count = tfpl_count(args.sigma, args.tau, args.pi, config.tfpl_max_n)
    _emit({"sigma": args.sigma, "tau": args.tau, "pi": args.pi, "count": count})
    return 0


def cmd_puzzle(args, config) -> int:
    _need(args, "sigma", "tau", "pi")
    if args.list:
        _emit([p.to_json() for p in enumerate_puzzles(args.sigma, args.tau, args.pi, config.puzzle_max_n)])
        return 0
    count = puzzle_count(args.sigma, args.tau, args.pi, config.puzzle_max_n)
    _emit({"sigma": args.sigma, "tau": args.tau, "pi": args.pi, "count": count})
    return 0


def cmd_lr(args, config) -> int:
    _need(args, "lam", "mu", "nu")
    print(lr_coefficient(parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)))
    return 0


def cmd_phi(args, config) -> int:
    _need(args, "puzzle")
    puzzle = Puzzle.from_json(_load_json(args.puzzle))
    image = bijection.phi_oriented(puzzle) if args.oriented else bijection.phi(puzzle)
    _emit(image.to_json())
    return 0


def cmd_phi_inverse(args, config) -> int:
    _need(args, "tfpl")
    f = tfpl_from_json(_load_json(args.tfpl))
    if not isinstance(f, bijection.TFPLConfig):
        f = f.undirected()
    _emit(bijection.phi_inverse(f).to_json())
    return 0


def cmd_verify(args, config) -> int:
    _need(args, "identity", "n")
    words = enumerate_dyck(args.n)
    if args.identity == "api":
        _need(args, "m", "k")
        reports = [
            identities.verify_api_formula(pi, args.m, args.k, config.fpl_max_n, config.tfpl_max_n)
            for pi in ([args.pi] if args.pi else words)
        ]
        scope = {"n": args.n, "m": args.m, "k": args.k}
    elif args.identity == "c":
        reports = [identities.verify_identity_c(word_to_diagram(pi)) for pi in words]
        scope = {"n": args.n, "shapes": "lambda(pi) for pi in D_n"}
    else:
        check = identities.verify_identity_t if args.identity == "t" else identities.verify_identity_tc
        reports = [check(pi, config.tfpl_max_n) for pi in words]
        scope = {"n": args.n}
    failures = [r.to_json() for r in reports if not r]
    _emit({"identity": args.identity, "range": scope, "pass": not failures, "failures": failures})
    return 0 if not failures else 1


def cmd_verify_bijection(args, config) -> int:
    _need(args, "n")
    result = verification.check_bijection(args.n)
    _emit(result.to_json())
    return 0 if result.passed else 1


def cmd_verify_all(args, config) -> int:
    report = verification.verify_all(config)
    for line in report["lines"]:
        print(line, file=sys.stderr)
    _emit(report)
    return 0 if report["pass"] else 1


def cmd_census(args, config) -> int:
    _need(args, "n")
    report = run_census(config, args.n)
    _emit(report)
    return 0 if report["pass"] else 1


def _load_renderable(data):
    if "labels" in data:
        return Puzzle.from_json(data)
    if "sigma" in data:
        return tfpl_from_json(data)
    return GridFPL.from_json(data)


def cmd_render(args, config) -> int:
    _need(args, "input")
    svg = render_svg(_load_renderable(_load_json(args.input)))
    if args.out is None:
        print(svg)
        return 0
    target = Path(args.out) / (Path(args.input).stem + ".svg")
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(svg + "\n")
    except OSError as exc:
        raise ValueError(f"cannot write {target}: {exc.strerror}") from exc
    _emit({"svg": str(target)})
    return 0


COMMANDS = {
    "dyck": (cmd_dyck, "list Dyck words of size n with degree and diagram"),
    "fpl": (cmd_fpl, "FPL counts by link pattern, or A_pi(m) with --pi/--m"),
    "tfpl": (cmd_tfpl, "TFPL counts (all pi, or one with --pi); --list dumps configurations"),
    "puzzle": (cmd_puzzle, "KT puzzle count for a boundary; --list dumps puzzles"),
    "lr": (cmd_lr, "Littlewood-Richardson coefficient c^lambda_{mu,nu}"),
    "phi": (cmd_phi, "map a puzzle JSON file to its TFPL"),
    "phi-inverse": (cmd_phi_inverse, "map a TFPL JSON file back to its puzzle"),
    "verify": (cmd_verify, "check one summation identity over D_n"),
    "verify-bijection": (cmd_verify_bijection, "exhaustive bijection check up to size n"),
    "verify-all": (cmd_verify_all, "run the whole verification suite"),
    "census": (cmd_census, "write count tables for size n as JSON"),
    "render": (cmd_render, "render an FPL, TFPL or puzzle JSON file as SVG"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--jobs", type=int, help="worker processes")
    common.add_argument("--out", help="output directory")
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--sigma", type=DyckWord)
    common.add_argument("--tau", type=DyckWord)
    common.add_argument("--pi", type=DyckWord)
    common.add_argument("--fpl-max-n", type=int)
    common.add_argument("--tfpl-max-n", type=int)
    common.add_argument("--puzzle-max-n", type=int)

    parser = argparse.ArgumentParser(prog="tfplkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name in ("fpl", "tfpl", "puzzle"):
            p.add_argument("--list", action="store_true", help="print every configuration")
        if name in ("tfpl", "phi"):
            p.add_argument("--oriented", action="store_true")
        if name == "lr":
            p.add_argument("--lambda", dest="lam", help="outer shape, e.g. 3,2,1")
            p.add_argument("--mu")
            p.add_argument("--nu")
        if name == "phi":
            p.add_argument("--puzzle", help="puzzle JSON file")
        if name == "phi-inverse":
            p.add_argument("--tfpl", help="TFPL JSON file")
        if name == "verify":
            p.add_argument("--identity", choices=("t", "c", "tc", "api"))
        if name == "render":
            p.add_argument("--input", help="JSON file to draw")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(
            args.config,
            fpl_max_n=args.fpl_max_n,
            tfpl_max_n=args.tfpl_max_n,
            puzzle_max_n=args.puzzle_max_n,
            parallelism=args.jobs,
            output_dir=args.out if args.command == "census" else None,
        )
        return COMMANDS[args.command][0](args, config)
    except (ValueError, OSError) as exc:
        print(f"tfplkit {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
