"""Command-line front end.

Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 brute-force bound exceeded.
Progress and warnings go to stderr so stdout stays machine-readable.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .canon import (
    InvalidPermutation,
    InvalidTableau,
    RectTableau,
    SizeMismatch,
    can,
    format_word,
    parse_permutation,
)
from .dyck import DyckPathError, bcomp, bounce, bounce_factors, bpk, parse_path, reverse_bounce
from .maximizers import (
    NotInBSet,
    b_set,
    bperm,
    count_linear_extensions,
    linear_extensions,
    max_poset,
    maximizer_report,
    vperm,
)
from .parallel import ENV_VAR, resolve_threads
from .polynomials import BruteForceBoundExceeded, canon_descent_poly, check_bound, tableau_descent_poly, tilde_poly
from .sequences import SEQUENCES, write_bfile
from .verify import SUITES, failed, run_suites

log = logging.getLogger("canon_descent")

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


@dataclass
class CliConfig:
    brute_force_bound: int = 9
    exhaustive_suite_bound: int = 7
    threads: int | str = "auto"
    output_mode: str = "text"

    def __post_init__(self) -> None:
        if self.brute_force_bound < 1 or self.exhaustive_suite_bound < 1:
            raise ValueError("bounds must be at least 1")
        if self.output_mode not in ("text", "json"):
            raise ValueError(f"unknown output mode {self.output_mode!r}")

    @property
    def json(self) -> bool:
        return self.output_mode == "json"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        # the environment variable wins over --threads
        threads = os.environ.get(ENV_VAR) or args.threads
        return cls(
            brute_force_bound=args.bound,
            exhaustive_suite_bound=args.suite_bound,
            threads=threads if threads == "auto" else int(threads),
            output_mode="json" if args.json else "text",
        )


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _emit(cfg: CliConfig, text: str, obj: Any) -> None:
    print(_dump(obj) if cfg.json else text)


# subcommands


def cmd_poly(args, cfg: CliConfig) -> int:
    d = parse_path(args.path)
    p = (tilde_poly if args.tilde else canon_descent_poly)(d, cfg.brute_force_bound)
    print(p.to_json() if cfg.json else p.to_text())
    return EXIT_OK


def cmd_tableau_poly(args, cfg: CliConfig) -> int:
    if args.column_reading:
        T = RectTableau.column_reading(*args.column_reading)
    elif args.rows:
        T = RectTableau(tuple(tuple(int(x) for x in row.replace(",", " ").split()) for row in args.rows.split("/")))
    else:
        raise InvalidTableau("give ROWS or --column-reading N M")
    p = tableau_descent_poly(T, cfg.brute_force_bound)
    print(p.to_json() if cfg.json else p.to_text())
    return EXIT_OK


def cmd_can(args, cfg: CliConfig) -> int:
    word = can(parse_path(args.path), parse_permutation(args.perm)).word
    _emit(cfg, format_word(word), {"word": format_word(word, ",")})
    return EXIT_OK


def _cmd_algorithm(name: str, fn):
    def run(args, cfg: CliConfig) -> int:
        d = parse_path(args.path)
        sigma = fn(d)
        _emit(cfg, format_word(sigma), {"path": str(d), name: list(sigma)})
        return EXIT_OK

    return run


def cmd_maximizers(args, cfg: CliConfig) -> int:
    d = parse_path(args.path)
    report = maximizer_report(d, cfg.brute_force_bound)
    if "M_d_omitted" in report:
        log.warning("M_d omitted: %s", report["M_d_omitted"])
    if cfg.json:
        print(_dump(report))
        return EXIT_OK
    lines = [
        f"path: {report['path']}",
        f"m_d: {report['m_d']}",
        f"bperm: {format_word(report['bperm'])}",
        f"vperm: {format_word(report['vperm'])}",
        f"|B_d|: {len(report['B_d'])}",
    ]
    for block in report["partition"]:
        words = " ".join(format_word(s) for s in block["extensions"])
        lines.append(f"  {block['b']}: {words}")
    if "M_d" in report:
        lines.append(f"|M_d|: {len(report['M_d'])}")
        lines.append("M_d: " + " ".join(format_word(s) for s in report["M_d"]))
    else:
        lines.append(f"M_d: omitted ({report['M_d_omitted']})")
    print("\n".join(lines))
    return EXIT_OK


def cmd_bset(args, cfg: CliConfig) -> int:
    d = parse_path(args.path)
    paths = [str(b) for b in b_set(d)]
    _emit(cfg, "\n".join(paths), {"path": str(d), "B_d": paths})
    return EXIT_OK


def cmd_poset(args, cfg: CliConfig) -> int:
    d, b = parse_path(args.path), parse_path(args.b)
    P = max_poset(d, b)
    covers = sorted(P.cover_relations())
    obj = {
        "path": str(d),
        "b": str(b),
        "relations": [list(c) for c in covers],
        "chain": P.is_chain(),
        "count": count_linear_extensions(P),
    }
    if not args.count_only:
        obj["extensions"] = [list(s) for s in linear_extensions(P)]
    if cfg.json:
        print(_dump(obj))
        return EXIT_OK
    lines = ["covers: " + ", ".join(f"a{i} > a{j}" for i, j in obj["relations"]), f"chain: {obj['chain']}"]
    lines.append(f"linear extensions: {obj['count']}")
    lines += [format_word(s) for s in obj.get("extensions", [])]
    print("\n".join(lines))
    return EXIT_OK


def cmd_bounce(args, cfg: CliConfig) -> int:
    d = parse_path(args.path)
    obj = {
        "path": str(d),
        "bounce": str(bounce(d)),
        "reverse_bounce": str(reverse_bounce(d)),
        "bcomp": list(bcomp(d)),
        "bpk": bpk(d),
        "factors": ["".join("U" if s else "D" for s in f) for f in bounce_factors(d).factors],
    }
    text = "\n".join(f"{k}: {' '.join(map(str, v)) if isinstance(v, list) else v}" for k, v in obj.items())
    _emit(cfg, text, obj)
    return EXIT_OK


def cmd_sequence(args, cfg: CliConfig) -> int:
    if args.max_n < 1:
        raise ValueError("--max-n must be at least 1")
    log.info("computing %s up to n = %d", args.name, args.max_n)
    report = SEQUENCES[args.name](args.max_n, threads=cfg.threads)
    if args.bfile:
        write_bfile(report, args.bfile)
        log.info("wrote %s", args.bfile)
    if cfg.json:
        print(_dump(report.to_dict()))
    else:
        lines = [f"{n} {' '.join(map(str, v)) if isinstance(v, tuple) else v}" for n, v in report.terms]
        for key, seq in report.extra.items():
            lines.append(f"{key}: " + " ".join(str(v) for _, v in seq))
        lines += [f"[{'PASS' if ok else 'FAIL'}] {name}" for name, ok in report.checks.items()]
        print("\n".join(lines))
    for v in report.violations:
        log.warning("CONJECTURE_VIOLATED %s at n=%s", v["conjecture"], v["n"])
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_verify(args, cfg: CliConfig) -> int:
    max_n = cfg.exhaustive_suite_bound if args.max_n is None else args.max_n
    check_bound(max_n, cfg.brute_force_bound)
    names = [s for chunk in args.suite for s in chunk.split(",")] or ["all"]
    checks = run_suites(names, max_n, threads=cfg.threads)
    bad = failed(checks)
    conjectures = [c for c in checks if c.conjectural and not c.passed]
    if cfg.json:
        print(_dump({"max_n": max_n, "ok": not bad, "checks": [c.to_dict() for c in checks]}))
    else:
        print("\n".join(c.line() for c in checks))
        print(f"{'PASS' if not bad else 'FAIL'}: {len(checks) - len(bad)}/{len(checks)} checks, n <= {max_n}")
    if conjectures:
        log.warning("%d conjecture violation(s) reported; not counted as failures", len(conjectures))
    return EXIT_CHECK if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", default="auto", help=f"worker processes or 'auto'; ${ENV_VAR} overrides")
    common.add_argument("--bound", type=int, default=9, help="largest semilength for brute force")
    common.add_argument("--suite-bound", type=int, default=7, help="default --max-n for verify")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="canon-descent", description="Canon descent polynomials of Dyck paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help: str, path: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        if path:
            p.add_argument("path", help="Dyck path as U/D letters")
        p.set_defaults(handler=handler)
        return p

    p = add("poly", cmd_poly, "canon descent polynomial C_d(t)")
    p.add_argument("--tilde", action="store_true", help="restrict to permutations starting with 1 or n")
    p = add("can", cmd_can, "canon word of a path and permutation")
    p.add_argument("perm", help="permutation, e.g. 4132 or 4,1,3,2")
    add("bperm", _cmd_algorithm("bperm", bperm), "greedy descent maximizer")
    add("vperm", _cmd_algorithm("vperm", vperm), "valley-swap descent maximizer")
    add("maximizers", cmd_maximizers, "m_d, both algorithms, B_d and the poset partition of M_d")
    add("bset", cmd_bset, "paths in B_d")
    p = add("poset", cmd_poset, "maximizer poset of a path d and b in B_d")
    p.add_argument("b", help="a path in B_d")
    p.add_argument("--count-only", action="store_true")
    add("bounce", cmd_bounce, "bounce path, composition and factors")
    p = add("tableau-poly", cmd_tableau_poly, "descent polynomial of a rectangular standard tableau", path=False)
    p.add_argument("rows", nargs="?", help="rows separated by '/', entries by commas or spaces")
    p.add_argument("--column-reading", type=int, nargs=2, metavar=("N", "M"))
    p = add("sequence", cmd_sequence, "integer sequences with cross-checks", path=False)
    p.add_argument("name", choices=sorted(SEQUENCES))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--bfile", help="write 'index value' lines to this file")
    p = add("verify", cmd_verify, "exhaustive property suites", path=False)
    p.add_argument("--max-n", type=int)
    p.add_argument(
        "--suite", action="append", default=[], help=f"repeatable or comma separated: all, {', '.join(SUITES)}"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s", stream=sys.stderr
    )
    try:
        cfg = CliConfig.from_args(args)
        resolve_threads(cfg.threads)
        return args.handler(args, cfg)
    except BruteForceBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (DyckPathError, InvalidPermutation, InvalidTableau, SizeMismatch, NotInBSet, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
