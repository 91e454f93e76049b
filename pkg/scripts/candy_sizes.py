"""Sizes of the set of descent-maximizing permutations, with the bperm/vperm image counts."""

import argparse
import json
import logging
import time
from dataclasses import asdict, dataclass

from canon_descent.sequences import seq_candy_sizes


@dataclass
class Config:
    max_n: int = 8
    threads: str = "auto"
    out: str | None = None


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--threads", default=Config.threads)
    p.add_argument("--out", help="write the full report as JSON")
    cfg = Config(**vars(p.parse_args()))
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    start = time.perf_counter()
    report = seq_candy_sizes(cfg.max_n, threads=cfg.threads)
    elapsed = time.perf_counter() - start

    print(f"{'n':>2} {'all':>6} {'bperm':>6} {'vperm':>6} {'equal':>6}")
    extra = {k: dict(v) for k, v in report.extra.items()}
    for n, size in report.terms:
        print(f"{n:>2} {size:>6} {extra['candy-b'][n]:>6} {extra['candy-v'][n]:>6} {extra['bperm-eq-vperm'][n]:>6}")
    for name, ok in report.checks.items():
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    print(f"{len(report.violations)} conjecture violations, {elapsed:.1f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "report": report.to_dict()}, fh, indent=1)


if __name__ == "__main__":
    main()
