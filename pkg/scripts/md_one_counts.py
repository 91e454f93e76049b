"""Count paths with exactly one descent maximizer, for comparison against OEIS A088456.

Counts come from linear-extension counts of the maximizer posets, so n = 9 and
beyond stay cheap; brute force confirms them up to --brute-force-max.
"""

import argparse
import logging
from dataclasses import dataclass

from canon_descent.sequences import seq_md_equals_one


@dataclass
class Config:
    max_n: int = 9
    brute_force_max: int = 8
    threads: str = "auto"


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--brute-force-max", type=int, default=Config.brute_force_max)
    p.add_argument("--threads", default=Config.threads)
    cfg = Config(**vars(p.parse_args()))
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    report = seq_md_equals_one(cfg.max_n, brute_force_max=cfg.brute_force_max, threads=cfg.threads)
    print(", ".join(str(v) for v in report.values()))
    for name, ok in report.checks.items():
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")


if __name__ == "__main__":
    main()
