"""Write a b-file for every sequence into a directory."""

import argparse
import logging
from dataclasses import dataclass
from pathlib import Path

from canon_descent.sequences import OEIS_IDS, SEQUENCES, write_bfile


@dataclass
class Config:
    max_n: int = 8
    out_dir: str = "bfiles"
    threads: str = "auto"


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--out-dir", default=Config.out_dir)
    p.add_argument("--threads", default=Config.threads)
    cfg = Config(**vars(p.parse_args()))
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, fn in SEQUENCES.items():
        report = fn(cfg.max_n, threads=cfg.threads)
        path = out / f"b_{name}.txt"
        write_bfile(report, path)
        status = "ok" if report.ok else "CHECK FAILED"
        print(f"{path}  {OEIS_IDS.get(name, '-')}  {status}")


if __name__ == "__main__":
    main()
