#!/usr/bin/env python3
"""Run the lattice-interval check over all triangular shapes up to a bound
and tabulate the outcome per shape."""
from __future__ import annotations

import argparse
import logging
import time
from collections import Counter
from dataclasses import dataclass

from tridyck.partition import format_partition, triangular_partitions_up_to
from tridyck.report import NOT_APPLICABLE, PASS
from tridyck.verify import check_lattice_conjecture

log = logging.getLogger("conjecture_sweep")


@dataclass(frozen=True)
class SweepConfig:
    max_size: int = 12
    min_parts: int = 3
    verbose: bool = False


def sweep(cfg: SweepConfig) -> Counter:
    tally: Counter = Counter()
    for lam in triangular_partitions_up_to(cfg.max_size):
        if len(lam) < cfg.min_parts:
            continue
        start = time.perf_counter()
        case = check_lattice_conjecture(lam)
        tally[case.status] += 1
        log.info("%s %s %.2fs", format_partition(lam), case.status, time.perf_counter() - start)
        if case.status not in (PASS, NOT_APPLICABLE) or cfg.verbose:
            print(format_partition(lam), case.status, case.details.get("expansion_qt", ""))
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=SweepConfig.max_size)
    ap.add_argument("--min-parts", type=int, default=SweepConfig.min_parts)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    tally = sweep(SweepConfig(**vars(args)))
    print("  ".join(f"{k}={v}" for k, v in sorted(tally.items())))


if __name__ == "__main__":
    main()
