#!/usr/bin/env python3
"""Count sim-sym tableaux for every triangular shape up to a size bound.

Prints one line per shape: the shape, the number of standard tableaux,
the number of sim-sym ones, and whether the top-down tableau is among them.
"""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from tridyck.partition import format_partition, triangular_partitions_up_to
from tridyck.simsym import enumerate_sim_sym, is_sim_sym
from tridyck.tableaux import enumerate_standard_tableaux, top_down_tableau


@dataclass(frozen=True)
class CensusConfig:
    max_size: int = 9
    min_parts: int = 1
    as_json: bool = False


def census(cfg: CensusConfig) -> list[dict]:
    rows = []
    for lam in triangular_partitions_up_to(cfg.max_size):
        if len(lam) < cfg.min_parts:
            continue
        rows.append({
            "shape": list(lam),
            "tableaux": len(enumerate_standard_tableaux(lam)),
            "sim_sym": len(enumerate_sim_sym(lam)),
            "top_down_sim_sym": is_sim_sym(top_down_tableau(lam)),
        })
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=CensusConfig.max_size)
    ap.add_argument("--min-parts", type=int, default=CensusConfig.min_parts)
    ap.add_argument("--json", dest="as_json", action="store_true")
    cfg = CensusConfig(**vars(ap.parse_args()))
    rows = census(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1))
        return
    for r in rows:
        shape = format_partition(tuple(r["shape"]))
        flag = "top-down sim-sym" if r["top_down_sim_sym"] else ""
        print(f"{shape:>14}  {r['tableaux']:>6}  {r['sim_sym']:>4}  {flag}")


if __name__ == "__main__":
    main()
