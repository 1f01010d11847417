"""Run every theorem check over a seeded random corpus and tabulate outcomes.

    python3 scripts/run_theorem_corpus.py --fields gf2,gf3 --count 200 --a-count 100 --out runs/corpus.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from solvlie.cli import STATUSES, corpus_items, run_corpus, summary_rows
from solvlie.oracle import EnumBudget


@dataclass
class CorpusConfig:
    fields: tuple[str, ...] = ("gf2", "gf3")
    dim_max: int = 5
    count: int = 200
    a_count: int = 100
    seed: int = 42
    threads: int = 1
    max_pairs: int = EnumBudget.max_pairs
    max_subspaces: int = EnumBudget.max_subspaces


def parse_args() -> tuple[CorpusConfig, Path | None]:
    d = CorpusConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", default=",".join(d.fields))
    ap.add_argument("--dim-max", type=int, default=d.dim_max)
    ap.add_argument("--count", type=int, default=d.count)
    ap.add_argument("--a-count", type=int, default=d.a_count)
    ap.add_argument("--seed", type=int, default=d.seed)
    ap.add_argument("--threads", type=int, default=d.threads)
    ap.add_argument("--max-pairs", type=int, default=d.max_pairs)
    ap.add_argument("--max-subspaces", type=int, default=d.max_subspaces)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    cfg = CorpusConfig(tuple(s for s in a.fields.split(",") if s), a.dim_max, a.count, a.a_count,
                       a.seed, a.threads, a.max_pairs, a.max_subspaces)
    return cfg, a.out


def run(cfg: CorpusConfig) -> dict:
    items = corpus_items("random", list(cfg.fields), cfg.dim_max, cfg.count, cfg.seed, cfg.a_count)
    budget = EnumBudget(max_pairs=cfg.max_pairs, max_subspaces=cfg.max_subspaces)
    t0 = time.perf_counter()
    results = run_corpus(items, cfg.seed, budget, cfg.threads)
    elapsed = time.perf_counter() - t0
    dims = [r["dim"] for r in results if "dim" in r]
    return {
        "config": asdict(cfg),
        "seconds": round(elapsed, 2),
        "algebras": len(results),
        "dims": {str(n): dims.count(n) for n in sorted(set(dims))},
        "table": {row[0]: dict(zip(STATUSES, row[1:])) for row in summary_rows(results)},
    }


def main():
    cfg, out = parse_args()
    summary = run(cfg)
    width = max(len(k) for k in summary["table"])
    print(f"{summary['algebras']} algebras in {summary['seconds']} s, dims {summary['dims']}")
    print("theorem".ljust(width), *(s[:8].rjust(9) for s in STATUSES))
    for k, row in summary["table"].items():
        print(k.ljust(width), *(str(row[s]).rjust(9) for s in STATUSES))
    if out:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(summary, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
