"""Run the axiom suites on every shipped model and print one table per model.

    python scripts/run_suites.py --trials 1000 --seed 42 [--json results.jsonl]
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from tarski_models.axioms import AXIOM_IDS, check_suite
from tarski_models.bindings import cartesian_binding, finite_binding, klein_binding
from tarski_models.finite import load_model
from tarski_models.report import render_table

MODELS_DIR = Path(__file__).resolve().parent.parent / "models"


@dataclass
class SuiteConfig:
    trials: int = 1000
    seed: int = 42
    bound: int = 100
    dims: tuple = (2,)
    axioms: tuple = AXIOM_IDS
    finite_models: tuple = field(default_factory=lambda: tuple(sorted(MODELS_DIR.glob("*.txt"))))


def bindings(cfg: SuiteConfig):
    for dim in cfg.dims:
        yield cartesian_binding(dim, cfg.bound)
    yield klein_binding(cfg.bound)
    for path in cfg.finite_models:
        yield finite_binding(load_model(path), name=f"finite:{Path(path).name}")


def run(cfg: SuiteConfig, json_path=None):
    records = []
    for binding in bindings(cfg):
        t0 = time.perf_counter()
        reports = check_suite(binding, cfg.axioms, cfg.trials, cfg.seed)
        print(render_table(reports, binding.name))
        print(f"({time.perf_counter() - t0:.1f}s)\n")
        records += [{"model": binding.name, **r.to_record()} for r in reports]
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"config": asdict(cfg)}, default=str) + "\n")
            fh.writelines(json.dumps(r) + "\n" for r in records)
    return records


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=SuiteConfig.trials)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    ap.add_argument("--bound", type=int, default=SuiteConfig.bound)
    ap.add_argument("--dims", default="2", help="comma-separated Cartesian dimensions")
    ap.add_argument("--json", help="write line-delimited records here")
    args = ap.parse_args()
    cfg = SuiteConfig(
        trials=args.trials,
        seed=args.seed,
        bound=args.bound,
        dims=tuple(int(d) for d in args.dims.split(",")),
    )
    run(cfg, args.json)


if __name__ == "__main__":
    main()
