"""Randomized scan of monomial ideals.

Every instance is generated from ``(master_seed, index)`` alone, so a report
is reproducible regardless of how many workers produced it.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .ratpoly import to_text
from .segrezeta import (
    MonomialIdealSpec,
    conjecture_check,
    conjecture_polynomial,
    r_suite,
    zeta_numerators,
)
from .signature import inertia_congruence

SCHEMA = 1
WORKERS_ENV = "COVOLUME_WORKERS"


@dataclass(frozen=True)
class ScanConfig:
    num_factors_range: tuple[int, int] = (1, 3)
    max_exponent: int = 6
    num_generators_range: tuple[int, int] = (2, 6)
    count: int = 300
    master_seed: int = 20240229
    workers: int = 1

    def __post_init__(self):
        lo, hi = self.num_factors_range
        if not 1 <= lo <= hi:
            raise ValueError("num_factors_range must satisfy 1 <= min <= max")
        lo, hi = self.num_generators_range
        if not 1 <= lo <= hi:
            raise ValueError("num_generators_range must satisfy 1 <= min <= max")
        if self.max_exponent < 1:
            raise ValueError("max_exponent must be at least 1")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def to_json_obj(self) -> dict:
        d = asdict(self)
        d.pop("workers")
        d["distribution"] = ("num_factors and generator count uniform in their ranges; each exponent "
                             "vector uniform in [0, max_exponent]^l minus zero; duplicates dropped")
        return d


def instance_rng(master_seed: int, index: int) -> random.Random:
    digest = hashlib.sha256(f"{master_seed}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_spec(cfg: ScanConfig, index: int) -> MonomialIdealSpec:
    rng = instance_rng(cfg.master_seed, index)
    l = rng.randint(*cfg.num_factors_range)
    g = rng.randint(*cfg.num_generators_range)
    vecs = []
    for _ in range(g):
        v = tuple(rng.randint(0, cfg.max_exponent) for _ in range(l))
        while not any(v):
            v = tuple(rng.randint(0, cfg.max_exponent) for _ in range(l))
        vecs.append(v)
    return MonomialIdealSpec.of(vecs, l)


def _reverify(spec: MonomialIdealSpec, index: int, first) -> dict:
    """Recompute a conjecture failure with a second triangulation and signature routine."""
    nums = zeta_numerators(spec, triangulation_rng=random.Random(index))
    verdict = conjecture_check(nums, inertia_fn=inertia_congruence)
    return {"regular_triangulation_agrees": nums.R_reduced == first.R_reduced,
            "congruence_verdict": verdict.is_lorentzian, "witness": verdict.witness}


def run_instance(spec: MonomialIdealSpec, index: int) -> dict:
    start = time.perf_counter()
    record = {"index": index, "spec": spec.to_json_obj()}
    try:
        nums = zeta_numerators(spec)
        suite = r_suite(nums)
        verdict = conjecture_check(nums)
        record.update({
            "essential": [list(v) for v in nums.essential],
            "redundant": [list(v) for v in nums.redundant],
            "R_reduced": to_text(nums.R_reduced),
            "conjecture_polynomial": to_text(conjecture_polynomial(nums)),
            "suite": suite.to_json_obj(),
            "conjecture": verdict.to_json_obj(),
        })
        if not verdict.is_lorentzian:
            record["reverification"] = _reverify(spec, index, nums)
    except Exception as exc:  # recorded, never fatal to the scan
        record["error"] = f"{type(exc).__name__}: {exc}"
    record["wall_time"] = time.perf_counter() - start
    return record


def _job(args):
    cfg, index = args
    return run_instance(random_spec(cfg, index), index)


def resolve_workers(requested: int) -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return requested


def run_scan(cfg: ScanConfig, reproducer_dir: Optional[Path] = None) -> dict:
    start = time.perf_counter()
    workers = resolve_workers(cfg.workers)
    jobs = [(cfg, i) for i in range(cfg.count)]
    if workers == 1:
        records = [_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_job, jobs, chunksize=4))
    timing = {"total_seconds": time.perf_counter() - start, "workers": workers,
              "per_instance": [r.pop("wall_time") for r in records]}
    confirmed = []
    for r in records:
        rv = r.get("reverification")
        if rv and not rv["congruence_verdict"] and rv["regular_triangulation_agrees"]:
            confirmed.append(r["index"])
    summary = {
        "count": cfg.count,
        "errors": sum("error" in r for r in records),
        "suite_passed": sum(bool(r.get("suite", {}).get("passed")) for r in records),
        "conjecture_passed": sum(bool(r.get("conjecture", {}).get("is_lorentzian")) for r in records),
        "confirmed_conjecture_failures": confirmed,
    }
    if reproducer_dir is not None and confirmed:
        reproducer_dir.mkdir(parents=True, exist_ok=True)
        for i in confirmed:
            path = reproducer_dir / f"conjecture_failure_{cfg.master_seed}_{i}.json"
            path.write_text(json.dumps(records[i]["spec"], indent=2) + "\n")
    return {"schema": SCHEMA, "master_seed": cfg.master_seed, "config": cfg.to_json_obj(),
            "summary": summary, "instances": records, "timing": timing}


def deterministic_view(report: dict) -> dict:
    """The report without its timing block, for byte-level comparisons."""
    return {k: v for k, v in report.items() if k != "timing"}
