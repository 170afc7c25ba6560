#!/usr/bin/env python3
"""Regenerate the golden regression file from the shipped default dataset.

Run from the repository root after any intentional model or calibration
change, then review the diff:

    python3 scripts/make_golden.py
"""

import json
from pathlib import Path

from neurobench import load_datasets, report
from neurobench.chip import nominal_config, chip_bench

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden" / "golden.json"


def main():
    registry = load_datasets()
    payload = {"elements": {}, "nominal_chip": {}, "workloads": {}}

    for tech in registry.enumerate_technologies():
        bench = report.bench_technology(tech, registry)
        payload["elements"][tech.label] = list(bench.columns())
        cfg = nominal_config(registry.constants, spiking=tech.network_kind == "SNN")
        cb = chip_bench(cfg, bench, registry.constants)
        payload["nominal_chip"][tech.label] = {
            "area": cb.area,
            "firing_rate": cb.firing_rate,
            "time_step": cb.time_step,
            "energy_per_event": cb.energy_per_event,
            "syn_throughput": cb.syn_throughput,
            "power": cb.power,
            "energy_per_step": cb.energy_per_step,
        }

    for name in sorted(registry.workloads):
        per_tech = {}
        for tech in registry.enumerate_technologies():
            wb = report.bench_workload(name, tech, registry)
            per_tech[tech.label] = {
                "area": wb.area,
                "delay": wb.delay,
                "energy": wb.energy,
                "schedule": wb.schedule,
            }
        payload["workloads"][name] = per_tech

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
