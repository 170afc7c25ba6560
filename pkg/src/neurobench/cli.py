"""Command-line interface.

Subcommands: devices list, bench element/network/chip/workload, topsdown,
export. Exit status 0 on success, 1 on data errors (single-line diagnostic
on stderr), 2 on usage errors. NEUROBENCH_DATA_DIR or --data-dir overrides
the packaged datasets.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report, units
from .chip import ChipConfig, nominal_config
from .registry import DatasetError, Registry, load_datasets
from .topsdown import backfill_derived, run_workload_on_chip, topsdown_element


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neurobench", description=__doc__.splitlines()[0])
    parser.add_argument("--data-dir", type=Path, default=None, help="dataset directory override")
    parser.add_argument("--precision", type=int, default=6, help="significant digits in tabular output")
    sub = parser.add_subparsers(dest="command", required=True)

    devices = sub.add_parser("devices", help="device table operations")
    devices_sub = devices.add_subparsers(dest="devices_command", required=True)
    devices_sub.add_parser("list", help="list device records")

    bench = sub.add_parser("bench", help="bottoms-up benchmarks")
    bench_sub = bench.add_subparsers(dest="bench_command", required=True)

    b_elem = bench_sub.add_parser("element", help="12-column element bench of one technology")
    b_elem.add_argument("--tech", required=True)

    b_net = bench_sub.add_parser("network", help="element benches of every technology of one kind")
    b_net.add_argument("--kind", required=True, choices=["ANN", "CNN", "SNN", "ONN"])

    b_chip = bench_sub.add_parser("chip", help="chip-level figures for one technology")
    group = b_chip.add_mutually_exclusive_group(required=True)
    group.add_argument("--nominal", action="store_true")
    group.add_argument("--config", type=Path, help="JSON chip config file")
    b_chip.add_argument("--tech", required=True)

    b_work = bench_sub.add_parser("workload", help="run a named workload on one technology")
    b_work.add_argument("--name", required=True)
    b_work.add_argument("--tech", required=True)
    b_work.add_argument("--schedule", choices=["parallel", "tmux"], default=None)

    td = sub.add_parser("topsdown", help="tops-down chip benchmarking")
    td.add_argument("--chip", required=True)
    td.add_argument("--workload", default=None)
    td.add_argument("--backfill", action="store_true", help="show derived-field back-fill")

    exp = sub.add_parser("export", help="write datasets derived from the model")
    exp.add_argument("--what", required=True, choices=["matrix", "scatter", "pareto"])
    exp.add_argument("--out", required=True, type=Path)
    exp.add_argument("--scope", default="elements", choices=["elements", "workload", "chips"])
    exp.add_argument("--scatter-kind", default="neuron", choices=["synapse", "neuron", "workload", "power"])
    exp.add_argument("--workload", default=None)
    return parser


def _load(args) -> Registry:
    return load_datasets(args.data_dir)


def _cmd_devices(args, registry: Registry) -> None:
    print("name,area_nm2,delay_ps,energy_aJ,r_on_Ohm,r_off_Ohm")
    for name in sorted(registry.devices):
        d = registry.devices[name]
        r_on = "" if d.r_on is None else f"{d.r_on:g}"
        r_off = "" if d.r_off is None else f"{d.r_off:g}"
        print(f"{name},{d.area_int:g},{d.delay_int:g},{d.energy_int:g},{r_on},{r_off}")


def _cmd_bench(args, registry: Registry) -> None:
    p = args.precision
    if args.bench_command == "element":
        tech = registry.technology(args.tech)
        bench = report.bench_technology(tech, registry)
        cols = list(bench.columns())
        for i in range(4):  # area columns are reported in um^2
            cols[i] /= report.NM2_PER_UM2
        for name, value in zip(report.MATRIX_HEADER[1:], cols):
            print(f"{name}: {value:.{p}g}")
    elif args.bench_command == "network":
        sys.stdout.write(report.emit_matrix(registry, "elements", network_kind=args.kind, precision=p))
    elif args.bench_command == "chip":
        tech = registry.technology(args.tech)
        if args.nominal:
            cfg = nominal_config(registry.constants, spiking=tech.network_kind == "SNN")
        else:
            doc = json.loads(args.config.read_text())
            cfg = ChipConfig(**doc)
        bench = report.bench_chip_nominal(tech, registry, cfg)
        print(f"total_synapses: {bench.total_synapses}")
        print(f"area_nm2: {bench.area:.{p}g}")
        print(f"firing_rate_per_s: {bench.firing_rate * units.PS_PER_S:.{p}g}")
        print(f"time_step_ps: {bench.time_step:.{p}g}")
        print(f"energy_per_event_aJ: {bench.energy_per_event:.{p}g}")
        print(f"syn_throughput_per_s: {bench.syn_throughput_per_s:.{p}g}")
        print(f"power_W: {bench.power_w:.{p}g}")
        print(f"energy_per_step_aJ: {bench.energy_per_step:.{p}g}")
    else:  # workload
        tech = registry.technology(args.tech)
        schedule = {"parallel": "parallel", "tmux": "time_multiplexed", None: None}[args.schedule]
        bench = report.bench_workload(args.name, tech, registry, schedule=schedule)
        print(f"area_nm2: {bench.area:.{p}g}")
        print(f"delay_ps: {bench.delay:.{p}g}")
        print(f"energy_aJ: {bench.energy:.{p}g}")
        print(f"power_W: {bench.power_w:.{p}g}")
        print(f"inference_throughput_per_nm2ps: {bench.inference_throughput:.{p}g}")
        print(f"inferences_per_s: {bench.inferences_per_s:.{p}g}")
        print(f"schedule: {bench.schedule}")


def _cmd_topsdown(args, registry: Registry) -> None:
    p = args.precision
    chip = registry.chip(args.chip)
    if args.backfill:
        result = backfill_derived(chip)
        for field_name, identity in sorted(result.filled.items()):
            print(f"filled {field_name} = {getattr(result.chip, field_name):.{p}g} from {identity}")
        for identity, residual in sorted(result.residuals.items()):
            print(f"residual of {identity}: {residual * 100:.2f}%")
        chip = result.chip
    element = topsdown_element(chip, registry)
    print(f"synapse_area_nm2: {element.synapse_area:.{p}g}")
    print(f"neuron_area_nm2: {element.neuron_area:.{p}g}")
    print(f"synapse_delay_ps: {element.synapse_delay:.{p}g}")
    print(f"synapse_energy_aJ: {element.synapse_energy:.{p}g}")
    print(f"neuron_energy_aJ: {element.neuron_energy:.{p}g}")
    if args.workload:
        bench = run_workload_on_chip(chip, registry.workload(args.workload), registry)
        print(f"workload {args.workload}:")
        print(f"  area_nm2: {bench.area:.{p}g}")
        print(f"  delay_ps: {bench.delay:.{p}g}")
        print(f"  energy_aJ: {bench.energy:.{p}g}")
        print(f"  inferences_per_s: {bench.inferences_per_s:.{p}g}")


def _cmd_export(args, registry: Registry) -> None:
    p = args.precision
    if args.what == "matrix":
        fmt = "json" if args.out.suffix == ".json" else "csv"
        text = report.emit_matrix(registry, args.scope, workload=args.workload, precision=p, fmt=fmt)
    else:
        points = report.scatter_dataset(registry, args.scatter_kind, workload=args.workload)
        if args.what == "pareto":
            points = report.pareto_front(points)
        text = report.emit_scatter(points, precision=p)
    args.out.write_text(text, encoding="utf-8")
    print(f"wrote {args.out}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        registry = _load(args)
        if args.command == "devices":
            _cmd_devices(args, registry)
        elif args.command == "bench":
            _cmd_bench(args, registry)
        elif args.command == "topsdown":
            _cmd_topsdown(args, registry)
        elif args.command == "export":
            _cmd_export(args, registry)
    except (DatasetError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
