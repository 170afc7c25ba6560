"""Emitters: the full element matrix, chip comparison tables, energy-delay
scatter datasets, Pareto fronts, and the per-technology evaluation pipeline
that feeds them. All tabular output is deterministic: fixed row order
(technology dataset order), fixed precision, '.' decimal separator, LF
line endings."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Optional

from .chip import ChipBench, ChipConfig, chip_bench, chip_geometry, nominal_config
from .elements import build_raw_element, element_drive_current, element_r_eff
from .interconnect import ElementBench, assemble_row
from .networks import network_transform
from .registry import Registry, Technology, UnknownNameError
from .topsdown import IncomputableError, run_workload_on_chip, topsdown_element
from .workload import WorkloadBench, run_workload

MATRIX_HEADER = (
    "technology",
    "area_syn_um2", "area_lic_um2", "area_neu_um2", "area_gic_um2",
    "delay_syn_ps", "delay_lic_ps", "delay_neu_ps", "delay_gic_ps",
    "energy_syn_aJ", "energy_lic_aJ", "energy_neu_aJ", "energy_gic_aJ",
)

NM2_PER_UM2 = 1e6


@dataclass(frozen=True)
class ScatterPoint:
    label: str
    x: float
    y: float
    series: str

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and self.x > 0 and self.y > 0):
            raise ValueError(f"scatter point {self.label}: coordinates must be finite and positive")


def bench_technology(tech: Technology, registry: Registry, cfg: Optional[ChipConfig] = None) -> ElementBench:
    """Raw element -> network transform -> interconnect merge for one technology."""
    constants = registry.constants
    raw = build_raw_element(tech, registry)
    net = network_transform(raw, tech, registry)
    if cfg is None:
        cfg = nominal_config(constants, spiking=tech.network_kind == "SNN")
    geom = chip_geometry(cfg, net.neuron.area, net.synapse.area, constants)
    return assemble_row(
        net,
        geom,
        constants,
        r_eff=element_r_eff(tech, registry),
        i_neu=element_drive_current(tech, registry),
        ic_voltage=tech.ic_voltage,
        technology=tech,
    )


def bench_chip_nominal(tech: Technology, registry: Registry, cfg: Optional[ChipConfig] = None) -> ChipBench:
    constants = registry.constants
    if cfg is None:
        cfg = nominal_config(constants, spiking=tech.network_kind == "SNN")
    return chip_bench(cfg, bench_technology(tech, registry, cfg), constants)


def bench_workload(
    workload_name: str,
    tech: Technology,
    registry: Registry,
    schedule: Optional[str] = None,
) -> WorkloadBench:
    """Run a named workload on one technology with its natural policies:
    MAC combos go sequential and time-multiplexed, spiking networks get
    unlimited fan-in, everything else cascades in parallel."""
    spec = registry.workload(workload_name)
    elem = bench_technology(tech, registry)
    if tech.mac:
        mode, default_schedule, fan_in = "sequential", "time_multiplexed", None
    else:
        mode, default_schedule = "cascaded", "parallel"
        fan_in = None if tech.network_kind == "SNN" else registry.fan_in_policy.limit(tech.fan_in_class)
    return run_workload(
        spec,
        elem,
        registry.constants,
        network_kind=tech.network_kind,
        fan_in=fan_in,
        mode=mode,
        schedule=schedule or default_schedule,
    )


def element_matrix(registry: Registry, network_kind: Optional[str] = None) -> list[ElementBench]:
    return [bench_technology(t, registry) for t in registry.enumerate_technologies(network_kind)]


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}g}"


def _csv(rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def emit_matrix(
    registry: Registry,
    scope: str = "elements",
    *,
    workload: Optional[str] = None,
    network_kind: Optional[str] = None,
    labels: Optional[list[str]] = None,
    precision: int = 6,
    fmt: str = "csv",
) -> str:
    """Tabular document for one scope: 'elements', 'workload' (named), or 'chips'.

    `labels`, when given, keeps only the listed technologies (an empty list
    yields a header-only document).
    """

    def selected(kind):
        techs = registry.enumerate_technologies(kind)
        if labels is None:
            return techs
        return [t for t in techs if t.label in labels]

    if scope == "elements":
        header = MATRIX_HEADER
        rows = []
        for tech in selected(network_kind):
            bench = bench_technology(tech, registry)
            cols = list(bench.columns())
            for i in range(4):  # areas reported in um^2, matching the reference matrix
                cols[i] /= NM2_PER_UM2
            rows.append((bench.technology.label, *(_fmt(c, precision) for c in cols)))
    elif scope == "workload":
        if workload is None:
            raise UnknownNameError("workload scope requires a workload name")
        registry.workload(workload)  # raise early on unknown names
        header = ("technology", "area_nm2", "delay_ps", "energy_aJ", "power_W", "inferences_per_s", "schedule")
        rows = []
        for tech in selected(network_kind):
            b = bench_workload(workload, tech, registry)
            rows.append(
                (
                    tech.label,
                    _fmt(b.area, precision), _fmt(b.delay, precision), _fmt(b.energy, precision),
                    _fmt(b.power_w, precision), _fmt(b.inferences_per_s, precision), b.schedule,
                )
            )
    elif scope == "chips":
        header = (
            "chip", "kind", "synapse_area_nm2", "neuron_area_nm2",
            "synapse_delay_ps", "synapse_energy_aJ", "neuron_energy_aJ",
        )
        rows = []
        for name in sorted(registry.chips):
            chip = registry.chips[name]
            try:
                e = topsdown_element(chip, registry)
                rows.append(
                    (
                        name, chip.kind,
                        _fmt(e.synapse_area, precision), _fmt(e.neuron_area, precision),
                        _fmt(e.synapse_delay, precision), _fmt(e.synapse_energy, precision),
                        _fmt(e.neuron_energy, precision),
                    )
                )
            except IncomputableError:
                rows.append((name, chip.kind, "", "", "", "", ""))
    else:
        raise UnknownNameError(f"unknown matrix scope {scope!r}")

    if fmt == "csv":
        return _csv([header, *rows])
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=1, sort_keys=True) + "\n"
    raise UnknownNameError(f"unknown export format {fmt!r}")


def scatter_dataset(registry: Registry, what: str = "neuron", workload: Optional[str] = None) -> list[ScatterPoint]:
    """Plot-ready points.

    'synapse' / 'neuron': energy (aJ) vs delay (ps) per technology.
    'workload': energy vs delay of one inference per technology.
    'power': dissipated power density (W/nm^2) vs inference throughput
             per area (1/(nm^2 ps)) for one workload.
    """
    points = []
    if what in ("synapse", "neuron"):
        for bench in element_matrix(registry):
            triple = bench.synapse_total if what == "synapse" else bench.neuron_total
            points.append(
                ScatterPoint(
                    label=bench.technology.label,
                    x=triple.delay,
                    y=triple.energy,
                    series=bench.technology.network_kind,
                )
            )
    elif what in ("workload", "power"):
        if workload is None:
            raise UnknownNameError(f"{what} scatter requires a workload name")
        for tech in registry.enumerate_technologies():
            b = bench_workload(workload, tech, registry)
            if what == "workload":
                points.append(ScatterPoint(label=tech.label, x=b.delay, y=b.energy, series=tech.network_kind))
            else:
                points.append(
                    ScatterPoint(
                        label=tech.label,
                        x=b.power_w / b.area,
                        y=b.inference_throughput,
                        series=tech.network_kind,
                    )
                )
    else:
        raise UnknownNameError(f"unknown scatter kind {what!r}")
    return points


def pareto_front(points: list[ScatterPoint]) -> list[ScatterPoint]:
    """Non-dominated subset, minimizing both coordinates.

    A point survives iff no other point is <= in both coordinates and < in at
    least one. Output is sorted by (x, y, label), independent of input order.
    """
    survivors = []
    for p in points:
        dominated = any(
            q.x <= p.x and q.y <= p.y and (q.x < p.x or q.y < p.y) for q in points if q is not p
        )
        if not dominated:
            survivors.append(p)
    return sorted(survivors, key=lambda p: (p.x, p.y, p.label))


def emit_scatter(points: list[ScatterPoint], precision: int = 6) -> str:
    rows = [("label", "x", "y", "series")]
    rows += [(p.label, _fmt(p.x, precision), _fmt(p.y, precision), p.series) for p in points]
    return _csv(rows)


def geometric_mean_neuron_delay(registry: Registry, network_kind: str) -> float:
    """Geometric mean of the neuron delay column over one network kind."""
    delays = [b.neuron.delay for b in element_matrix(registry, network_kind)]
    return math.exp(sum(math.log(d) for d in delays) / len(delays))


def speech_comparison(registry: Registry) -> dict[str, dict[str, float]]:
    """Computed speech-recognition workload figures for the two chips with
    published measurements, alongside those measurements. Exploratory: the
    model is optimistic by construction and no tolerance applies."""
    published = {
        "Loihi": {"inferences_per_s": 89.8, "energy_per_inference_uJ": 770.0},
        "Myriad 2": {"inferences_per_s": 300.0, "energy_per_inference_uJ": 1500.0},
    }
    out = {}
    for name, measured in published.items():
        bench = run_workload_on_chip(registry.chip(name), registry.workload("speech_mlp"), registry)
        computed_rate = bench.inferences_per_s
        computed_energy_uj = bench.energy * 1e-12  # aJ -> uJ
        out[name] = {
            "computed_inferences_per_s": computed_rate,
            "published_inferences_per_s": measured["inferences_per_s"],
            "rate_ratio": computed_rate / measured["inferences_per_s"],
            "computed_energy_per_inference_uJ": computed_energy_uj,
            "published_energy_per_inference_uJ": measured["energy_per_inference_uJ"],
            "energy_ratio": computed_energy_uj / measured["energy_per_inference_uJ"],
        }
    return out
