"""Tops-down benchmarking of fabricated chips.

Published totals (area, power, throughput, event energy, firing rate) are
decomposed into per-synapse and per-neuron figures. Neuromorphic chips give
5% of their area to neurons and the rest to synapses; digital accelerators
spend only 10% of their area on compute, split in the same proportion, and
run clock-driven and sequential. Derived (asterisked) dataset values are
back-filled from the two consistency identities

    throughput = fire_rate * activity * total_synapses
    power      = throughput * event_energy

and quoted values are never overwritten.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import units
from .ade import AdeTriple
from .interconnect import ElementBench
from .registry import ChipRecord, Registry, UnknownNameError
from .workload import WorkloadBench, WorkloadSpec, run_workload


class IncomputableError(UnknownNameError):
    """A tops-down figure needs a field the record does not carry."""


@dataclass(frozen=True)
class TopsDownElement:
    neuron_area: float  # nm^2
    synapse_area: float  # nm^2
    synapse_delay: float  # ps
    synapse_energy: float  # aJ
    neuron_energy: float  # aJ
    source: ChipRecord

    def as_element_bench(self) -> ElementBench:
        """Element bench with empty interconnect triples; published totals
        already include all wiring. The neuron is booked at one event time."""
        zero = AdeTriple(0.0, 0.0, 0.0)
        return ElementBench(
            synapse=AdeTriple(self.synapse_area, self.synapse_delay, self.synapse_energy),
            core_ic=zero,
            neuron=AdeTriple(self.neuron_area, self.synapse_delay, self.neuron_energy),
            chip_ic=zero,
        )


def _require(chip: ChipRecord, field_name: str) -> float:
    value = getattr(chip, field_name)
    if value is None:
        raise IncomputableError(f"chip {chip.name}: {field_name} required but absent")
    return value


def _event_energy(chip: ChipRecord) -> float:
    """Energy per synaptic event, aJ; quoted value or power/throughput."""
    if chip.energy_per_event is not None:
        return chip.energy_per_event
    if chip.power is not None and chip.syn_throughput is not None:
        return units.joules_to_aj(chip.power / chip.syn_throughput)
    raise IncomputableError(f"chip {chip.name}: energy_per_event required but absent (and not derivable)")


def topsdown_neuromorphic(chip: ChipRecord, neuron_area_fraction: float = 0.05) -> TopsDownElement:
    if chip.kind != "neuromorphic":
        raise ValueError(f"chip {chip.name} is not neuromorphic")
    area = _require(chip, "area")
    fire_rate = _require(chip, "fire_rate")
    activity = _require(chip, "activity")
    per_neuron = chip.cores * chip.neurons_per_core
    e_syn = _event_energy(chip)
    # spiking rate inverted: one synaptic event every 1/(f * r_a * s_neu)
    tau_syn = units.seconds_to_ps(1.0 / (fire_rate * activity * chip.synapses_per_neuron))
    return TopsDownElement(
        neuron_area=neuron_area_fraction * area / per_neuron,
        synapse_area=(1.0 - neuron_area_fraction) * area / (per_neuron * chip.synapses_per_neuron),
        synapse_delay=tau_syn,
        synapse_energy=e_syn,
        neuron_energy=e_syn * activity * chip.synapses_per_neuron,
        source=chip,
    )


def topsdown_accelerator(
    chip: ChipRecord,
    neuron_area_fraction: float = 0.05,
    compute_fraction: float = 0.10,
) -> TopsDownElement:
    if chip.kind != "accelerator":
        raise ValueError(f"chip {chip.name} is not an accelerator")
    clock = _require(chip, "clock")
    e_syn = _event_energy(chip)
    area = _require(chip, "area")
    budget = compute_fraction * area
    per_neuron = chip.cores * chip.neurons_per_core
    tau_syn = units.seconds_to_ps(1.0 / clock)  # one MAC per clock
    activity = chip.activity if chip.activity is not None else 1.0
    return TopsDownElement(
        neuron_area=neuron_area_fraction * budget / per_neuron,
        synapse_area=(1.0 - neuron_area_fraction) * budget / (per_neuron * chip.synapses_per_neuron),
        synapse_delay=tau_syn,
        synapse_energy=e_syn,
        neuron_energy=e_syn * activity * chip.synapses_per_neuron,
        source=chip,
    )


def topsdown_element(chip: ChipRecord, registry: Registry) -> TopsDownElement:
    p = registry.topsdown_params
    if chip.kind == "neuromorphic":
        return topsdown_neuromorphic(chip, p["neuron_area_fraction"])
    return topsdown_accelerator(chip, p["neuron_area_fraction"], p["accelerator_compute_fraction"])


# -- consistency back-fill ---------------------------------------------------

THROUGHPUT_IDENTITY = "throughput = fire_rate * activity * total_synapses"
POWER_IDENTITY = "power = throughput * event_energy"


@dataclass(frozen=True)
class BackfillResult:
    chip: ChipRecord
    filled: dict[str, str]  # field -> identity that produced it
    residuals: dict[str, float]  # identity -> relative residual, fully-quoted identities only


def _solve_throughput(chip: ChipRecord, unknown: str) -> float:
    s_ch = chip.total_synapses
    if unknown == "syn_throughput":
        return chip.fire_rate * chip.activity * s_ch
    if unknown == "fire_rate":
        return chip.syn_throughput / (chip.activity * s_ch)
    if unknown == "activity":
        return chip.syn_throughput / (chip.fire_rate * s_ch)
    raise AssertionError(unknown)


def _solve_power(chip: ChipRecord, unknown: str) -> float:
    if unknown == "power":
        return chip.syn_throughput * chip.energy_per_event * units.J_PER_AJ
    if unknown == "energy_per_event":
        return units.joules_to_aj(chip.power / chip.syn_throughput)
    if unknown == "syn_throughput":
        return chip.power / (chip.energy_per_event * units.J_PER_AJ)
    raise AssertionError(unknown)


def backfill_derived(chip: ChipRecord) -> BackfillResult:
    """Re-derive every field flagged as derived from the consistency identities.

    Quoted fields are never touched. A flagged or absent field that no
    identity can reach with a single unknown raises; nothing is guessed.
    """
    identities = [
        (THROUGHPUT_IDENTITY, ("syn_throughput", "fire_rate", "activity"), _solve_throughput),
        (POWER_IDENTITY, ("power", "syn_throughput", "energy_per_event"), _solve_power),
    ]
    if chip.kind == "accelerator":
        identities = identities[1:]  # clock-driven parts have no firing-rate identity

    flagged = set(chip.derived_fields)
    unknown_fields = {
        f
        for name, fields, _ in identities
        for f in fields
        if getattr(chip, f) is None or f in flagged
    }
    current = chip
    filled: dict[str, str] = {}
    residuals: dict[str, float] = {}
    progress = True
    while progress:
        progress = False
        for name, fields, solve in identities:
            unknowns = [f for f in fields if f in unknown_fields]
            if len(unknowns) == 1:
                f = unknowns[0]
                current = replace(current, **{f: solve(current, f)})
                filled[f] = name
                unknown_fields.discard(f)
                progress = True
    if unknown_fields:
        raise IncomputableError(
            f"chip {chip.name}: under-determined; cannot derive {sorted(unknown_fields)} "
            "from the consistency identities"
        )
    for name, fields, solve in identities:
        if any(f in filled for f in fields):
            continue  # identity was consumed by a solve; residual is zero by construction
        lhs = getattr(current, fields[0])
        rhs = _solve_throughput(current, fields[0]) if name == THROUGHPUT_IDENTITY else _solve_power(current, fields[0])
        residuals[name] = abs(lhs - rhs) / rhs if rhs else 0.0
    return BackfillResult(chip=current, filled=filled, residuals=residuals)


def run_workload_on_chip(chip: ChipRecord, spec: WorkloadSpec, registry: Registry) -> WorkloadBench:
    """Evaluate a workload with the chip's tops-down element figures.

    Accelerators run sequential and time-multiplexed; neuromorphic chips run
    with spiking semantics (unlimited fan-in, activity decaying per stage).
    """
    elem = topsdown_element(chip, registry).as_element_bench()
    if chip.kind == "accelerator":
        # sequential: one neuron per output absorbs inputs one at a time
        return run_workload(
            spec, elem, registry.constants,
            network_kind="ANN", fan_in=None, mode="sequential", schedule="time_multiplexed",
        )
    return run_workload(
        spec, elem, registry.constants,
        network_kind="SNN", fan_in=None, mode="cascaded", schedule="parallel",
    )
