"""Whole-chip aggregation: synapse counts, overhead-corrected area, firing
rates, time step, per-event energy, synaptic throughput, power, and energy
per step, for a configurable (by default nominal) chip."""

from __future__ import annotations

from dataclasses import dataclass

from . import units
from .interconnect import ChipGeometry, ElementBench
from .registry import GlobalConstants


@dataclass(frozen=True)
class ChipConfig:
    cores: int
    neurons_per_core: int
    synapses_per_neuron: int
    activity: float = 1.0
    spiking: bool = False

    def __post_init__(self):
        if min(self.cores, self.neurons_per_core, self.synapses_per_neuron) < 1:
            raise ValueError("chip config counts must be >= 1")
        if not (0.0 < self.activity <= 1.0):
            raise ValueError(f"activity must be in (0, 1], got {self.activity}")

    @property
    def total_synapses(self) -> int:
        return self.cores * self.neurons_per_core * self.synapses_per_neuron


@dataclass(frozen=True)
class ChipBench:
    total_synapses: int
    area: float  # nm^2
    firing_rate: float  # 1/ps
    time_step: float  # ps
    energy_per_event: float  # aJ, synapse plus its share of the neuron
    syn_throughput: float  # events/ps
    power: float  # aJ/ps
    energy_per_step: float  # aJ

    @property
    def power_w(self) -> float:
        return self.power * units.W_PER_AJ_PER_PS

    @property
    def syn_throughput_per_s(self) -> float:
        return self.syn_throughput * units.PS_PER_S


def nominal_config(constants: GlobalConstants, *, activity: float = 1.0, spiking: bool = False) -> ChipConfig:
    return ChipConfig(
        cores=constants.nominal_cores,
        neurons_per_core=constants.nominal_neurons_per_core,
        synapses_per_neuron=constants.nominal_synapses_per_neuron,
        activity=activity,
        spiking=spiking,
    )


def chip_area(cfg: ChipConfig, a_neu: float, a_syn: float, constants: GlobalConstants) -> float:
    """Layout-overhead-corrected chip area, nm^2."""
    per_neuron = constants.neuron_overhead * a_neu + cfg.synapses_per_neuron * constants.synapse_overhead * a_syn
    return constants.chip_overhead * cfg.cores * (constants.core_overhead * cfg.neurons_per_core * per_neuron)


def chip_geometry(cfg: ChipConfig, a_neu: float, a_syn: float, constants: GlobalConstants) -> ChipGeometry:
    """Block areas that set the interconnect lengths: the core's synapse block
    and the whole chip."""
    return ChipGeometry(
        synapse_block_area=a_syn * cfg.neurons_per_core * cfg.synapses_per_neuron,
        chip_area=chip_area(cfg, a_neu, a_syn, constants),
    )


def firing_rate(cfg: ChipConfig, elem: ElementBench) -> float:
    """Neuron firing rate, 1/ps. Spiking chips fire once per r_a*s_neu
    synaptic events; non-spiking ones once per synapse delay."""
    tau_syn = elem.synapse_total.delay
    if tau_syn <= 0:
        raise ValueError("firing rate undefined for zero synapse delay")
    if cfg.spiking:
        return 1.0 / (cfg.activity * cfg.synapses_per_neuron * tau_syn)
    return 1.0 / tau_syn


def chip_bench(cfg: ChipConfig, elem: ElementBench, constants: GlobalConstants) -> ChipBench:
    """Chip-level figures from one element bench (interconnect included)."""
    syn = elem.synapse_total
    neu = elem.neuron_total
    f_fire = firing_rate(cfg, elem)
    tau_step = 1.0 / f_fire + neu.delay
    e_event = syn.energy + neu.energy / (cfg.activity * cfg.synapses_per_neuron)
    throughput = f_fire * cfg.activity * cfg.total_synapses
    power = throughput * e_event
    return ChipBench(
        total_synapses=cfg.total_synapses,
        area=chip_area(cfg, elem.neuron.area, elem.synapse.area, constants),
        firing_rate=f_fire,
        time_step=tau_step,
        energy_per_event=e_event,
        syn_throughput=throughput,
        power=power,
        energy_per_step=power * tau_step,
    )
