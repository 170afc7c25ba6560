"""Transforms from raw element benchmarks to network-type-specific benchmarks.

Four signal classes: ANN (identity), CeNN (extra synapses and settling
steps), SNN (spike duration/spacing/count factors), ONN (area markup plus
oscillator synchronization timing). Synapses are shared across ANN, CeNN,
and SNN; areas are never changed by the SNN transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ade import AdeTriple
from .elements import RawElementBench, build_raw_element
from .registry import DeviceRecord, GlobalConstants, Registry, Technology


@dataclass(frozen=True)
class NetworkElementBench:
    synapse: AdeTriple
    neuron: AdeTriple
    network_kind: str
    coding: Optional[str] = None  # SNN only: rate | temporal
    oscillator_class: Optional[str] = None  # ONN only
    osc_frequency: Optional[float] = None  # 1/ps, ONN only
    osc_power: Optional[float] = None  # aJ/ps, ONN only

    def __post_init__(self):
        if self.network_kind == "SNN" and self.coding not in ("rate", "temporal"):
            raise ValueError("SNN bench requires coding 'rate' or 'temporal'")
        if self.network_kind == "ONN" and self.oscillator_class is None:
            raise ValueError("ONN bench requires an oscillator class")
        if self.network_kind not in ("SNN",) and self.coding is not None:
            raise ValueError(f"{self.network_kind} bench must not carry a coding")
        if self.network_kind != "ONN" and self.oscillator_class is not None:
            raise ValueError(f"{self.network_kind} bench must not carry oscillator fields")


def ann_transform(raw: RawElementBench) -> NetworkElementBench:
    """Identity: the element estimates are used directly."""
    return NetworkElementBench(synapse=raw.synapse, neuron=raw.neuron, network_kind="ANN")


def cnn_transform(raw: RawElementBench, constants: GlobalConstants) -> NetworkElementBench:
    """Cellular network: more synapses per cell and a longer settling time."""
    m_syn = constants.cnn_synapse_factor
    m_step = constants.cnn_settling_factor
    return NetworkElementBench(
        synapse=raw.synapse.scaled(area=m_syn, delay=m_step * m_syn, energy=m_step * m_syn),
        neuron=raw.neuron.scaled(delay=m_step, energy=m_step),
        network_kind="CNN",
    )


def snn_transform(raw: RawElementBench, constants: GlobalConstants, coding: str = "rate") -> NetworkElementBench:
    """Spiking network: spike duration and spacing stretch delays; the spike
    count to fire scales the neuron. Areas are unchanged."""
    if coding not in ("rate", "temporal"):
        raise ValueError(f"unknown SNN coding {coding!r}")
    n_spi = constants.spike_duration_factor
    n_spa = constants.spike_spacing_factor
    n_fire = constants.spikes_to_fire
    neuron_energy_factor = n_spi * n_fire if coding == "rate" else n_spi
    return NetworkElementBench(
        synapse=raw.synapse.scaled(delay=n_spi * n_spa, energy=n_spi),
        neuron=raw.neuron.scaled(delay=n_spi * n_spa * n_fire, energy=neuron_energy_factor),
        network_kind="SNN",
        coding=coding,
    )


def onn_transform(
    raw: RawElementBench,
    constants: GlobalConstants,
    osc_class: str,
    inv4_delay: Optional[float] = None,
    device_intrinsics: Optional[AdeTriple] = None,
) -> NetworkElementBench:
    """Oscillator network: oscillators are built from many simple gates (10x
    synapse, 30x neuron area) and operate at the synchronization time.

    Rates and powers by class:
      transistor_ring  f = 0.1 / inv4 delay,  P = 3 E_int / tau_int of the transistor
      spintronic       f = 6 / device delay,  P = 6 E_dev / tau_dev
      piezo            f = 1 / neuron delay,  P = 3 E_neu / tau_neu
    """
    if osc_class == "transistor_ring":
        if inv4_delay is None:
            raise ValueError("transistor ring oscillator requires the fan-out-4 inverter delay")
        if device_intrinsics is None:
            raise ValueError("transistor ring oscillator requires transistor device intrinsics for power")
        f_osc = 0.1 / inv4_delay  # 1/ps
        p_osc = 3.0 * device_intrinsics.energy / device_intrinsics.delay  # aJ/ps
    elif osc_class == "spintronic":
        if device_intrinsics is None:
            raise ValueError("spintronic oscillator requires device intrinsics")
        f_osc = 6.0 / device_intrinsics.delay
        p_osc = 6.0 * device_intrinsics.energy / device_intrinsics.delay
    elif osc_class == "piezo":
        f_osc = 1.0 / raw.neuron.delay
        p_osc = 3.0 * raw.neuron.energy / raw.neuron.delay
    else:
        raise ValueError(f"unknown oscillator class {osc_class!r}")

    sync_delay = constants.sync_periods / f_osc  # ps
    sync_energy = p_osc * sync_delay  # aJ
    return NetworkElementBench(
        synapse=AdeTriple(10.0 * raw.synapse.area, sync_delay, sync_energy),
        neuron=AdeTriple(30.0 * raw.neuron.area, sync_delay, sync_energy),
        network_kind="ONN",
        oscillator_class=osc_class,
        osc_frequency=f_osc,
        osc_power=p_osc,
    )


def network_transform(raw: RawElementBench, tech: Technology, registry: Registry) -> NetworkElementBench:
    """Apply the transform that matches the technology's network kind."""
    kind = tech.network_kind
    if kind == "ANN":
        return ann_transform(raw)
    if kind == "CNN":
        return cnn_transform(raw, registry.constants)
    if kind == "SNN":
        return snn_transform(raw, registry.constants, coding="rate")
    if kind == "ONN":
        inv4_delay = registry.primitives[tech.primitive_family].inv4.delay
        intrinsics = None
        device_name = tech.osc_device or (
            tech.synapse_device if tech.synapse_device in registry.devices else None
        )
        if device_name is not None:
            intrinsics = registry.device(device_name).intrinsic
        return onn_transform(
            raw,
            registry.constants,
            tech.osc_class,
            inv4_delay=inv4_delay,
            device_intrinsics=intrinsics,
        )
    raise ValueError(f"unknown network kind {kind!r}")


def network_element(tech: Technology, registry: Registry) -> NetworkElementBench:
    """Raw element plus network transform for one technology label."""
    return network_transform(build_raw_element(tech, registry), tech, registry)
