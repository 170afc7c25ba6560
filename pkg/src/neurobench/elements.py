"""Raw (pre-network-transform) synapse and neuron benchmarks per technology family.

Six families: digital SRAM registers, digital MAC, analog transistor (OTA
cell), analog single-device (spintronic/ferroelectric switches), and
resistive-memory synapses in digital or analog read mode. The appropriate
reading circuit from `circuits` is attached to the neuron: sense amp for
SRAM, voltage sense amp for digital resistive, pulsed read for analog
resistive. Per-bit reading circuits contribute area and energy once per
stored bit; their delay is the word-parallel read latency and is added once
(the enable terms already scale with the bit count).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import units
from .ade import AdeTriple
from .circuits import analog_read, ota_cell, sense_amp, voltage_sense_amp
from .registry import (
    CircuitPrimitiveTable,
    DeviceRecord,
    GlobalConstants,
    Registry,
    Technology,
    ValidationError,
)


@dataclass(frozen=True)
class RawElementBench:
    synapse: AdeTriple
    neuron: AdeTriple
    family: str
    technology: Optional[Technology] = None


def _digital_neuron(constants: GlobalConstants, p: CircuitPrimitiveTable) -> AdeTriple:
    """Accumulate-and-threshold neuron from registers, logic, and a bit-serial adder."""
    n_b = constants.synapse_bits
    return AdeTriple(
        area=n_b * (2 * p.reg.area + p.inv.area + p.nan.area + p.add1.area + p.se.area),
        delay=2 * p.reg.delay + 3 * p.se.delay + p.nan.delay + p.inv.delay + n_b * p.add1.delay,
        energy=n_b * (2 * p.reg.energy + 3 * p.se.energy + p.nan.energy + p.inv.energy + p.add1.energy),
    )


def digital_sram_element(constants: GlobalConstants, primitives: CircuitPrimitiveTable) -> RawElementBench:
    """Synapse of n_b register bits; digital neuron read through per-bit sense amps."""
    n_b = constants.synapse_bits
    if n_b < 1:
        raise ValueError("digital SRAM element needs at least one synapse bit")
    p = primitives
    synapse = AdeTriple(
        area=n_b * p.reg.area,
        delay=3 * p.reg.delay + 4 * p.se.delay + p.nan.delay + p.inv.delay + n_b * p.add1.delay,
        energy=n_b * (3 * p.reg.energy + 4 * p.se.energy + p.nan.energy + p.inv.energy + p.add1.energy),
    )
    sa = sense_amp(constants, primitives)
    neuron = _digital_neuron(constants, p) + AdeTriple(n_b * sa.area, sa.delay, n_b * sa.energy)
    return RawElementBench(synapse=synapse, neuron=neuron, family="digital_sram")


def digital_mac_element(constants: GlobalConstants, primitives: CircuitPrimitiveTable) -> RawElementBench:
    """Multiplier-and-adder synapse; the neuron sums partials into a small RAM.

    The adder energy carries a carry-save credit of 1/2 (applied to the adder
    term only, not the state element).
    """
    n_b = constants.synapse_bits
    p = primitives
    synapse = AdeTriple(
        area=(n_b + 1) * p.add.area + p.se.area,
        delay=p.add.delay + p.se.delay,
        energy=(n_b + 1) * p.add.energy / 2.0 + p.se.energy,
    )
    neuron = AdeTriple(
        area=p.add.area + 2 * p.se.area + n_b * p.ram.area,
        delay=p.add.delay + 2 * p.se.delay + p.ram.delay,
        energy=p.add.energy + 2 * p.se.energy + n_b * p.ram.energy,
    )
    return RawElementBench(synapse=synapse, neuron=neuron, family="digital_mac")


def analog_transistor_element(
    constants: GlobalConstants,
    primitives: CircuitPrimitiveTable,
    transistor_family: str = "cmos",
) -> RawElementBench:
    """Two-OTA synapse and opamp neuron; standard-cell area approximated as
    fan-out-4 inverters."""
    transistor = constants.transistors.get(transistor_family)
    if transistor is None:
        raise ValidationError(f"no transistor parameters for family {transistor_family!r}")
    cell = ota_cell(constants, transistor)
    w = constants.ota_widths
    width_ratio = (w.input + w.pullup + w.output) / constants.digital_transistor_width
    settle = 8.4 * units.rc_to_ps(cell.effective_resistance, cell.cell_cap)  # ps
    v_cc = constants.supply_voltage
    p_syn = units.watts_to_aj_per_ps(v_cc * cell.ota_current)  # aJ/ps
    p_neu = units.watts_to_aj_per_ps(v_cc * (cell.opamp_current + cell.ota_current))
    synapse = AdeTriple(area=2.0 * primitives.inv4.area * width_ratio, delay=settle, energy=p_syn * settle)
    neuron = AdeTriple(area=3.0 * primitives.inv4.area * width_ratio, delay=settle, energy=p_neu * settle)
    return RawElementBench(synapse=synapse, neuron=neuron, family="analog_transistor")


def analog_single_device_element(device: DeviceRecord, constants: GlobalConstants) -> RawElementBench:
    """Synapse and neuron each built from one switching device, sized up by the
    number of analog levels."""
    n_l = constants.synapse_levels
    synapse = AdeTriple(area=n_l * device.area_int, delay=device.delay_int, energy=device.energy_int)
    neuron = AdeTriple(
        area=n_l * device.area_int,
        delay=n_l * device.delay_int / 4.0,
        energy=n_l * device.energy_int,
    )
    return RawElementBench(synapse=synapse, neuron=neuron, family="analog_single_device")


def synapse_effective_resistance(device: DeviceRecord, constants: GlobalConstants) -> float:
    """Upper-bound resistance of a multi-level resistive cell, Ohm."""
    if device.r_on is None:
        raise ValidationError(f"device {device.name} has no on/off resistances")
    return device.r_on * math.sqrt(constants.synapse_levels)


def resistive_synapse(
    device: DeviceRecord,
    constants: GlobalConstants,
    mode: str,
    primitives: CircuitPrimitiveTable,
) -> RawElementBench:
    """Resistive-memory synapse; `mode` picks the read path and companion neuron.

    digital: digital-CMOS neuron read through the voltage sense amp.
    analog:  analog-CMOS (OTA) neuron read through the pulsed read circuit.
    """
    if mode not in ("digital", "analog"):
        raise ValueError(f"resistive synapse mode must be 'digital' or 'analog', got {mode!r}")
    if device.r_on is None or device.r_off is None:
        raise ValidationError(f"device {device.name} has no on/off resistances")
    v_cc = constants.supply_voltage
    i_on = v_cc / device.r_on  # A
    r_eff = synapse_effective_resistance(device, constants)
    settle = 2.3 * units.rc_to_ps(r_eff, constants.min_ic_capacitance)  # ps
    synapse = AdeTriple(
        area=device.area_int,
        delay=settle,
        energy=units.watts_to_aj_per_ps(i_on * v_cc) * settle,
    )
    n_b = constants.synapse_bits
    if mode == "digital":
        vsa = voltage_sense_amp(
            constants, primitives, device.r_on, device.r_off, constants.nominal_synapses_per_neuron
        )
        neuron = _digital_neuron(constants, primitives) + AdeTriple(n_b * vsa.area, vsa.delay, n_b * vsa.energy)
        family = "resistive_digital"
    else:
        base = analog_transistor_element(constants, primitives, "cmos")
        reader = analog_read(constants, primitives)
        neuron = base.neuron + AdeTriple(reader.area, reader.delay, reader.energy)
        family = "resistive_analog"
    return RawElementBench(synapse=synapse, neuron=neuron, family=family)


_BUILDERS = {
    "digital_sram": lambda tech, reg: digital_sram_element(
        reg.constants, reg.primitives[tech.primitive_family]
    ),
    "digital_mac": lambda tech, reg: digital_mac_element(
        reg.constants, reg.primitives[tech.primitive_family]
    ),
    "analog_transistor": lambda tech, reg: analog_transistor_element(
        reg.constants, reg.primitives[tech.primitive_family], tech.transistor_family
    ),
    "analog_single_device": lambda tech, reg: analog_single_device_element(
        reg.device(tech.synapse_device), reg.constants
    ),
    "resistive_digital": lambda tech, reg: resistive_synapse(
        reg.device(tech.synapse_device), reg.constants, "digital", reg.primitives["digital_cmos"]
    ),
    "resistive_analog": lambda tech, reg: resistive_synapse(
        reg.device(tech.synapse_device), reg.constants, "analog", reg.primitives["digital_cmos"]
    ),
}


def build_raw_element(tech: Technology, registry: Registry) -> RawElementBench:
    """Family dispatch: every technology label maps to exactly one builder."""
    try:
        builder = _BUILDERS[tech.family]
    except KeyError:
        raise ValidationError(f"technology {tech.label}: unknown element family {tech.family!r}") from None
    bench = builder(tech, registry)
    return RawElementBench(synapse=bench.synapse, neuron=bench.neuron, family=bench.family, technology=tech)


def element_r_eff(tech: Technology, registry: Registry) -> float:
    """Synapse resistance seen by the core interconnect; zero for non-resistive families."""
    if tech.family in ("resistive_digital", "resistive_analog"):
        return synapse_effective_resistance(registry.device(tech.synapse_device), registry.constants)
    return 0.0


def element_drive_current(tech: Technology, registry: Registry) -> float:
    """Neuron output current driving the chip-wide interconnect, A.

    Per-technology override wins; otherwise resistive synapse technologies
    drive with the cell on-current, everything else with one minimum digital
    transistor.
    """
    if tech.neuron_drive_current is not None:
        return tech.neuron_drive_current
    c = registry.constants
    if c.neuron_drive_current is not None:
        return c.neuron_drive_current
    if tech.family in ("resistive_digital", "resistive_analog"):
        device = registry.device(tech.synapse_device)
        return c.supply_voltage / device.r_on
    return c.on_current_per_width * c.digital_transistor_width * units.M_PER_NM
