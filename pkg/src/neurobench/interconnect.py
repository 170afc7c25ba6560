"""Core-wide and chip-wide interconnect contributions.

The core interconnect delivers a synapse output across the core's synapse
block; its delay and energy attach to the synapse path. The chip-wide
interconnect delivers a neuron output anywhere on the chip; it attaches to
the neuron path. Interconnect lengths are the square roots of the relevant
block areas. The empirical routing-inefficiency factor is already folded
into the per-length capacitance constant and is never applied again here.

The interconnect "area" columns are a reporting convention (length times
wire pitch); no equation in the model defines them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import units
from .ade import AdeTriple
from .networks import NetworkElementBench
from .registry import GlobalConstants, Technology


@dataclass(frozen=True)
class ChipGeometry:
    """Block areas that set interconnect lengths, nm^2."""

    synapse_block_area: float
    chip_area: float


@dataclass(frozen=True)
class ElementBench:
    """Full 12-column benchmark row: element triples plus their interconnects."""

    synapse: AdeTriple
    core_ic: AdeTriple
    neuron: AdeTriple
    chip_ic: AdeTriple
    technology: Optional[Technology] = None

    @property
    def synapse_total(self) -> AdeTriple:
        return self.synapse + self.core_ic

    @property
    def neuron_total(self) -> AdeTriple:
        return self.neuron + self.chip_ic

    def columns(self) -> tuple[float, ...]:
        """Reference-matrix column order: areas, delays, energies; syn/lic/neu/gic each."""
        return (
            self.synapse.area, self.core_ic.area, self.neuron.area, self.chip_ic.area,
            self.synapse.delay, self.core_ic.delay, self.neuron.delay, self.chip_ic.delay,
            self.synapse.energy, self.core_ic.energy, self.neuron.energy, self.chip_ic.energy,
        )


def ic_energy(length: float, voltage: float, constants: GlobalConstants) -> float:
    """Energy to charge `length` nm of interconnect to `voltage`, aJ."""
    if length < 0:
        raise ValueError("interconnect length must be >= 0")
    return units.joules_to_aj(constants.ic_cap_per_length * length * units.M_PER_NM * voltage * voltage)


def ic_lengths(synapse_block_area: float, chip_area: float) -> tuple[float, float]:
    """Core and chip interconnect lengths (nm) from their block areas (nm^2)."""
    if synapse_block_area < 0 or chip_area < 0:
        raise ValueError("block areas must be >= 0")
    return math.sqrt(synapse_block_area), math.sqrt(chip_area)


def core_ic_delay(length: float, r_eff: float, constants: GlobalConstants) -> float:
    """RC-dominated delay of a core-wide wire of `length` nm, ps.

    Distributed-wire term plus synapse source resistance plus the lumped load,
    repeated per minimum-length segment. r_eff is zero for non-resistive
    synapse technologies.
    """
    if length < 0:
        raise ValueError("interconnect length must be >= 0")
    c_seg = constants.min_ic_capacitance
    r_seg = constants.min_ic_resistance
    per_segment = 0.38 * r_seg * c_seg + r_eff * c_seg + r_seg * constants.load_capacitance  # s
    return units.seconds_to_ps(per_segment) * (length / constants.min_ic_length)


def chip_ic_delay(length: float, i_neu: float, voltage: float, constants: GlobalConstants) -> float:
    """Charging time of a chip-wide wire driven at constant current, ps."""
    if i_neu <= 0:
        raise ValueError("chip interconnect needs a positive neuron drive current")
    if length < 0:
        raise ValueError("interconnect length must be >= 0")
    t = constants.ic_cap_per_length * length * units.M_PER_NM * voltage / i_neu  # s
    return units.seconds_to_ps(t)


def assemble_row(
    net: NetworkElementBench,
    chip_geom: ChipGeometry,
    constants: GlobalConstants,
    *,
    r_eff: float = 0.0,
    i_neu: float,
    ic_voltage: Optional[float] = None,
    technology: Optional[Technology] = None,
) -> ElementBench:
    """Attach core and chip interconnect triples to a network element bench.

    `ic_voltage` defaults to the supply voltage; spintronic technologies pass
    their reduced interconnect swing here.
    """
    voltage = constants.supply_voltage if ic_voltage is None else ic_voltage
    core_len, chip_len = ic_lengths(chip_geom.synapse_block_area, chip_geom.chip_area)
    core = AdeTriple(
        area=core_len * constants.wire_pitch,
        delay=core_ic_delay(core_len, r_eff, constants),
        energy=ic_energy(core_len, voltage, constants),
    )
    chip = AdeTriple(
        area=chip_len * constants.wire_pitch,
        delay=chip_ic_delay(chip_len, i_neu, voltage, constants),
        energy=ic_energy(chip_len, voltage, constants),
    )
    return ElementBench(synapse=net.synapse, core_ic=core, neuron=net.neuron, chip_ic=chip, technology=technology)
