"""Maps inference workloads onto neural cores.

A workload is a list of fully-connected or convolution layers. Each layer
becomes a stage on one core (replicated per feature map): stage parameters
fix the core's neuron/synapse counts, limited neuron fan-in forces a
cascade of intermediate neurons (or sequential operation for fan-in 1),
core area is the larger of the circuit estimate and the wiring limit, and
stages aggregate either in parallel or time-multiplexed onto a single core.

Only type-checking imports reference other modules; the registry imports
the layer/workload types from here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from . import units

if TYPE_CHECKING:  # avoid runtime cycles; duck-typed at runtime
    from .interconnect import ElementBench
    from .registry import GlobalConstants


@dataclass(frozen=True)
class LayerSpec:
    """One weight layer; `kind` selects which fields apply."""

    kind: str  # fully_connected | convolution
    inputs: int = 0
    outputs: int = 0
    image_w: int = 0
    image_h: int = 0
    in_channels: int = 1
    kernel: int = 0
    feature_maps: int = 1
    stride: int = 1
    padding: str = "valid"


@dataclass(frozen=True)
class WorkloadSpec:
    name: str
    layers: tuple[LayerSpec, ...]
    note: str = ""


@dataclass(frozen=True)
class StageParams:
    n_in: int
    n_out: int
    s_neu: int  # synapses per output neuron
    f_st: int  # feature maps = core copies
    r_a: float

    def __post_init__(self):
        if min(self.n_in, self.n_out, self.s_neu, self.f_st) < 1:
            raise ValueError("stage counts must be >= 1")
        if not (0.0 < self.r_a <= 1.0):
            raise ValueError(f"activity ratio must be in (0, 1], got {self.r_a}")


@dataclass(frozen=True)
class StageBench:
    area: float  # nm^2
    delay: float  # ps
    energy: float  # aJ
    f_st: int


@dataclass(frozen=True)
class WorkloadBench:
    area: float  # nm^2
    delay: float  # ps
    energy: float  # aJ
    schedule: str  # parallel | time_multiplexed

    @property
    def power(self) -> float:
        """aJ/ps."""
        return self.energy / self.delay

    @property
    def power_w(self) -> float:
        return self.power * units.W_PER_AJ_PER_PS

    @property
    def inference_throughput(self) -> float:
        """Inferences per unit area-time, 1/(nm^2 ps)."""
        return 1.0 / (self.area * self.delay)

    @property
    def inferences_per_s(self) -> float:
        return units.PS_PER_S / self.delay


def stage_params(layer: LayerSpec, stage_index: int, network_kind: str) -> StageParams:
    """Core-level counts for one layer.

    Spiking activity decays as 1/stage down the network; everything else runs
    at full activity. Convolutions count every contributing input-map pixel
    as an input neuron.
    """
    if stage_index < 1:
        raise ValueError("stage_index is 1-based")
    r_a = 1.0 / stage_index if network_kind == "SNN" else 1.0
    if layer.kind == "fully_connected":
        return StageParams(n_in=layer.inputs, n_out=layer.outputs, s_neu=layer.inputs, f_st=1, r_a=r_a)
    if layer.kind == "convolution":
        if layer.padding == "valid":
            if layer.kernel > layer.image_w or layer.kernel > layer.image_h:
                raise ValueError(
                    f"kernel {layer.kernel} exceeds image {layer.image_w}x{layer.image_h} under valid padding"
                )
            out_w = (layer.image_w - layer.kernel) // layer.stride + 1
            out_h = (layer.image_h - layer.kernel) // layer.stride + 1
        else:  # same
            out_w = math.ceil(layer.image_w / layer.stride)
            out_h = math.ceil(layer.image_h / layer.stride)
        return StageParams(
            n_in=layer.image_w * layer.image_h * layer.in_channels,
            n_out=out_w * out_h,
            s_neu=layer.kernel * layer.kernel * layer.in_channels,
            f_st=layer.feature_maps,
            r_a=r_a,
        )
    raise ValueError(f"unknown layer kind {layer.kind!r}")


def cascade(fan_in: Optional[int], s_neu: int) -> tuple[int, int]:
    """Levels and total neurons of the reduction tree combining s_neu inputs.

    fan_in None means unlimited (one neuron absorbs everything). fan_in 1 is
    the sequential mode, handled elsewhere, and rejected here. Integer
    arithmetic throughout; no float logs.
    """
    if s_neu < 1:
        raise ValueError("s_neu must be >= 1")
    if fan_in is None:
        return 1, 1
    if fan_in < 2:
        raise ValueError("fan-in below 2 cannot cascade; use sequential mode")
    levels = 1
    capacity = fan_in
    while capacity < s_neu:
        capacity *= fan_in
        levels += 1
    neurons = (fan_in**levels - 1) // (fan_in - 1)
    return levels, neurons


def wire_limited_area(stage: StageParams, constants: "GlobalConstants") -> float:
    """Area floor set by routing n_in x n_out wires at the metal pitch, nm^2."""
    p = constants.wire_pitch
    return stage.n_in * stage.n_out * p * p


def core_area(
    stage: StageParams,
    topology: str,
    elem: "ElementBench",
    fan_in: Optional[int],
    constants: "GlobalConstants",
) -> float:
    """Overhead-corrected core area for one stage, floored by the wiring limit.

    Cross-connect places a synapse at every input/output crossing; the
    convolution topology only places the active ones.
    """
    if topology not in ("cross_connect", "convolution"):
        raise ValueError(f"unknown topology {topology!r}")
    _, n_cas = cascade(fan_in, stage.s_neu)
    n_cor = n_cas * stage.n_out + stage.n_in
    synapse_sites = stage.n_out * (stage.n_in if topology == "cross_connect" else stage.s_neu)
    a_cor = constants.core_overhead * (
        constants.neuron_overhead * elem.neuron.area * n_cor
        + constants.synapse_overhead * elem.synapse.area * synapse_sites
    )
    return max(a_cor, wire_limited_area(stage, constants))


def stage_time_energy(
    stage: StageParams,
    elem: "ElementBench",
    fan_in: Optional[int],
    mode: str,
) -> tuple[float, float]:
    """Delay (ps) and energy (aJ) of one stage.

    Cascaded mode pays one synapse delay per cascade level; sequential mode
    pays one per synapse. Synapse figures include the core interconnect,
    neuron figures the chip interconnect.
    """
    syn = elem.synapse_total
    neu = elem.neuron_total
    if mode == "cascaded":
        levels, _ = cascade(fan_in, stage.s_neu)
        delay = levels * syn.delay + neu.delay
    elif mode == "sequential":
        delay = stage.s_neu * syn.delay + neu.delay
    else:
        raise ValueError(f"unknown mode {mode!r}")
    energy = stage.r_a * stage.s_neu * stage.n_out * syn.energy + stage.n_out * neu.energy
    return delay, energy


def aggregate(stages: list[StageBench], schedule: str) -> WorkloadBench:
    """Combine per-stage benches.

    Parallel gives every stage its own cores (areas add, feature maps
    multiply area); time-multiplexed reuses one core (area is the maximum,
    feature maps multiply delay). Energy is identical across schedules.
    """
    if not stages:
        raise ValueError("workload needs at least one stage")
    if schedule not in ("parallel", "time_multiplexed"):
        raise ValueError(f"unknown schedule {schedule!r}")
    energy = sum(s.energy * s.f_st for s in stages)
    if schedule == "parallel":
        area = sum(s.area * s.f_st for s in stages)
        delay = sum(s.delay for s in stages)
    else:
        area = max(s.area for s in stages)
        delay = sum(s.delay * s.f_st for s in stages)
    return WorkloadBench(area=area, delay=delay, energy=energy, schedule=schedule)


def run_workload(
    spec: WorkloadSpec,
    elem: "ElementBench",
    constants: "GlobalConstants",
    *,
    network_kind: str = "ANN",
    fan_in: Optional[int] = None,
    mode: str = "cascaded",
    schedule: str = "parallel",
) -> WorkloadBench:
    """Evaluate a whole workload on one element bench."""
    benches = []
    for index, layer in enumerate(spec.layers, start=1):
        stage = stage_params(layer, index, network_kind)
        topology = "convolution" if layer.kind == "convolution" else "cross_connect"
        area = core_area(stage, topology, elem, fan_in, constants)
        delay, energy = stage_time_energy(stage, elem, fan_in, mode)
        benches.append(StageBench(area=area, delay=delay, energy=energy, f_st=stage.f_st))
    return aggregate(benches, schedule)


def total_synaptic_ops(spec: WorkloadSpec, network_kind: str = "ANN") -> float:
    """Activity-weighted synaptic operations summed over stages and feature maps."""
    total = 0.0
    for index, layer in enumerate(spec.layers, start=1):
        stage = stage_params(layer, index, network_kind)
        total += stage.r_a * stage.s_neu * stage.n_out * stage.f_st
    return total


def builtin_workloads() -> list[WorkloadSpec]:
    """The named workload specs shipped with the default dataset."""
    from .registry import load_datasets  # lazy: registry imports this module

    return list(load_datasets().workloads.values())
