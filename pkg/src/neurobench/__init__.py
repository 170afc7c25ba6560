"""Analytic area/delay/energy benchmarking of neural-inference hardware.

Bottoms-up: devices -> circuits -> synapse/neuron elements -> network types
-> interconnect -> chips -> workloads. Tops-down: published chip specs
decomposed to per-element figures and run through the same workload model.
"""

from .ade import AdeTriple
from .chip import ChipBench, ChipConfig, chip_bench, nominal_config
from .interconnect import ElementBench
from .networks import NetworkElementBench, network_element
from .registry import (
    ChipRecord,
    DatasetError,
    DeviceRecord,
    GlobalConstants,
    Registry,
    Technology,
    ValidationError,
    load_datasets,
)
from .report import bench_technology, bench_workload, element_matrix, emit_matrix, pareto_front
from .topsdown import TopsDownElement, backfill_derived, run_workload_on_chip, topsdown_element
from .workload import LayerSpec, WorkloadBench, WorkloadSpec, run_workload

__all__ = [
    "AdeTriple",
    "ChipBench",
    "ChipConfig",
    "ChipRecord",
    "DatasetError",
    "DeviceRecord",
    "ElementBench",
    "GlobalConstants",
    "LayerSpec",
    "NetworkElementBench",
    "Registry",
    "Technology",
    "TopsDownElement",
    "ValidationError",
    "WorkloadBench",
    "WorkloadSpec",
    "backfill_derived",
    "bench_technology",
    "bench_workload",
    "chip_bench",
    "element_matrix",
    "emit_matrix",
    "load_datasets",
    "network_element",
    "nominal_config",
    "pareto_front",
    "run_workload",
    "run_workload_on_chip",
    "topsdown_element",
]

__version__ = "0.1.0"
