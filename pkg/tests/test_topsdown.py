import pytest

from neurobench.registry import ChipRecord
from neurobench.topsdown import (
    IncomputableError,
    backfill_derived,
    run_workload_on_chip,
    topsdown_accelerator,
    topsdown_element,
    topsdown_neuromorphic,
)
from neurobench.workload import WorkloadSpec


def test_truenorth_synapse_area(registry):
    # oracle: 95% of 430 mm^2 spread over 4096*256*256 synapses
    chip = registry.chip("TrueNorth")
    expected = 0.95 * 430e12 / (4096 * 256 * 256)
    element = topsdown_neuromorphic(chip)
    assert element.synapse_area == pytest.approx(expected)
    assert element.synapse_area == pytest.approx(1.5218e6, rel=1e-3)  # nm^2


def test_truenorth_neuron_energy(registry):
    # 26 pJ * 0.5 activity * 256 synapses = 3328 pJ
    element = topsdown_neuromorphic(registry.chip("TrueNorth"))
    assert element.neuron_energy == pytest.approx(3328e6)  # aJ


def test_truenorth_synapse_delay_from_fire_rate(registry):
    element = topsdown_neuromorphic(registry.chip("TrueNorth"))
    # inverted spiking rate: 1/(20 Hz * 0.5 * 256)
    assert element.synapse_delay == pytest.approx(1.0 / (20 * 0.5 * 256) * 1e12)


def test_neuron_energy_identity_for_all_computable_records(registry):
    for chip in registry.chips.values():
        if chip.kind != "neuromorphic":
            continue
        try:
            element = topsdown_neuromorphic(chip)
        except IncomputableError:
            continue
        assert element.neuron_energy / element.synapse_energy == pytest.approx(
            chip.activity * chip.synapses_per_neuron
        )


def test_area_split_proportion(registry):
    for chip in registry.chips.values():
        try:
            element = topsdown_element(chip, registry)
        except IncomputableError:
            continue
        ratio = element.neuron_area / (element.synapse_area * chip.synapses_per_neuron)
        assert ratio == pytest.approx(0.05 / 0.95)


def test_missing_area_is_named(registry):
    with pytest.raises(IncomputableError, match="area"):
        topsdown_neuromorphic(registry.chip("SpiNNaker 2"))


def test_accelerator_energy_from_power_over_throughput(registry):
    eyeriss = topsdown_element(registry.chip("Eyeriss"), registry)
    assert eyeriss.synapse_energy == pytest.approx(8.3e6, rel=0.05)  # pJ scale in aJ
    tpu = topsdown_element(registry.chip("TPU"), registry)
    assert tpu.synapse_energy == pytest.approx(3.5e6, rel=0.05)


def test_accelerator_time_step_is_clock(registry):
    eyeriss = topsdown_element(registry.chip("Eyeriss"), registry)
    assert eyeriss.synapse_delay == pytest.approx(1e12 / 200e6)  # 200 MHz in ps


def test_accelerator_missing_clock():
    chip = ChipRecord(name="X", kind="accelerator", cores=1, neurons_per_core=1, synapses_per_neuron=1,
                      area=1e12, power=1.0, syn_throughput=1e9)
    with pytest.raises(IncomputableError, match="clock"):
        topsdown_accelerator(chip)


def test_accelerator_missing_energy_sources():
    chip = ChipRecord(name="X", kind="accelerator", cores=1, neurons_per_core=1, synapses_per_neuron=1,
                      area=1e12, clock=1e9)
    with pytest.raises(IncomputableError, match="energy_per_event"):
        topsdown_accelerator(chip)


# -- back-fill -----------------------------------------------------------------


def test_backfill_spinnaker_activity(registry):
    result = backfill_derived(registry.chip("SpiNNaker"))
    assert result.chip.activity == pytest.approx(0.4, rel=0.05)
    assert "activity" in result.filled
    assert result.chip.energy_per_event == pytest.approx(16000e6, rel=0.05)


def test_backfill_never_overwrites_quoted(registry):
    chip = registry.chip("SpiNNaker")
    result = backfill_derived(chip)
    for field in ("power", "syn_throughput", "fire_rate", "area"):
        assert getattr(result.chip, field) == getattr(chip, field)


def test_backfill_truenorth_is_noop_with_small_residual(registry):
    chip = registry.chip("TrueNorth")
    result = backfill_derived(chip)
    assert result.chip == chip
    assert not result.filled
    assert all(r < 0.15 for r in result.residuals.values())


def test_backfill_idempotent(registry):
    first = backfill_derived(registry.chip("Loihi"))
    second = backfill_derived(first.chip)
    assert second.chip == first.chip


def test_backfill_under_determined(registry):
    with pytest.raises(IncomputableError, match="under-determined"):
        backfill_derived(registry.chip("DYNAPSEL"))


def test_backfill_synapse_fire_rate(registry):
    result = backfill_derived(registry.chip("SynAPSE"))
    # throughput / (activity * synapses): 15 MSOPS over 576*128
    assert result.chip.fire_rate == pytest.approx(15e6 / (576 * 128), rel=1e-6)
    assert result.chip.fire_rate == pytest.approx(203, rel=0.01)


# -- workloads on chips -----------------------------------------------------------


def test_loihi_speech_workload_runs(registry):
    bench = run_workload_on_chip(registry.chip("Loihi"), registry.workload("speech_mlp"), registry)
    assert bench.inferences_per_s > 0
    assert bench.energy > 0
    assert bench.schedule == "parallel"


def test_accelerator_runs_time_multiplexed(registry):
    bench = run_workload_on_chip(registry.chip("Myriad 2"), registry.workload("speech_mlp"), registry)
    assert bench.schedule == "time_multiplexed"
    # sequential: first stage pays one clock per synapse
    clock_ps = 1e12 / 800e6
    assert bench.delay == pytest.approx(((390 + 1) + (256 + 1) + (256 + 1)) * clock_ps)


def test_zero_stage_workload_rejected(registry):
    empty = WorkloadSpec(name="nothing", layers=())
    with pytest.raises(ValueError):
        run_workload_on_chip(registry.chip("Loihi"), empty, registry)


def test_chip_without_area_cannot_run_workloads(registry):
    with pytest.raises(IncomputableError, match="area"):
        run_workload_on_chip(registry.chip("Q4MobilEye"), registry.workload("mnist_mlp"), registry)
