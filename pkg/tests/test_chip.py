from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from neurobench import load_datasets
from neurobench.ade import AdeTriple
from neurobench.chip import ChipConfig, chip_area, chip_bench, firing_rate, nominal_config
from neurobench.interconnect import ElementBench

ZERO = AdeTriple(0.0, 0.0, 0.0)


def element(a_syn=100.0, t_syn=10.0, e_syn=5.0, a_neu=300.0, t_neu=20.0, e_neu=7.0):
    return ElementBench(
        synapse=AdeTriple(a_syn, t_syn, e_syn), core_ic=ZERO,
        neuron=AdeTriple(a_neu, t_neu, e_neu), chip_ic=ZERO,
    )


def test_power_unit_pinning():
    # 1 aJ / 1 ps = 1e-18 J / 1e-12 s = 1e-6 W
    from neurobench import units

    assert units.W_PER_AJ_PER_PS == 1e-6


def test_chip_area_unit_factors(constants):
    flat = replace(constants, synapse_overhead=1.0, neuron_overhead=1.0, core_overhead=1.0, chip_overhead=1.0)
    cfg = ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=1)
    assert chip_area(cfg, 300.0, 100.0, flat) == pytest.approx(400.0)


def test_chip_area_overhead_nesting(constants):
    cfg = ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=1)
    flat = replace(constants, synapse_overhead=1.0, neuron_overhead=1.0, core_overhead=1.0, chip_overhead=1.0)
    doubled = replace(constants, synapse_overhead=2.0, neuron_overhead=2.0, core_overhead=2.0, chip_overhead=2.0)
    # chip, core, and element overheads nest: 2 * 2 * 2 = 8x for fixed inner term
    assert chip_area(cfg, 1.0, 1.0, doubled) == pytest.approx(8 * chip_area(cfg, 1.0, 1.0, flat))


def test_firing_rate_nonspiking_reciprocal():
    cfg = ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=256)
    elem = element(t_syn=897.31)
    assert firing_rate(cfg, elem) == pytest.approx(1.0 / 897.31)


def test_firing_rate_spiking_ratio():
    elem = element(t_syn=897.31)
    plain = ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=256, activity=0.5)
    spiking = replace(plain, spiking=True)
    assert firing_rate(plain, elem) / firing_rate(spiking, elem) == pytest.approx(128.0)


def test_firing_rate_degenerate_spiking_equals_nonspiking():
    elem = element()
    cfg = ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=1, activity=1.0)
    assert firing_rate(cfg, elem) == firing_rate(replace(cfg, spiking=True), elem)


def test_truenorth_shaped_throughput(constants):
    # 4096 cores x 256 neurons x 256 synapses at 20 Hz and half activity:
    # within 12% of the 3000 MSOPS the chip quotes
    cfg = ChipConfig(cores=4096, neurons_per_core=256, synapses_per_neuron=256, activity=0.5, spiking=True)
    tau_syn_ps = 1.0 / (20.0 * 0.5 * 256) * 1e12  # event period from 20 Hz firing
    bench = chip_bench(cfg, element(t_syn=tau_syn_ps), constants)
    assert bench.syn_throughput_per_s == pytest.approx(20 * 0.5 * 268_435_456)
    assert abs(bench.syn_throughput_per_s - 3.0e9) / 3.0e9 < 0.12


def test_truenorth_shaped_power(constants):
    cfg = ChipConfig(cores=4096, neurons_per_core=256, synapses_per_neuron=256, activity=0.5, spiking=True)
    tau_syn_ps = 1.0 / (20.0 * 0.5 * 256) * 1e12
    e_syn_aj = 26e6  # 26 pJ
    bench = chip_bench(cfg, element(t_syn=tau_syn_ps, e_syn=e_syn_aj, e_neu=0.0), constants)
    watts = bench.syn_throughput_per_s * 26e-12
    assert watts == pytest.approx(0.0698, rel=0.01)
    assert abs(watts - 0.072) / 0.072 < 0.10


def test_energy_per_event_degenerate():
    constants = load_datasets().constants
    cfg = ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=1, activity=1.0)
    bench = chip_bench(cfg, element(e_syn=5.0, e_neu=7.0), constants)
    assert bench.energy_per_event == pytest.approx(12.0)


@given(
    cores=st.integers(1, 4096),
    neurons=st.integers(1, 1024),
    synapses=st.integers(1, 1024),
    activity=st.floats(0.01, 1.0),
    spiking=st.booleans(),
)
def test_power_identity_holds(cores, neurons, synapses, activity, spiking):
    constants = load_datasets().constants
    cfg = ChipConfig(cores, neurons, synapses, activity=activity, spiking=spiking)
    bench = chip_bench(cfg, element(), constants)
    assert bench.power == pytest.approx(bench.syn_throughput * bench.energy_per_event, rel=1e-12)
    assert bench.time_step > element().neuron.delay
    assert bench.total_synapses == cores * neurons * synapses


def test_throughput_linear_in_counts_nonspiking(constants):
    base = ChipConfig(cores=2, neurons_per_core=4, synapses_per_neuron=8)
    b0 = chip_bench(base, element(), constants)
    for field in ("cores", "neurons_per_core", "synapses_per_neuron"):
        grown = replace(base, **{field: getattr(base, field) * 3})
        b1 = chip_bench(grown, element(), constants)
        assert b1.syn_throughput == pytest.approx(3 * b0.syn_throughput), field


def test_throughput_invariant_in_synapses_when_spiking(constants):
    base = ChipConfig(cores=2, neurons_per_core=4, synapses_per_neuron=8, spiking=True, activity=0.5)
    grown = replace(base, synapses_per_neuron=800)
    b0 = chip_bench(base, element(), constants)
    b1 = chip_bench(grown, element(), constants)
    # the synapse count cancels between the firing rate and the synapse total
    assert b1.syn_throughput == pytest.approx(b0.syn_throughput)


def test_nominal_config_values(constants):
    cfg = nominal_config(constants)
    assert (cfg.cores, cfg.neurons_per_core, cfg.synapses_per_neuron) == (64, 256, 256)
    assert cfg.activity == 1.0 and not cfg.spiking


def test_config_validation():
    with pytest.raises(ValueError):
        ChipConfig(cores=0, neurons_per_core=1, synapses_per_neuron=1)
    with pytest.raises(ValueError):
        ChipConfig(cores=1, neurons_per_core=1, synapses_per_neuron=1, activity=0.0)
