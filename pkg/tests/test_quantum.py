import math

import numpy as np
import pytest

from hardysets import (
    BeamSplitterConvention,
    DEFAULT_CONVENTION,
    GAMMA,
    NonUnitaryConvention,
    QuantumState,
    apply_annihilation,
    apply_beam_splitter,
    run_double_mzi,
)
from hardysets.quantum import pipeline_stages, random_two_particle_state

TOL = 1e-12


def test_default_distribution_values():
    dist = run_double_mzi()
    assert abs(dist.p("d", "d") - 1 / 16) <= TOL
    assert abs(dist.p_gamma - 1 / 4) <= TOL
    assert abs(dist.p("c", "c") - 9 / 16) <= TOL
    assert abs(dist.p("c", "d") - 1 / 16) <= TOL
    assert abs(dist.p("d", "c") - 1 / 16) <= TOL
    assert abs(dist.total - 1.0) <= TOL


def test_distribution_totals_one_for_other_unitaries():
    phase = BeamSplitterConvention(
        np.array([[1.0, 1.0j], [1.0j, 1.0]]) / math.sqrt(2.0)
    )
    dist = run_double_mzi(phase)
    assert abs(dist.total - 1.0) <= TOL


def test_non_unitary_convention_rejected():
    with pytest.raises(NonUnitaryConvention):
        BeamSplitterConvention([[1.0, 0.0], [0.0, 2.0]])
    with pytest.raises(ValueError):
        BeamSplitterConvention(np.eye(3))


def test_default_matrix_is_involution():
    m = DEFAULT_CONVENTION.matrix
    assert np.max(np.abs(m @ m - np.eye(2))) <= TOL


def test_identity_convention_leaves_stage_one_unchanged():
    identity = BeamSplitterConvention(np.eye(2))
    state = QuantumState.from_amplitudes(
        {("u", "v"): 0.6, ("v", "u"): 0.8j}
    )
    out = apply_beam_splitter(state, "electron", 1, identity)
    assert out.amplitude(("u", "v")) == pytest.approx(0.6)
    assert out.amplitude(("v", "u")) == pytest.approx(0.8j)


def test_stage_two_moves_arms_to_detectors():
    identity = BeamSplitterConvention(np.eye(2))
    state = QuantumState.basis_state(("u", "u"))
    out = apply_beam_splitter(state, "electron", 2, identity)
    assert abs(out.amplitude(("c", "u")) - 1.0) <= TOL
    assert abs(out.amplitude(("u", "u"))) <= TOL


def test_beam_splitter_keeps_gamma_untouched():
    state = QuantumState.from_amplitudes({GAMMA: 1.0})
    out = apply_beam_splitter(state, "positron", 1, DEFAULT_CONVENTION)
    assert abs(out.amplitude(GAMMA) - 1.0) <= TOL
    assert abs(out.norm() - 1.0) <= TOL


def test_annihilation_transfer():
    idle = QuantumState.from_amplitudes({("v", "v"): 1.0})
    assert apply_annihilation(idle).amplitude(("v", "v")) == pytest.approx(1.0)

    pure = QuantumState.basis_state(("u", "u"))
    out = apply_annihilation(pure)
    assert abs(out.amplitude(GAMMA) - 1.0) <= TOL
    assert abs(out.amplitude(("u", "u"))) <= TOL


def test_annihilation_of_equal_superposition():
    state = QuantumState.basis_state(("u", "u"))
    state = apply_beam_splitter(state, "electron", 1, DEFAULT_CONVENTION)
    state = apply_beam_splitter(state, "positron", 1, DEFAULT_CONVENTION)
    out = apply_annihilation(state)
    assert abs(out.amplitude(GAMMA) - 0.5) <= TOL


def test_norm_preserved_across_stages_random_states():
    rng = np.random.default_rng(42)
    stages = pipeline_stages(DEFAULT_CONVENTION)
    for _ in range(1000):
        state = random_two_particle_state(rng)
        for stage in stages:
            state = stage(state)
            assert abs(state.norm() - 1.0) <= TOL


def test_unknown_particle_and_stage_rejected():
    state = QuantumState.basis_state(("u", "u"))
    with pytest.raises(ValueError):
        apply_beam_splitter(state, "muon", 1, DEFAULT_CONVENTION)
    with pytest.raises(ValueError):
        apply_beam_splitter(state, "electron", 3, DEFAULT_CONVENTION)


def test_amplitude_chase_matches_hand_value():
    # dd amplitude is (1/2) * (-1/2 - 1/2 + 1/2) = -1/4
    state = QuantumState.basis_state(("u", "u"))
    for stage in pipeline_stages(DEFAULT_CONVENTION):
        state = stage(state)
    assert state.amplitude(("d", "d")).real == pytest.approx(-0.25, abs=TOL)
    assert state.amplitude(("d", "d")).imag == pytest.approx(0.0, abs=TOL)
