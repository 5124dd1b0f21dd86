"""Amplitude-level oracle for the double-interferometer experiment.

Two particles each traverse a balanced two-splitter interferometer whose
inner arms overlap; if both occupy the overlapping arm pair (u, u) they
annihilate into a photon record (the gamma channel). Each particle then
meets its second splitter and lands on detector arms (c, d). With the
real balanced splitter convention the double dark-detector outcome
(d, d) has probability exactly 1/16 and the photon record 1/4, which is
the quantum value the exact set-theoretic model must agree with.

All amplitudes are complex floats; tolerances of 1e-12 are slack, since
every value reachable with the default convention is a dyadic rational.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "ARMS",
    "BASIS",
    "DEFAULT_CONVENTION",
    "GAMMA",
    "BeamSplitterConvention",
    "NonUnitaryConvention",
    "OutcomeDistribution",
    "QuantumState",
    "apply_annihilation",
    "apply_beam_splitter",
    "random_two_particle_state",
    "run_double_mzi",
]

ARMS = ("u", "v", "c", "d")
GAMMA = "gamma"
PAIR_LABELS = tuple((a, b) for a in ARMS for b in ARMS)
BASIS = PAIR_LABELS + (GAMMA,)
_INDEX: dict = {label: i for i, label in enumerate(BASIS)}

_TOL = 1e-12


class NonUnitaryConvention(ValueError):
    """The supplied 2x2 splitter matrix is not unitary."""


class BeamSplitterConvention:
    """A 2x2 unitary; rows are output modes, columns input modes."""

    __slots__ = ("matrix",)

    def __init__(self, matrix) -> None:
        m = np.asarray(matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"splitter matrix must be 2x2, got shape {m.shape}")
        if np.max(np.abs(m @ m.conj().T - np.eye(2))) > _TOL:
            raise NonUnitaryConvention("splitter matrix is not unitary within 1e-12")
        m.setflags(write=False)
        self.matrix = m


# u -> (c + d)/sqrt(2), v -> (c - d)/sqrt(2): the real balanced convention.
DEFAULT_CONVENTION = BeamSplitterConvention(
    np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
)


class QuantumState:
    """Immutable amplitude vector over the two-particle arm basis plus gamma."""

    __slots__ = ("_amps",)

    def __init__(self, amplitudes: np.ndarray) -> None:
        amps = np.asarray(amplitudes, dtype=complex)
        if amps.shape != (len(BASIS),):
            raise ValueError(f"amplitude vector must have length {len(BASIS)}")
        amps = amps.copy()
        amps.setflags(write=False)
        self._amps = amps

    @classmethod
    def from_amplitudes(cls, mapping: Mapping) -> "QuantumState":
        amps = np.zeros(len(BASIS), dtype=complex)
        for label, value in mapping.items():
            amps[_INDEX[label]] = value
        return cls(amps)

    @classmethod
    def basis_state(cls, label) -> "QuantumState":
        amps = np.zeros(len(BASIS), dtype=complex)
        amps[_INDEX[label]] = 1.0
        return cls(amps)

    def amplitude(self, label) -> complex:
        return complex(self._amps[_INDEX[label]])

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self._amps, self._amps).real))

    def probabilities(self) -> dict:
        return {label: float(abs(self._amps[i]) ** 2) for label, i in _INDEX.items()}


def random_two_particle_state(rng: np.random.Generator) -> QuantumState:
    """Random normalized state over the 16 arm pairs; the gamma record starts empty."""
    re = rng.standard_normal(len(PAIR_LABELS))
    im = rng.standard_normal(len(PAIR_LABELS))
    vec = re + 1j * im
    vec /= np.linalg.norm(vec)
    amps = np.zeros(len(BASIS), dtype=complex)
    amps[: len(PAIR_LABELS)] = vec
    return QuantumState(amps)


def _particle_slot(particle: str) -> int:
    if particle == "electron":
        return 0
    if particle == "positron":
        return 1
    raise ValueError(f"particle must be 'electron' or 'positron', got {particle!r}")


def apply_beam_splitter(
    state: QuantumState,
    particle: str,
    stage: int,
    convention: BeamSplitterConvention,
) -> QuantumState:
    """Apply one splitter to one particle; the gamma amplitude is untouched.

    Stage 1 rotates the particle's (u, v) amplitudes in place; stage 2
    sends (u, v) through the matrix onto the detector arms (c, d) while
    the previous (c, d) amplitudes swap back onto (u, v), keeping the
    whole map unitary for arbitrary states.
    """
    slot = _particle_slot(particle)
    if stage not in (1, 2):
        raise ValueError(f"stage must be 1 or 2, got {stage!r}")
    m = convention.matrix
    ins = ("u", "v")
    outs = ("u", "v") if stage == 1 else ("c", "d")

    amps = np.array(state._amps, dtype=complex)

    def idx(own_arm: str, other_arm: str) -> int:
        pair = (own_arm, other_arm) if slot == 0 else (other_arm, own_arm)
        return _INDEX[pair]

    for other in ARMS:
        i_in0, i_in1 = idx(ins[0], other), idx(ins[1], other)
        a0, a1 = amps[i_in0], amps[i_in1]
        i_out0, i_out1 = idx(outs[0], other), idx(outs[1], other)
        if stage == 2:
            old0, old1 = amps[i_out0], amps[i_out1]
            amps[i_in0], amps[i_in1] = old0, old1
        amps[i_out0] = m[0, 0] * a0 + m[0, 1] * a1
        amps[i_out1] = m[1, 0] * a0 + m[1, 1] * a1
    return QuantumState(amps)


def apply_annihilation(state: QuantumState) -> QuantumState:
    """Transfer the overlapping-arm amplitude (u, u) to the gamma channel.

    All other amplitudes are unchanged. With an empty gamma record (the
    pipeline's situation) the transfer preserves the norm exactly; a
    pre-existing gamma amplitude is added coherently.
    """
    amps = np.array(state._amps, dtype=complex)
    uu = _INDEX[("u", "u")]
    amps[_INDEX[GAMMA]] += amps[uu]
    amps[uu] = 0.0
    return QuantumState(amps)


class OutcomeDistribution:
    """Final measurement probabilities: gamma plus the four detector pairs."""

    __slots__ = ("p_gamma", "_pairs")

    def __init__(self, p_gamma: float, pairs: Mapping) -> None:
        self.p_gamma = float(p_gamma)
        self._pairs = {k: float(v) for k, v in pairs.items()}
        for value in (self.p_gamma, *self._pairs.values()):
            if value < -_TOL or value > 1 + _TOL:
                raise ValueError(f"probability {value} out of [0, 1]")
        if abs(self.total - 1.0) > _TOL:
            raise ValueError(f"outcome distribution totals {self.total}, expected 1")

    def p(self, arm_e: str, arm_p: str) -> float:
        return self._pairs[(arm_e, arm_p)]

    @property
    def total(self) -> float:
        return self.p_gamma + sum(self._pairs.values())

    def to_dict(self) -> dict:
        out = {"p_gamma": self.p_gamma}
        for (ae, ap), value in sorted(self._pairs.items()):
            out[f"p_{ae}{ap}"] = value
        out["total"] = self.total
        return out


def pipeline_stages(convention: BeamSplitterConvention) -> Iterable:
    """The five stage maps of the experiment, in order."""
    return (
        lambda s: apply_beam_splitter(s, "electron", 1, convention),
        lambda s: apply_beam_splitter(s, "positron", 1, convention),
        apply_annihilation,
        lambda s: apply_beam_splitter(s, "electron", 2, convention),
        lambda s: apply_beam_splitter(s, "positron", 2, convention),
    )


def run_double_mzi(convention: BeamSplitterConvention | None = None) -> OutcomeDistribution:
    """Run the full experiment and return the outcome distribution.

    Both particles enter on the arm that feeds the overlap region; the
    (u, u) configuration after the first splitters is diverted to the
    gamma channel; the survivors meet their second splitters and are
    read out on the (c, d) detector pairs.
    """
    conv = DEFAULT_CONVENTION if convention is None else convention
    state = QuantumState.basis_state(("u", "u"))
    for stage in pipeline_stages(conv):
        state = stage(state)
    probs = state.probabilities()
    pairs = {
        (ae, ap): probs[(ae, ap)] for ae in ("c", "d") for ap in ("c", "d")
    }
    return OutcomeDistribution(probs[GAMMA], pairs)
