"""Exact set-theoretic model of measurement after mutual annihilation.

Hereditarily finite sets over atoms, von Neumann and Zermelo numeral
towers, exact-rational finite probability triples, a two-wing
annihilation model whose joint double-detection probability is exactly
1/16 at depth 3, and an independent quantum amplitude oracle confirming
the same number.
"""

from .hfset import (
    AtomOperand,
    HfSet,
    ParseError,
    atom,
    cardinality,
    empty,
    equals,
    intersect,
    member,
    monadic_union,
    parse_set,
    print_set,
    rank,
    set_of,
    unite,
)
from .numerals import numeral, von_neumann, zermelo
from .probability import (
    AxiomReport,
    DuplicateElement,
    EmptySampleSpace,
    Event,
    IndexOutOfRange,
    NotAnEvent,
    ProbabilityTriple,
    SampleSpaceTooLarge,
    complement,
    event_from_set,
    field_size_log2,
    full_event,
    intersect_events,
    prob,
    uniform_triple,
    union_events,
    verify_axioms,
)
from .hardy import (
    AtomQuadruple,
    DistinctnessReport,
    HardyModel,
    HardyResult,
    NonDistinctAtoms,
    annihilate,
    build_model,
    distinctness_diagnostic,
    field_membership_report,
    hardy_probability,
    intersection_identity_check,
)
from .quantum import (
    BeamSplitterConvention,
    DEFAULT_CONVENTION,
    GAMMA,
    NonUnitaryConvention,
    OutcomeDistribution,
    QuantumState,
    apply_annihilation,
    apply_beam_splitter,
    run_double_mzi,
)

__version__ = "0.1.0"

__all__ = [
    "AtomOperand",
    "AtomQuadruple",
    "AxiomReport",
    "BeamSplitterConvention",
    "DEFAULT_CONVENTION",
    "DistinctnessReport",
    "DuplicateElement",
    "EmptySampleSpace",
    "Event",
    "GAMMA",
    "HardyModel",
    "HardyResult",
    "HfSet",
    "IndexOutOfRange",
    "NonDistinctAtoms",
    "NonUnitaryConvention",
    "NotAnEvent",
    "OutcomeDistribution",
    "ParseError",
    "ProbabilityTriple",
    "QuantumState",
    "SampleSpaceTooLarge",
    "annihilate",
    "apply_annihilation",
    "apply_beam_splitter",
    "atom",
    "build_model",
    "cardinality",
    "complement",
    "distinctness_diagnostic",
    "empty",
    "equals",
    "event_from_set",
    "field_membership_report",
    "field_size_log2",
    "full_event",
    "hardy_probability",
    "intersect",
    "intersect_events",
    "intersection_identity_check",
    "member",
    "monadic_union",
    "numeral",
    "parse_set",
    "print_set",
    "prob",
    "rank",
    "run_double_mzi",
    "set_of",
    "uniform_triple",
    "union_events",
    "unite",
    "verify_axioms",
    "von_neumann",
    "zermelo",
]
