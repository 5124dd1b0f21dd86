"""Finite probability triples with exact rational measure.

A triple holds a sample space of pairwise-distinct set values in
canonical order and one exact weight per element. The event field is
the full power set, represented as index bitmasks over the canonical
element order, so closure under complement and union holds by
construction; :func:`verify_axioms` turns that structural fact into
executable evidence by sweeping events and checking the field and
measure axioms directly.

No floating point is used anywhere in this module; probabilities are
:class:`fractions.Fraction` values and all comparisons are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .hfset import HfSet, AtomOperand, canonical_key, print_set

__all__ = [
    "AxiomReport",
    "ClosureCheck",
    "DuplicateElement",
    "EmptySampleSpace",
    "Event",
    "IndexOutOfRange",
    "NotAnEvent",
    "ProbabilityTriple",
    "SampleSpaceTooLarge",
    "UnionClosureCheck",
    "all_event_probabilities",
    "complement",
    "event_from_set",
    "field_size_log2",
    "full_event",
    "intersect_events",
    "prob",
    "uniform_triple",
    "union_events",
    "verify_axioms",
]

# Exhaustive sweeps over all 2^n events stay desk-scale up to here.
_MAX_EXHAUSTIVE_OMEGA = 24
# Bound for enumerating every event probability (2^n exact sums).
_MAX_EXHAUSTIVE_MEASURE = 16


class DuplicateElement(ValueError):
    """Sample-space elements must be pairwise distinct."""

    def __init__(self, duplicates: Sequence[str]) -> None:
        self.duplicates = tuple(duplicates)
        super().__init__(
            "duplicate sample-space elements: " + ", ".join(self.duplicates)
        )


class EmptySampleSpace(ValueError):
    """The sample space may not be empty."""


class NotAnEvent(ValueError):
    """A set does not denote an event: some members lie outside the sample space."""

    def __init__(self, missing: Sequence[str]) -> None:
        self.missing = tuple(missing)
        super().__init__(
            "not an event over this sample space; members outside omega: "
            + ", ".join(self.missing)
        )


class IndexOutOfRange(ValueError):
    """An event refers to indices beyond the sample space."""


class SampleSpaceTooLarge(ValueError):
    """The sample space exceeds the exhaustive-verification bound."""


class ProbabilityTriple:
    """Sample space, implicit power-set event field, and exact measure.

    Elements are sorted into canonical order at construction; events are
    bitmasks over that order. Only the uniform constructor is used by
    the Hardy model, but arbitrary non-negative exact weights summing to
    one are accepted.
    """

    __slots__ = ("_omega", "_weights", "_index")

    def __init__(self, elements: Iterable[HfSet], weights: Iterable[Fraction | int]) -> None:
        elems = tuple(elements)
        raw_weights = tuple(weights)
        if not elems:
            raise EmptySampleSpace("sample space must be non-empty")
        if len(raw_weights) != len(elems):
            raise ValueError("exactly one weight per element is required")
        for e in elems:
            if not isinstance(e, HfSet):
                raise TypeError(
                    f"sample-space elements must be HfSet values, got {type(e).__name__}"
                )
        exact: list[Fraction] = []
        for w in raw_weights:
            if isinstance(w, float):
                raise TypeError("weights must be exact rationals, not floats")
            exact.append(Fraction(w))
        pairs = sorted(zip(elems, exact), key=lambda p: canonical_key(p[0]))
        dups = [
            print_set(pairs[i][0])
            for i in range(1, len(pairs))
            if pairs[i][0] == pairs[i - 1][0]
        ]
        if dups:
            raise DuplicateElement(sorted(set(dups)))
        for _, w in pairs:
            if w < 0:
                raise ValueError("weights must be non-negative")
        total = sum(w for _, w in pairs)
        if total != 1:
            raise ValueError(f"weights must sum to exactly 1, got {total}")
        self._omega = tuple(e for e, _ in pairs)
        self._weights = tuple(w for _, w in pairs)
        self._index = {e: i for i, e in enumerate(self._omega)}

    @property
    def omega(self) -> tuple[HfSet, ...]:
        return self._omega

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return self._weights

    @property
    def size(self) -> int:
        return len(self._omega)

    @property
    def full_mask(self) -> int:
        return (1 << len(self._omega)) - 1

    def index_of(self, element: HfSet) -> int | None:
        """Canonical index of an element, or None when absent."""
        return self._index.get(element)

    def __repr__(self) -> str:
        return f"ProbabilityTriple(|omega|={len(self._omega)})"


def uniform_triple(elements: Iterable[HfSet]) -> ProbabilityTriple:
    """Uniform measure: every element gets weight 1/|omega| exactly."""
    elems = tuple(elements)
    if not elems:
        raise EmptySampleSpace("sample space must be non-empty")
    n = len(elems)
    return ProbabilityTriple(elems, [Fraction(1, n)] * n)


@dataclass(frozen=True)
class Event:
    """A subset of the sample space as a bitmask over canonical indices."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("event mask must be non-negative")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Event":
        m = 0
        for i in indices:
            if i < 0:
                raise IndexOutOfRange(f"negative event index {i}")
            m |= 1 << i
        return cls(m)

    @property
    def count(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)


def _check_event(e: Event, t: ProbabilityTriple) -> None:
    if e.mask >> t.size:
        raise IndexOutOfRange(
            f"event mask {e.mask:#x} exceeds the {t.size}-element sample space"
        )


def full_event(t: ProbabilityTriple) -> Event:
    """The whole sample space as an event."""
    return Event(t.full_mask)


def event_from_set(s: HfSet, t: ProbabilityTriple) -> Event:
    """Map a set value to the event containing exactly its members.

    Every member of ``s`` must be an element of the sample space;
    otherwise :class:`NotAnEvent` reports the missing members. Applying
    this to an atom is an error (atoms are not collections of sample
    points).
    """
    if s.is_atom:
        raise AtomOperand(f"event_from_set requires a set, got atom '{s.label}'")
    mask = 0
    missing: list[str] = []
    for m in s.children:
        i = t.index_of(m)
        if i is None:
            missing.append(print_set(m))
        else:
            mask |= 1 << i
    if missing:
        raise NotAnEvent(missing)
    return Event(mask)


def prob(e: Event, t: ProbabilityTriple) -> Fraction:
    """Exact probability of an event: the sum of its element weights."""
    _check_event(e, t)
    total = Fraction(0)
    mask = e.mask
    while mask:
        lsb = mask & -mask
        total += t.weights[lsb.bit_length() - 1]
        mask ^= lsb
    return total


def complement(e: Event, t: ProbabilityTriple) -> Event:
    _check_event(e, t)
    return Event(t.full_mask ^ e.mask)


def union_events(a: Event, b: Event) -> Event:
    return Event(a.mask | b.mask)


def intersect_events(a: Event, b: Event) -> Event:
    return Event(a.mask & b.mask)


def field_size_log2(t: ProbabilityTriple) -> int:
    """log2 of the event-field size: the field is the power set, so |F| = 2^|omega|."""
    return t.size


def all_event_probabilities(t: ProbabilityTriple) -> list[Fraction]:
    """Exact probability of every event, indexed by bitmask.

    Computed by one exact addition per event (dynamic programming over
    the lowest set bit). Bounded to small spaces because the table has
    2^|omega| entries.
    """
    n = t.size
    if n > _MAX_EXHAUSTIVE_MEASURE:
        raise SampleSpaceTooLarge(
            f"|omega| = {n} exceeds the exhaustive measure bound {_MAX_EXHAUSTIVE_MEASURE}"
        )
    weights = t.weights
    table = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        lsb = mask & -mask
        table[mask] = table[mask ^ lsb] + weights[lsb.bit_length() - 1]
    return table


@dataclass(frozen=True)
class ClosureCheck:
    checked: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class UnionClosureCheck:
    checked: int
    seed: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class AxiomReport:
    """Executable evidence for the event-field and measure axioms."""

    omega_in_field: bool
    complement_closure: ClosureCheck
    union_closure: UnionClosureCheck
    measure_bounds: bool
    total_mass_is_one: bool

    @property
    def passed(self) -> bool:
        return (
            self.omega_in_field
            and not self.complement_closure.failures
            and not self.union_closure.failures
            and self.measure_bounds
            and self.total_mass_is_one
        )

    def to_dict(self) -> dict:
        return {
            "omega_in_field": self.omega_in_field,
            "complement_closure": {
                "checked_count": self.complement_closure.checked,
                "failures": list(self.complement_closure.failures),
            },
            "union_closure": {
                "checked_count": self.union_closure.checked,
                "seed": self.union_closure.seed,
                "failures": list(self.union_closure.failures),
            },
            "measure_bounds": self.measure_bounds,
            "total_mass_is_one": self.total_mass_is_one,
            "passed": self.passed,
        }


def verify_axioms(t: ProbabilityTriple, union_samples: int, seed: int) -> AxiomReport:
    """Verify the field and measure axioms on a triple.

    Complement closure and membership of the whole space are checked
    exhaustively over all 2^|omega| events (hence the size bound); union
    closure is checked on seeded random pairs; measure bounds are
    exhaustive for |omega| <= 16 and sampled beyond that; total mass is
    compared to 1 exactly. Deterministic given (union_samples, seed).
    """
    n = t.size
    if n > _MAX_EXHAUSTIVE_OMEGA:
        raise SampleSpaceTooLarge(
            f"|omega| = {n} exceeds the exhaustive sweep bound {_MAX_EXHAUSTIVE_OMEGA}"
        )
    full = t.full_mask

    omega_in_field = True
    try:
        e_full = full_event(t)
        _check_event(e_full, t)
        if complement(e_full, t).mask != 0:
            omega_in_field = False
    except (IndexOutOfRange, ValueError):
        omega_in_field = False

    comp_failures: list[str] = []
    for mask in range(1 << n):
        c = full ^ mask
        if (mask & c) or (mask | c) != full or c >> n:
            comp_failures.append(f"mask={mask:#x}")
            if len(comp_failures) >= 8:
                break
    complement_closure = ClosureCheck(1 << n, tuple(comp_failures))

    rng = random.Random(seed)
    union_failures: list[str] = []
    for _ in range(union_samples):
        a = rng.getrandbits(n)
        b = rng.getrandbits(n)
        u = a | b
        if u >> n or u < 0:
            union_failures.append(f"a={a:#x} b={b:#x}")
            if len(union_failures) >= 8:
                break
    union_closure = UnionClosureCheck(union_samples, seed, tuple(union_failures))

    measure_bounds = True
    if n <= _MAX_EXHAUSTIVE_MEASURE:
        for p in all_event_probabilities(t):
            if p < 0 or p > 1:
                measure_bounds = False
                break
    else:
        for _ in range(union_samples):
            p = prob(Event(rng.getrandbits(n)), t)
            if p < 0 or p > 1:
                measure_bounds = False
                break

    total_mass_is_one = sum(t.weights, Fraction(0)) == 1

    return AxiomReport(
        omega_in_field=omega_in_field,
        complement_closure=complement_closure,
        union_closure=union_closure,
        measure_bounds=measure_bounds,
        total_mass_is_one=total_mass_is_one,
    )
