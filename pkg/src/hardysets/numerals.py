"""Von Neumann and Zermelo numeral constructors.

Both systems start from a configurable base object (the empty set or an
atom) at level 0 and build upward: the von Neumann numeral at level n+1
collects every earlier level, the Zermelo numeral wraps the previous
level in a singleton. With an atom base the level-0 numeral *is* that
atom, so e.g. the level-1 numeral of atom x is {x}.
"""

from __future__ import annotations

from .hfset import HfSet, empty, set_of

__all__ = ["numeral", "von_neumann", "zermelo"]


def _check_base(base: HfSet | None) -> HfSet:
    if base is None:
        return empty()
    if not isinstance(base, HfSet):
        raise TypeError(f"numeral base must be an HfSet, got {type(base).__name__}")
    if not (base.is_atom or base == empty()):
        raise ValueError("numeral base must be the empty set or an atom")
    return base


def von_neumann(n: int, base: HfSet | None = None) -> HfSet:
    """Level-n von Neumann numeral: each level is the set of all earlier levels.

    Cardinality is n for n >= 1.
    """
    if n < 0:
        raise ValueError("numeral level must be non-negative")
    levels = [_check_base(base)]
    for _ in range(n):
        levels.append(set_of(levels))
    return levels[n]


def zermelo(n: int, base: HfSet | None = None) -> HfSet:
    """Level-n Zermelo numeral: each level is the singleton of the previous one.

    Cardinality is 1 for n >= 1.
    """
    if n < 0:
        raise ValueError("numeral level must be non-negative")
    current = _check_base(base)
    for _ in range(n):
        current = set_of([current])
    return current


def numeral(system: str, n: int, base: HfSet | None = None) -> HfSet:
    """Dispatch on a system name: ``"vn"`` (von Neumann) or ``"zm"`` (Zermelo)."""
    if system == "vn":
        return von_neumann(n, base)
    if system == "zm":
        return zermelo(n, base)
    raise ValueError(f"unknown numeral system {system!r}: expected 'vn' or 'zm'")
