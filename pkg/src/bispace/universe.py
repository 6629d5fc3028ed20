"""Subsets of a carrier, exact on finite carriers and classified on R - Q.

A finite carrier stores subsets as bitmasks over an ordered label list.
The symbolic carrier models an uncountable set with a handful of named
points ("atoms"); any subset is described by which atoms it holds and by
a coarse cardinality class of the rest (its "bulk").

Set operations over classified sets are sound: when the classes of the
operands do not force the class of the result, :class:`Indeterminate` is
raised, and comparisons return ``None`` instead of guessing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Union

MAX_FINITE_POINTS = 16


class Indeterminate(Exception):
    """The symbolic algebra cannot decide the requested answer."""


class UniverseError(ValueError):
    """A set or universe was built from inconsistent data."""


class Bulk(enum.Enum):
    """Cardinality class of the part of a set away from the atoms."""

    CTBL = "ctbl"  # countable, possibly empty
    COCTBL = "coctbl"  # complement countable, possibly everything
    BOTHBIG = "bothbig"  # set and complement both uncountable


class Kind(enum.IntEnum):
    """Exact bulk class used internally.  The three middle kinds are strict:
    COUNTABLE is nonempty, COCOUNTABLE misses at least one bulk point."""

    EMPTY = 0
    COUNTABLE = 1
    BOTHBIG = 2
    COCOUNTABLE = 3
    FULL = 4


_KIND_COMPLEMENT = {
    Kind.EMPTY: Kind.FULL,
    Kind.COUNTABLE: Kind.COCOUNTABLE,
    Kind.BOTHBIG: Kind.BOTHBIG,
    Kind.COCOUNTABLE: Kind.COUNTABLE,
    Kind.FULL: Kind.EMPTY,
}

_BULK_KINDS = {
    Bulk.CTBL: frozenset({Kind.EMPTY, Kind.COUNTABLE}),
    Bulk.COCTBL: frozenset({Kind.COCOUNTABLE, Kind.FULL}),
    Bulk.BOTHBIG: frozenset({Kind.BOTHBIG}),
}


def kind_complement(k: Kind) -> Kind:
    return _KIND_COMPLEMENT[k]


def kind_union(a: Kind, b: Kind) -> frozenset[Kind]:
    """Every kind the union of two bulk sets of kinds ``a`` and ``b`` can have."""
    if a > b:
        a, b = b, a
    if a is Kind.EMPTY:
        return frozenset({b})
    if b is Kind.FULL:
        return frozenset({Kind.FULL})
    if a is Kind.COUNTABLE:
        if b is Kind.COUNTABLE:
            return frozenset({Kind.COUNTABLE})
        if b is Kind.BOTHBIG:
            return frozenset({Kind.BOTHBIG})
        return frozenset({Kind.COCOUNTABLE, Kind.FULL})
    if a is Kind.BOTHBIG and b is Kind.BOTHBIG:
        return frozenset({Kind.BOTHBIG, Kind.COCOUNTABLE, Kind.FULL})
    return frozenset({Kind.COCOUNTABLE, Kind.FULL})


def kind_subset(a: Kind, b: Kind) -> bool | None:
    """Can a bulk set of kind ``a`` sit inside one of kind ``b``?

    ``True``/``False`` when forced for every pair of such sets, ``None`` when
    it depends on the particular sets.
    """
    if a is Kind.EMPTY or b is Kind.FULL:
        return True
    if a is Kind.FULL or b is Kind.EMPTY:
        return False
    if a is Kind.COUNTABLE:
        return None
    if a is Kind.BOTHBIG:
        return False if b is Kind.COUNTABLE else None
    return None if b is Kind.COCOUNTABLE else False


# ---------------------------------------------------------------- universes


@dataclass(frozen=True)
class FiniteUniverse:
    points: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(str(p) for p in self.points))
        if not 1 <= len(self.points) <= MAX_FINITE_POINTS:
            raise UniverseError(
                f"finite carrier needs 1..{MAX_FINITE_POINTS} points, got {len(self.points)}"
            )
        if len(set(self.points)) != len(self.points):
            raise UniverseError(f"duplicate point labels in {list(self.points)}")

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full_bits(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, label: str) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise UniverseError(f"unknown point {label!r}") from None

    def bits(self, labels: Iterable[str]) -> int:
        out = 0
        for label in labels:
            out |= 1 << self.index(label)
        return out

    def labels(self, bits: int) -> list[str]:
        return [p for k, p in enumerate(self.points) if bits >> k & 1]

    def mask(self, labels: Iterable[str] = ()) -> FiniteMask:
        return FiniteMask(self.bits(labels), self)

    def from_bits(self, bits: int) -> FiniteMask:
        return FiniteMask(bits, self)

    @property
    def empty(self) -> FiniteMask:
        return FiniteMask(0, self)

    @property
    def whole(self) -> FiniteMask:
        return FiniteMask(self.full_bits, self)

    def all_subsets(self) -> list[FiniteMask]:
        return [FiniteMask(m, self) for m in range(self.full_bits + 1)]


@dataclass(frozen=True)
class SymbolicUniverse:
    """An uncountable carrier (modelled on R - Q) with named atoms."""

    atoms: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(str(a) for a in self.atoms))
        if len(set(self.atoms)) != len(self.atoms):
            raise UniverseError(f"duplicate atom labels in {list(self.atoms)}")

    @property
    def atom_set(self) -> frozenset[str]:
        return frozenset(self.atoms)

    def _check(self, labels: Iterable[str]) -> frozenset[str]:
        out = frozenset(labels)
        unknown = out - self.atom_set
        if unknown:
            raise UniverseError(f"undeclared atoms {sorted(unknown)}")
        return out

    def small(self, labels: Iterable[str] = ()) -> ExplicitSmall:
        return ExplicitSmall(self._check(labels), self)

    def cofinite(self, labels: Iterable[str] = ()) -> CoFinite:
        return CoFinite(self._check(labels), self)

    def abstract(
        self,
        ins: Iterable[str],
        bulk: Bulk | str,
        outs: Iterable[str] | None = None,
    ) -> Abstract:
        ins = self._check(ins)
        outs = self.atom_set - ins if outs is None else self._check(outs)
        return Abstract(ins, outs, Bulk(bulk), self)

    @property
    def empty(self) -> ExplicitSmall:
        return ExplicitSmall(frozenset(), self)

    @property
    def whole(self) -> CoFinite:
        return CoFinite(frozenset(), self)

    def extended(self, extra: Iterable[str]) -> SymbolicUniverse:
        return SymbolicUniverse(self.atoms + tuple(extra))


Universe = Union[FiniteUniverse, SymbolicUniverse]


# --------------------------------------------------------------- set values


@dataclass(frozen=True)
class FiniteMask:
    bits: int
    universe: FiniteUniverse

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.universe.full_bits:
            raise UniverseError(f"mask {self.bits:#x} outside the carrier")

    def labels(self) -> list[str]:
        return self.universe.labels(self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


@dataclass(frozen=True)
class ExplicitSmall:
    """Exactly the listed atoms."""

    members: frozenset[str]
    universe: SymbolicUniverse

    def __repr__(self) -> str:
        return "{" + ",".join(_ordered(self.universe, self.members)) + "}"


@dataclass(frozen=True)
class CoFinite:
    """The whole carrier minus the listed atoms."""

    missing: frozenset[str]
    universe: SymbolicUniverse

    def __repr__(self) -> str:
        return "X-{" + ",".join(_ordered(self.universe, self.missing)) + "}"


@dataclass(frozen=True)
class Abstract:
    ins: frozenset[str]
    outs: frozenset[str]
    bulk: Bulk
    universe: SymbolicUniverse

    def __post_init__(self) -> None:
        if self.ins & self.outs:
            raise UniverseError(f"atoms both in and out: {sorted(self.ins & self.outs)}")
        if self.ins | self.outs != self.universe.atom_set:
            missing = self.universe.atom_set - self.ins - self.outs
            raise UniverseError(f"atoms left unclassified: {sorted(missing)}")

    def __repr__(self) -> str:
        ins = ",".join(_ordered(self.universe, self.ins))
        return f"<{self.bulk.value}|+{{{ins}}}>"


SetExpr = Union[FiniteMask, ExplicitSmall, CoFinite, Abstract]
SymbolicSet = Union[ExplicitSmall, CoFinite, Abstract]

# A concretization type: exact atom content and exact bulk kind.
SetType = tuple[frozenset, Kind]


def _ordered(universe: SymbolicUniverse, labels: Iterable[str]) -> list[str]:
    labels = set(labels)
    return [a for a in universe.atoms if a in labels]


def concretizations(s: SymbolicSet) -> list[SetType]:
    """The exact types a classified set may stand for."""
    if isinstance(s, ExplicitSmall):
        return [(s.members, Kind.EMPTY)]
    if isinstance(s, CoFinite):
        return [(s.universe.atom_set - s.missing, Kind.FULL)]
    return [(s.ins, k) for k in sorted(_BULK_KINDS[s.bulk])]


def from_types(universe: SymbolicUniverse, atoms: frozenset, kinds: Iterable[Kind]) -> SymbolicSet:
    """Tightest representable set covering every given kind on fixed atoms."""
    kinds = frozenset(kinds)
    if kinds == {Kind.EMPTY}:
        return ExplicitSmall(frozenset(atoms), universe)
    if kinds == {Kind.FULL}:
        return CoFinite(universe.atom_set - atoms, universe)
    for bulk in (Bulk.CTBL, Bulk.COCTBL, Bulk.BOTHBIG):
        if kinds <= _BULK_KINDS[bulk]:
            return Abstract(frozenset(atoms), universe.atom_set - atoms, bulk, universe)
    raise Indeterminate(f"bulk class not forced: could be any of {sorted(k.name for k in kinds)}")


def type_complement(t: SetType, atom_set: frozenset) -> SetType:
    return (atom_set - t[0], kind_complement(t[1]))


def type_subset(a: SetType, b: SetType) -> bool | None:
    if not a[0] <= b[0]:
        return False
    return kind_subset(a[1], b[1])


# --------------------------------------------------------------- operations


def _same_universe(s: SetExpr, t: SetExpr) -> None:
    if s.universe != t.universe:
        raise UniverseError("operands live in different universes")


def complement(s: SetExpr) -> SetExpr:
    if isinstance(s, FiniteMask):
        return FiniteMask(s.universe.full_bits ^ s.bits, s.universe)
    if isinstance(s, ExplicitSmall):
        return CoFinite(s.members, s.universe)
    if isinstance(s, CoFinite):
        return ExplicitSmall(s.missing, s.universe)
    swapped = {Bulk.CTBL: Bulk.COCTBL, Bulk.COCTBL: Bulk.CTBL, Bulk.BOTHBIG: Bulk.BOTHBIG}
    return Abstract(s.outs, s.ins, swapped[s.bulk], s.universe)


def union(s: SetExpr, t: SetExpr) -> SetExpr:
    _same_universe(s, t)
    if isinstance(s, FiniteMask):
        return FiniteMask(s.bits | t.bits, s.universe)
    kinds: set[Kind] = set()
    atoms = None
    for (a1, k1), (a2, k2) in product(concretizations(s), concretizations(t)):
        atoms = a1 | a2
        kinds |= kind_union(k1, k2)
    return from_types(s.universe, atoms, kinds)


def intersect(s: SetExpr, t: SetExpr) -> SetExpr:
    return complement(union(complement(s), complement(t)))


def difference(s: SetExpr, t: SetExpr) -> SetExpr:
    return intersect(s, complement(t))


def subset_of(s: SetExpr, t: SetExpr) -> bool | None:
    """Three-valued inclusion; ``None`` means the algebra cannot tell."""
    _same_universe(s, t)
    if isinstance(s, FiniteMask):
        return s.bits & ~t.bits == 0
    if s == t:
        return True
    verdicts = {type_subset(a, b) for a, b in product(concretizations(s), concretizations(t))}
    return verdicts.pop() if len(verdicts) == 1 else None


def equals(s: SetExpr, t: SetExpr) -> bool | None:
    _same_universe(s, t)
    if isinstance(s, FiniteMask) or s == t:
        return s == t
    verdicts = set()
    for (a1, k1), (a2, k2) in product(concretizations(s), concretizations(t)):
        if a1 != a2 or k1 != k2:
            verdicts.add(False)
        elif k1 in (Kind.EMPTY, Kind.FULL):
            verdicts.add(True)
        else:
            verdicts.add(None)
    return verdicts.pop() if len(verdicts) == 1 else None


def is_empty(s: SetExpr) -> bool | None:
    if isinstance(s, FiniteMask):
        return s.bits == 0
    return equals(s, s.universe.empty)


def contains_point(s: SetExpr, label: str) -> bool:
    """Membership of a named point (finite label or declared atom)."""
    if isinstance(s, FiniteMask):
        return bool(s.bits >> s.universe.index(label) & 1)
    if label not in s.universe.atom_set:
        raise UniverseError(f"undeclared atom {label!r}")
    if isinstance(s, ExplicitSmall):
        return label in s.members
    if isinstance(s, CoFinite):
        return label not in s.missing
    return label in s.ins
