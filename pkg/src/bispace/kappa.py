"""Sigma-structures, bispaces, closure/interior and finite enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Union

from . import _schema
from ._finite import FiniteBispace, kappa_tables
from .universe import (
    FiniteMask,
    FiniteUniverse,
    SetExpr,
    SymbolicUniverse,
    Universe,
    UniverseError,
    complement,
)

MAX_ENUMERATION_POINTS = 4


@dataclass(frozen=True)
class Explicit:
    """Open sets of a finite structure, as sorted bitmasks."""

    open_sets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "open_sets", tuple(sorted(set(self.open_sets))))

    @classmethod
    def from_labels(cls, universe: FiniteUniverse, sets: Iterable[Iterable[str]]) -> Explicit:
        return cls(tuple(universe.bits(s) for s in sets))


@dataclass(frozen=True)
class Schema:
    """Open family ``{X, 0} + {required | G : G countable, G misses excluded}``
    (when ``countable``) ``+ {all co-countable sets}`` (when ``cocountable``).

    With neither flag the family is ``{X, 0, required}``.
    """

    required: frozenset[str] = frozenset()
    excluded: frozenset[str] = frozenset()
    countable: bool = True
    cocountable: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "required", frozenset(self.required))
        object.__setattr__(self, "excluded", frozenset(self.excluded))


KappaFamily = Union[Explicit, Schema]


@dataclass(frozen=True)
class Violation:
    """A failed structure axiom.

    ``axiom`` follows the open-set reading of the σ-space axioms:
    1 = countable unions, 2 = finite intersections, 3 = contains 0 and X;
    0 marks a structural problem with the description itself.
    """

    axiom: int
    message: str
    witnesses: tuple = ()

    def __str__(self) -> str:
        return f"axiom {self.axiom}: {self.message}" if self.axiom else self.message


class InvalidFamily(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def validate(family: KappaFamily, universe: Universe) -> Violation | None:
    if isinstance(family, Explicit):
        if not isinstance(universe, FiniteUniverse):
            return Violation(0, "explicit families need a finite carrier")
        return _validate_explicit(family, universe)
    if not isinstance(universe, SymbolicUniverse):
        return Violation(0, "schema families need a symbolic carrier")
    return _validate_schema(family, universe)


def _validate_explicit(family: Explicit, universe: FiniteUniverse) -> Violation | None:
    full = universe.full_bits
    fam = set(family.open_sets)
    bad = [m for m in fam if not 0 <= m <= full]
    if bad:
        return Violation(0, "open set outside the carrier", tuple(bad))
    if 0 not in fam:
        return Violation(3, "empty set missing")
    if full not in fam:
        return Violation(3, "whole carrier missing", (universe.labels(full),))
    ordered = sorted(fam)
    for a, b in product(ordered, ordered):
        if a | b not in fam:
            return Violation(
                1,
                f"union {universe.labels(a | b)} missing",
                (universe.labels(a), universe.labels(b)),
            )
        if a & b not in fam:
            return Violation(
                2,
                f"intersection {universe.labels(a & b)} missing",
                (universe.labels(a), universe.labels(b)),
            )
    return None


def _validate_schema(family: Schema, universe: SymbolicUniverse) -> Violation | None:
    unknown = (family.required | family.excluded) - universe.atom_set
    if unknown:
        return Violation(0, f"undeclared atoms {sorted(unknown)}")
    if family.required & family.excluded:
        return Violation(0, "atoms both required and excluded", tuple(sorted(family.required & family.excluded)))
    if not family.countable and family.excluded:
        return Violation(0, "excluded atoms only apply to the countable generator")
    if not (family.countable or family.cocountable or family.required):
        return Violation(0, "schema generates no open sets besides 0 and X")
    if family.cocountable and family.required:
        r = min(family.required)
        return Violation(
            2,
            "a co-countable set missing a required atom meets a required open set "
            "in a set that is not open",
            (f"X-{{{r}}}", sorted(family.required)),
        )
    return None


@dataclass(frozen=True)
class Bispace:
    universe: Universe
    kappa1: KappaFamily
    kappa2: KappaFamily
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for idx, fam in ((1, self.kappa1), (2, self.kappa2)):
            problem = validate(fam, self.universe)
            if problem is not None:
                raise InvalidFamily(Violation(problem.axiom, f"kappa{idx}: {problem.message}", problem.witnesses))

    @property
    def finite(self) -> bool:
        return isinstance(self.universe, FiniteUniverse)

    def kappa(self, i: int) -> KappaFamily:
        if i == 1:
            return self.kappa1
        if i == 2:
            return self.kappa2
        raise ValueError(f"structure index must be 1 or 2, got {i}")

    @cached_property
    def tables(self) -> FiniteBispace:
        if not self.finite:
            raise TypeError("bitmask tables exist only for finite bispaces")
        return FiniteBispace(self.universe.size, self.kappa1.open_sets, self.kappa2.open_sets)

    def rules(self, i: int, atom_set: frozenset | None = None) -> _schema.SchemaRules:
        if self.finite:
            raise TypeError("schema rules exist only for symbolic bispaces")
        return _schema.rules_for(self.kappa(i), self.universe, atom_set)

    def mask(self, labels: Iterable[str] = ()) -> FiniteMask:
        return self.universe.mask(labels)


def finite_bispace(points, kappa1, kappa2, name: str = "") -> Bispace:
    """Build a finite bispace from label lists."""
    u = FiniteUniverse(tuple(points))
    return Bispace(u, Explicit.from_labels(u, kappa1), Explicit.from_labels(u, kappa2), name)


# ----------------------------------------------------------- open / closure


def _check_member(family: KappaFamily, s: SetExpr) -> None:
    if isinstance(family, Explicit) != isinstance(s, FiniteMask):
        raise UniverseError("set and family live on different kinds of carrier")


def _tables(family: Explicit, s: FiniteMask):
    return kappa_tables(s.universe.size, family.open_sets)


def _rules(family: Schema, s) -> _schema.SchemaRules:
    return _schema.rules_for(family, s.universe)


def is_open(family: KappaFamily, s: SetExpr) -> bool:
    _check_member(family, s)
    if isinstance(family, Explicit):
        return s.bits in family.open_sets
    return _schema.decide(s, _rules(family, s).is_open)


def is_closed(family: KappaFamily, s: SetExpr) -> bool:
    return is_open(family, complement(s))


def closure(family: KappaFamily, s: SetExpr) -> SetExpr:
    _check_member(family, s)
    if isinstance(family, Explicit):
        return FiniteMask(_tables(family, s).cl[s.bits], s.universe)
    return _schema.evaluate_form(s, _rules(family, s).closure)


def interior(family: KappaFamily, s: SetExpr) -> SetExpr:
    return complement(closure(family, complement(s)))


def adherence(family: Explicit, s: FiniteMask) -> FiniteMask:
    """Points all of whose open neighbourhoods meet ``s``."""
    out = 0
    for x in range(s.universe.size):
        bit = 1 << x
        if all(g & s.bits for g in family.open_sets if g & bit):
            out |= bit
    return FiniteMask(out, s.universe)


def is_topology(family: KappaFamily, universe: Universe) -> bool:
    """Closed under arbitrary unions (always so on a finite carrier)."""
    if isinstance(family, Explicit):
        return True
    return _schema.rules_for(family, universe).is_topology


# -------------------------------------------------------------- enumeration


def _preorders(n: int) -> Iterator[list[int]]:
    """Reflexive transitive relations as ``up[x]`` = bitmask of points above x."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    for code in range(1 << len(pairs)):
        up = [1 << x for x in range(n)]
        for k, (x, y) in enumerate(pairs):
            if code >> k & 1:
                up[x] |= 1 << y
        if all(
            up[y] & ~up[x] == 0 for x in range(n) for y in range(n) if up[x] >> y & 1
        ):
            yield up


def enumerate_sigma_structures(n: int) -> list[Explicit]:
    """Every σ-structure on ``n`` labelled points, in canonical order.

    On a finite carrier σ-structures are exactly topologies, which correspond
    one-to-one with preorders (open sets = up-closed sets).  Families are
    ordered lexicographically by their sorted mask tuples.
    """
    if not 1 <= n <= MAX_ENUMERATION_POINTS:
        raise ValueError(f"enumeration supports 1..{MAX_ENUMERATION_POINTS} points, got {n}")
    return list(_enumerate(n))


def _enumerate(n: int) -> tuple[Explicit, ...]:
    if n not in _ENUM_CACHE:
        _ENUM_CACHE[n] = _build_enumeration(n)
    return _ENUM_CACHE[n]


def _build_enumeration(n: int) -> tuple[Explicit, ...]:
    families = set()
    for up in _preorders(n):
        opens = tuple(
            m
            for m in range(1 << n)
            if all(up[x] & ~m == 0 for x in range(n) if m >> x & 1)
        )
        families.add(opens)
    return tuple(Explicit(f) for f in sorted(families))


_ENUM_CACHE: dict[int, tuple[Explicit, ...]] = {}


def enumeration_labels(n: int) -> tuple[str, ...]:
    return tuple("abcd"[:n])
