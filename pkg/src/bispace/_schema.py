"""Closed-form rules for schema families on the symbolic carrier.

Every rule here takes an exact set type ``(atoms, kind)`` and answers for
all sets of that type at once.  This works because a schema only mentions
finitely many atoms and otherwise looks at countability, so every notion
built from it is invariant under permutations of the bulk.

Set-valued rules return a :class:`Form` describing the result in terms of
the argument (``S``, ``S | R``, ``X``, ``X - R``).  Applying the same form to
every concretization of a classified set gives a sound classified result.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, TypeVar

from .universe import (
    CoFinite,
    ExplicitSmall,
    Indeterminate,
    Kind,
    SetType,
    SymbolicSet,
    SymbolicUniverse,
    concretizations,
    type_complement,
    union,
)

T = TypeVar("T")


@dataclass(frozen=True)
class Form:
    kind: str  # "empty" | "full" | "union" | "cofinite"
    atoms: frozenset = frozenset()


EMPTY = Form("empty")
FULL = Form("full")
SELF = Form("union")


def join(atoms: Iterable[str]) -> Form:
    return Form("union", frozenset(atoms))


def apply_form(form: Form, s: SymbolicSet) -> SymbolicSet:
    u = s.universe
    if form.kind == "empty":
        return u.empty
    if form.kind == "full":
        return u.whole
    if form.kind == "cofinite":
        return CoFinite(form.atoms, u)
    if not form.atoms:
        return s
    return union(s, ExplicitSmall(form.atoms, u))


def apply_form_type(form: Form, t: SetType, atom_set: frozenset) -> SetType:
    if form.kind == "empty":
        return (frozenset(), Kind.EMPTY)
    if form.kind == "full":
        return (atom_set, Kind.FULL)
    if form.kind == "cofinite":
        return (atom_set - form.atoms, Kind.FULL)
    return (t[0] | form.atoms, t[1])


def all_types(atom_set: frozenset) -> list[SetType]:
    atoms = sorted(atom_set)
    out = []
    for r in range(len(atoms) + 1):
        for combo in combinations(atoms, r):
            for k in Kind:
                out.append((frozenset(combo), k))
    return out


def countable(t: SetType) -> bool:
    return t[1] in (Kind.EMPTY, Kind.COUNTABLE)


def cocountable(t: SetType) -> bool:
    return t[1] in (Kind.COCOUNTABLE, Kind.FULL)


class SchemaRules:
    """Rules for one schema over a fixed atom set.

    ``atom_set`` may contain atoms the schema never mentions (for instance
    generic representatives of bulk points); they behave like bulk points.
    """

    def __init__(self, required, excluded, count: bool, cocount: bool, atom_set: frozenset):
        self.rq = frozenset(required)
        self.ex = frozenset(excluded)
        self.count = count
        self.cocount = cocount
        self.atoms = frozenset(atom_set)

    # -- basic predicates

    def empty(self, t: SetType) -> bool:
        return not t[0] and t[1] is Kind.EMPTY

    def full(self, t: SetType) -> bool:
        return t[0] == self.atoms and t[1] is Kind.FULL

    def comp(self, t: SetType) -> SetType:
        return type_complement(t, self.atoms)

    @property
    def is_topology(self) -> bool:
        # With a countable generator, an arbitrary union of singletons
        # off the excluded atoms is a both-big set that is never open.
        return not self.count

    def is_open(self, t: SetType) -> bool:
        if self.empty(t) or self.full(t):
            return True
        if self.count and countable(t) and self.rq <= t[0] and not t[0] & self.ex:
            return True
        if self.cocount and cocountable(t):
            return True
        if not self.count and not self.cocount:
            return t == (self.rq, Kind.EMPTY)
        return False

    def is_closed(self, t: SetType) -> bool:
        return self.is_open(self.comp(t))

    def closure(self, t: SetType) -> Form:
        if self.empty(t):
            return EMPTY
        if self.count and not self.cocount:
            return FULL if t[0] & self.rq else join(self.ex)
        if self.cocount:
            if countable(t):
                return SELF
            return join(self.ex) if self.count else FULL
        return FULL if t[0] & self.rq else Form("cofinite", self.rq)

    # -- semi-open structure

    def is_semi_open(self, t: SetType) -> bool:
        if self.empty(t) or self.full(t):
            return True
        if self.cocount:
            return self.is_open(t)
        if self.rq:
            return self.rq <= t[0]
        off_excluded = bool(t[0] - self.ex) or t[1] is not Kind.EMPTY
        return countable(t) and off_excluded

    def is_semi_closed(self, t: SetType) -> bool:
        return self.is_semi_open(self.comp(t))

    def semi_closure(self, t: SetType) -> Form:
        if self.empty(t):
            return EMPTY
        if self.cocount:
            return self.closure(t)
        if self.rq:
            return FULL if t[0] & self.rq else SELF
        covers = t[1] is Kind.FULL and t[0] | self.ex == self.atoms
        return FULL if covers else SELF

    def semi_kernel(self, t: SetType) -> Form:
        if self.empty(t):
            return EMPTY
        if self.cocount:
            return SELF
        if self.rq:
            return join(self.rq)
        return SELF if countable(t) else FULL

    def closed_meet(self, t: SetType) -> bool:
        """Is a set of type ``t`` an intersection of some family of closed sets?"""
        if self.empty(t) or self.full(t):
            return True
        if self.count and not self.cocount:
            return not t[0] & self.rq and self.ex <= t[0]
        if self.cocount:
            return countable(t) or (self.count and self.ex <= t[0])
        return t == (self.atoms - self.rq, Kind.FULL)


def decide(s: SymbolicSet, pred: Callable[[SetType], T]) -> T:
    """Evaluate a type predicate on a classified set; must agree on all types."""
    answers = {pred(t) for t in concretizations(s)}
    if len(answers) != 1:
        raise Indeterminate(f"answer not forced for {s!r}")
    return answers.pop()


def evaluate_form(s: SymbolicSet, rule: Callable[[SetType], Form]) -> SymbolicSet:
    return apply_form(decide(s, rule), s)


def rules_for(schema, universe: SymbolicUniverse, atom_set: frozenset | None = None) -> SchemaRules:
    return SchemaRules(
        schema.required,
        schema.excluded,
        schema.countable,
        schema.cocountable,
        universe.atom_set if atom_set is None else atom_set,
    )

