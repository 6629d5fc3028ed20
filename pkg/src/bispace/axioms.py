"""Pairwise separation axioms and auxiliary bispace properties.

Point-level axioms reduce to singleton semi-kernels and semi-closures:
a semi-κᵢ-open set contains ``x`` and misses ``y`` exactly when ``y`` lies
outside ``sker_i({x})``.  On the symbolic carrier the points are the
declared atoms plus two generic bulk points, which represent every other
point because the schemas cannot tell bulk points apart.

T₀ and T₁ use the unordered-pair reading: a pair passes if either
assignment of its points to the roles ``x``, ``y`` of the definition works.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations, permutations

from . import _schema
from ._finite import ORDERS, meet_closure
from .kappa import Bispace
from .semi import GENERIC
from .sgstar import SgIndex, sg_closed_type
from .universe import Indeterminate, Kind

GENERIC_PAIR = (GENERIC, GENERIC + "′")


class _Points:
    """Singleton-level queries shared by the finite and symbolic paths."""

    def __init__(self, bispace: Bispace):
        self.bispace = bispace
        if bispace.finite:
            self.t = bispace.tables
            self.points = list(range(bispace.universe.size))
        else:
            u = bispace.universe
            self.atom_set = u.atom_set | frozenset(GENERIC_PAIR)
            self.points = list(u.atoms) + list(GENERIC_PAIR)
            self.rules = {i: bispace.rules(i, self.atom_set) for i in (1, 2)}

    def _single(self, i: int, x, rule: str) -> tuple[frozenset, Kind]:
        t = (frozenset({x}), Kind.EMPTY)
        form = getattr(self.rules[i], rule)(t)
        return _schema.apply_form_type(form, t, self.atom_set)

    def in_kernel(self, i: int, x, y) -> bool:
        """``y`` belongs to ``sker_i({x})``: no semi-κᵢ-open set holds x but not y."""
        if self.bispace.finite:
            return bool(self.t.sker(i, 1 << x) >> y & 1)
        return y in self._single(i, x, "semi_kernel")[0]

    def in_closure(self, i: int, x, y) -> bool:
        """``y`` belongs to ``scl_i({x})``."""
        if self.bispace.finite:
            return bool(self.t.scl(i, 1 << x) >> y & 1)
        return y in self._single(i, x, "semi_closure")[0]

    def closure_in_kernel(self, j: int, i: int, x) -> bool:
        if self.bispace.finite:
            cl, ker = self.t.scl(j, 1 << x), self.t.sker(i, 1 << x)
            return cl & ~ker == 0
        cl, ker = self._single(j, x, "semi_closure"), self._single(i, x, "semi_kernel")
        return cl[0] <= ker[0] and (cl[1] is not Kind.FULL or ker[1] is Kind.FULL)

    def singleton_sg(self, j: int, i: int, x) -> bool:
        if self.bispace.finite:
            return self.t.is_sg(j, i, 1 << x)
        return sg_closed_type(self.bispace, SgIndex(j, i), (frozenset({x}), Kind.EMPTY), self.atom_set)

    def sep(self, i: int, x, y) -> bool:
        return not self.in_kernel(i, x, y)

    def distinct_pairs(self):
        return combinations(self.points, 2)


def _types(bispace: Bispace) -> list:
    return _schema.all_types(bispace.universe.atom_set)


# ------------------------------------------------------------ point axioms


def is_pairwise_semi_T0(bispace: Bispace) -> bool:
    p = _Points(bispace)
    return all(
        p.sep(1, x, y) or p.sep(2, y, x) or p.sep(1, y, x) or p.sep(2, x, y)
        for x, y in p.distinct_pairs()
    )


def is_pairwise_semi_T1(bispace: Bispace) -> bool:
    p = _Points(bispace)
    return all(
        (p.sep(1, x, y) and p.sep(2, y, x)) or (p.sep(1, y, x) and p.sep(2, x, y))
        for x, y in p.distinct_pairs()
    )


def is_pairwise_semi_T1_ordered(bispace: Bispace) -> bool:
    """The directional alternative: every ordered pair needs its own U and V."""
    p = _Points(bispace)
    return all(p.sep(1, x, y) and p.sep(2, y, x) for x, y in permutations(p.points, 2))


def is_semi_T0_space(bispace: Bispace, i: int) -> bool:
    """Semi-T₀ of the single structure κᵢ."""
    p = _Points(bispace)
    return all(p.sep(i, x, y) or p.sep(i, y, x) for x, y in p.distinct_pairs())


def is_pairwise_semi_R0(bispace: Bispace) -> bool:
    """Every semi-κᵢ-open U containing x contains ``scl_j({x})``."""
    p = _Points(bispace)
    return all(p.closure_in_kernel(j, i, x) for i, j in ORDERS for x in p.points)


def is_pairwise_semi_symmetric(bispace: Bispace) -> bool:
    p = _Points(bispace)
    return all(
        not p.in_closure(i, y, x) or p.in_closure(j, x, y)
        for i, j in ORDERS
        for x, y in permutations(p.points, 2)
    )


def is_pairwise_strongly_semi_symmetric(bispace: Bispace) -> bool:
    p = _Points(bispace)
    return all(p.singleton_sg(j, i, x) for j, i in ORDERS for x in p.points)


# ---------------------------------------------------------- set properties


def is_pairwise_semi_Tw(bispace: Bispace) -> bool:
    """Every (j-i)sg*-closed set is semi-κᵢ-closed, both index orders."""
    if bispace.finite:
        t = bispace.tables
        return all(
            t.sc(i, m) for j, i in ORDERS for m in range(t.size) if t.is_sg(j, i, m)
        )
    return all(
        bispace.rules(i).is_semi_closed(s)
        for j, i in ORDERS
        for s in _types(bispace)
        if sg_closed_type(bispace, SgIndex(j, i), s)
    )


def is_pairwise_semi_door(bispace: Bispace) -> bool:
    """Every set that is not semi-κᵢ-closed is semi-κⱼ-open."""
    if bispace.finite:
        t = bispace.tables
        return all(t.sc(i, m) or t.so(j, m) for i, j in ORDERS for m in range(t.size))
    return all(
        bispace.rules(i).is_semi_closed(s) or bispace.rules(j).is_semi_open(s)
        for i, j in ORDERS
        for s in _types(bispace)
    )


def condition_C(bispace: Bispace, i: int) -> bool:
    """Arbitrary intersections of κᵢ-closed sets are semi-κᵢ-closed."""
    if bispace.finite:
        k = bispace.tables.k[i]
        return all(k.sc_flags[m] for m in meet_closure(k.closed))
    rules = bispace.rules(i)
    return all(rules.is_semi_closed(s) for s in _types(bispace) if rules.closed_meet(s))


def sc_equals_so(bispace: Bispace) -> bool:
    """κᵢ-s.c.(X) = κⱼ-s.o.(X) for both index orders."""
    if bispace.finite:
        t = bispace.tables
        return all(t.k[i].sc == t.k[j].so for i, j in ORDERS)
    return all(
        bispace.rules(i).is_semi_closed(s) == bispace.rules(j).is_semi_open(s)
        for i, j in ORDERS
        for s in _types(bispace)
    )


# ---------------------------------------------------------------- profile


@dataclass(frozen=True)
class AxiomProfile:
    """All axioms of one bispace; ``None`` marks an unforced symbolic answer."""

    semi_T0: bool | None
    semi_T1: bool | None
    semi_R0: bool | None
    semi_Tw: bool | None
    semi_symmetric: bool | None
    strongly_semi_symmetric: bool | None
    semi_door: bool | None
    condition_C_1: bool | None
    condition_C_2: bool | None
    sc_eq_so: bool | None

    def as_dict(self) -> dict[str, bool | None]:
        return asdict(self)


# short names used by the search predicate language and compact reports
PROFILE_KEYS = {
    "T0": "semi_T0",
    "T1": "semi_T1",
    "R0": "semi_R0",
    "Tw": "semi_Tw",
    "sym": "semi_symmetric",
    "ssym": "strongly_semi_symmetric",
    "door": "semi_door",
    "C1": "condition_C_1",
    "C2": "condition_C_2",
    "sceqso": "sc_eq_so",
}


def _guarded(fn, *args) -> bool | None:
    try:
        return fn(*args)
    except Indeterminate:
        return None


def axiom_profile(bispace: Bispace) -> AxiomProfile:
    profile = AxiomProfile(
        semi_T0=_guarded(is_pairwise_semi_T0, bispace),
        semi_T1=_guarded(is_pairwise_semi_T1, bispace),
        semi_R0=_guarded(is_pairwise_semi_R0, bispace),
        semi_Tw=_guarded(is_pairwise_semi_Tw, bispace),
        semi_symmetric=_guarded(is_pairwise_semi_symmetric, bispace),
        strongly_semi_symmetric=_guarded(is_pairwise_strongly_semi_symmetric, bispace),
        semi_door=_guarded(is_pairwise_semi_door, bispace),
        condition_C_1=_guarded(condition_C, bispace, 1),
        condition_C_2=_guarded(condition_C, bispace, 2),
        sc_eq_so=_guarded(sc_equals_so, bispace),
    )
    if profile.semi_T1 and profile.semi_T0 is False:
        raise AssertionError("profile has pairwise semi-T1 without semi-T0")
    return profile
