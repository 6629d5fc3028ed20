"""Semi-open structure of a bispace.

``i`` always names the structure (1 or 2).  Finite bispaces answer from
precomputed bitmask tables; symbolic ones from the schema rules, raising
:class:`~bispace.universe.Indeterminate` when a classified argument does
not force the answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _schema
from .kappa import Bispace
from .universe import (
    Abstract,
    CoFinite,
    ExplicitSmall,
    FiniteMask,
    Indeterminate,
    Kind,
    SetExpr,
    complement,
    intersect,
    is_empty,
)

# stands for an arbitrary bulk point of the symbolic carrier
GENERIC = "‹g›"


def _idx(i: int) -> int:
    if i not in (1, 2):
        raise ValueError(f"structure index must be 1 or 2, got {i}")
    return i


def _check(bispace: Bispace, s: SetExpr) -> None:
    if s.universe != bispace.universe:
        raise ValueError("set does not belong to this bispace's carrier")


def is_semi_open(bispace: Bispace, i: int, s: SetExpr) -> bool:
    _check(bispace, s)
    if bispace.finite:
        return bispace.tables.so(_idx(i), s.bits)
    return _schema.decide(s, bispace.rules(_idx(i)).is_semi_open)


def is_semi_closed(bispace: Bispace, i: int, s: SetExpr) -> bool:
    return is_semi_open(bispace, i, complement(s))


def semi_closure(bispace: Bispace, i: int, s: SetExpr) -> SetExpr:
    """Intersection of all semi-closed supersets (need not be semi-closed)."""
    _check(bispace, s)
    if bispace.finite:
        return FiniteMask(bispace.tables.scl(_idx(i), s.bits), s.universe)
    return _schema.evaluate_form(s, bispace.rules(_idx(i)).semi_closure)


def semi_interior(bispace: Bispace, i: int, s: SetExpr) -> SetExpr:
    return complement(semi_closure(bispace, i, complement(s)))


def semi_kernel(bispace: Bispace, i: int, s: SetExpr) -> SetExpr:
    """Intersection of all semi-open supersets."""
    _check(bispace, s)
    if bispace.finite:
        return FiniteMask(bispace.tables.sker(_idx(i), s.bits), s.universe)
    return _schema.evaluate_form(s, bispace.rules(_idx(i)).semi_kernel)


def semi_derived(bispace: Bispace, i: int, s: SetExpr) -> SetExpr:
    """Semi-limit points of ``s``.

    Symbolic carriers support exact arguments only; the bulk points of an
    exact set all behave alike, so one generic representative decides them.
    """
    _check(bispace, s)
    if bispace.finite:
        return FiniteMask(bispace.tables.k[_idx(i)].derived(s.bits), s.universe)
    if isinstance(s, Abstract):
        raise Indeterminate("semi-derived sets of classified sets are not supported")
    u = s.universe
    ext = u.extended([GENERIC])
    rules = bispace.rules(_idx(i), ext.atom_set)
    if isinstance(s, ExplicitSmall):
        members, bulk = s.members, Kind.EMPTY
    else:
        members, bulk = (u.atom_set - s.missing) | {GENERIC}, Kind.FULL

    def limit(x: str) -> bool:
        t = (frozenset(members - {x}), bulk)
        closed = _schema.apply_form_type(rules.semi_closure(t), t, ext.atom_set)
        return x in closed[0]

    atoms_in = frozenset(a for a in u.atoms if limit(a))
    if limit(GENERIC):
        return CoFinite(u.atom_set - atoms_in, u)
    return ExplicitSmall(atoms_in, u)


def are_semi_separated(bispace: Bispace, i: int, e: SetExpr, f: SetExpr) -> bool:
    """Semi-open G containing e and H containing f with e, H and f, G disjoint."""
    _check(bispace, e)
    _check(bispace, f)
    if bispace.finite:
        return bispace.tables.k[_idx(i)].separated(e.bits, f.bits)
    return _reaches(bispace, i, e, f) and _reaches(bispace, i, f, e)


def _reaches(bispace: Bispace, i: int, e: SetExpr, f: SetExpr) -> bool:
    # every semi-open superset of e contains its semi-kernel
    ker = semi_kernel(bispace, i, e)
    disjoint = is_empty(intersect(ker, f))
    if disjoint is None:
        raise Indeterminate("cannot decide whether the semi-kernel meets the other set")
    if not disjoint:
        return False
    if is_semi_open(bispace, i, ker):
        return True
    raise Indeterminate("semi-kernel is not semi-open; no canonical separating set")


@dataclass(frozen=True)
class SemiFamily:
    """Semi-open sets of one structure: materialized when finite."""

    bispace: Bispace
    index: int

    @property
    def members(self) -> list[FiniteMask] | None:
        if not self.bispace.finite:
            return None
        u = self.bispace.universe
        return [FiniteMask(m, u) for m in self.bispace.tables.k[self.index].so]

    def __contains__(self, s: SetExpr) -> bool:
        return is_semi_open(self.bispace, self.index, s)


def semi_open_family(bispace: Bispace, i: int) -> SemiFamily:
    return SemiFamily(bispace, _idx(i))


def semi_closed_sets(bispace: Bispace, i: int) -> list[FiniteMask]:
    if not bispace.finite:
        raise TypeError("semi-closed sets are only listed for finite bispaces")
    u = bispace.universe
    return [FiniteMask(m, u) for m in bispace.tables.k[_idx(i)].sc]

