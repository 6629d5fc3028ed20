"""(j-i)sg*-closed and sg*-open sets, sg*-closure and the families built on them.

A set B is (j-i)sg*-closed when some semi-κᵢ-closed F satisfies
``B ⊆ F ⊆ sker_j(B)``: the witness is closed on side ``i`` and the test
runs over semi-κⱼ-open supersets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _schema
from .kappa import Bispace
from .universe import (
    FiniteMask,
    Indeterminate,
    SetExpr,
    SetType,
    complement,
    concretizations,
)


class InvariantViolation(AssertionError):
    """Two independent computations of the same notion disagreed."""


@dataclass(frozen=True)
class SgIndex:
    open_side: int
    closed_side: int

    def __post_init__(self) -> None:
        if {self.open_side, self.closed_side} != {1, 2}:
            raise ValueError(f"need one side 1 and the other 2, got {self}")

    @classmethod
    def closed_on(cls, i: int) -> SgIndex:
        return cls(3 - i, i)

    def __str__(self) -> str:
        return f"({self.open_side}-{self.closed_side})"


def _finite_bits(bispace: Bispace, s: SetExpr) -> int:
    if not bispace.finite:
        raise TypeError("operation defined for finite bispaces only")
    if s.universe != bispace.universe:
        raise ValueError("set does not belong to this bispace's carrier")
    return s.bits


# ----------------------------------------------------------- symbolic side


def _type_witness(bispace: Bispace, idx: SgIndex, t: SetType, atom_set=None) -> _schema.Form | None:
    """Witness form for one exact type, or None when not sg*-closed."""
    kernel = bispace.rules(idx.open_side, atom_set).semi_kernel(t)
    closed_rules = bispace.rules(idx.closed_side, atom_set)
    if kernel.kind == "empty":
        return _schema.EMPTY
    if kernel.kind == "full":
        return _schema.FULL
    spare = sorted(kernel.atoms - t[0])
    for r in range(len(spare) + 1):
        for extra in combinations(spare, r):
            f = (t[0] | frozenset(extra), t[1])
            if closed_rules.is_semi_closed(f):
                return _schema.join(extra)
    return None


def sg_closed_type(bispace: Bispace, idx: SgIndex, t: SetType, atom_set=None) -> bool:
    return _type_witness(bispace, idx, t, atom_set) is not None


# ------------------------------------------------------------------ public


def sg_star_witness(bispace: Bispace, idx: SgIndex, b: SetExpr) -> SetExpr | None:
    """A minimum-cardinality semi-κᵢ-closed F with B ⊆ F ⊆ sker_j(B), if any.

    Ties go to the smallest bitmask.  Symbolic sets get a witness only when
    every concretization admits the same one.
    """
    if bispace.finite:
        bits = _finite_bits(bispace, b)
        w = bispace.tables.sg_witness(idx.open_side, idx.closed_side, bits)
        return None if w is None else FiniteMask(w, b.universe)
    forms = {_type_witness(bispace, idx, t) for t in concretizations(b)}
    if None in forms:
        if len(forms) > 1:
            raise Indeterminate(f"sg*-closedness of {b!r} not forced")
        return None
    if len(forms) > 1:
        raise Indeterminate(f"no common sg*-witness for {b!r}")
    return _schema.apply_form(forms.pop(), b)


def is_sg_star_closed(bispace: Bispace, idx: SgIndex, b: SetExpr) -> bool:
    if bispace.finite:
        return bispace.tables.is_sg(idx.open_side, idx.closed_side, _finite_bits(bispace, b))
    return _schema.decide(b, lambda t: sg_closed_type(bispace, idx, t))


def is_sg_star_open(bispace: Bispace, idx: SgIndex, b: SetExpr) -> bool:
    """Complement is sg*-closed; finite bispaces cross-check the inner-set form."""
    by_complement = is_sg_star_closed(bispace, idx, complement(b))
    if bispace.finite:
        inner = bispace.tables.sg_open_by_inner_sets(idx.open_side, idx.closed_side, b.bits)
        if inner != by_complement:
            raise InvariantViolation(f"sg*-open{idx} of {b!r}: complement form {by_complement}, inner form {inner}")
    return by_complement


def sg_star_closure(bispace: Bispace, idx: SgIndex, d: SetExpr) -> FiniteMask:
    bits = _finite_bits(bispace, d)
    return FiniteMask(bispace.tables.sgcl(idx.open_side, idx.closed_side, bits), d.universe)


def _as_masks(bispace: Bispace, fam) -> list[FiniteMask]:
    return [FiniteMask(m, bispace.universe) for m in sorted(fam)]


def g_family(bispace: Bispace, i: int) -> list[FiniteMask]:
    """Sets whose complement has a semi-closed semi-closure."""
    if not bispace.finite:
        raise TypeError("operation defined for finite bispaces only")
    return _as_masks(bispace, bispace.tables.g_family(i))


def g_prime_family(bispace: Bispace, i: int) -> list[FiniteMask]:
    """Sets whose complement has an sg*-closed sg*-closure (other side open)."""
    if not bispace.finite:
        raise TypeError("operation defined for finite bispaces only")
    return _as_masks(bispace, bispace.tables.g_prime_family(i))


def star_semi_open_family(bispace: Bispace, i: int) -> list[FiniteMask]:
    if not bispace.finite:
        raise TypeError("operation defined for finite bispaces only")
    return _as_masks(bispace, bispace.tables.star_family(i))


def sg_star_closed_sets(bispace: Bispace, idx: SgIndex) -> list[FiniteMask]:
    if not bispace.finite:
        raise TypeError("operation defined for finite bispaces only")
    t = bispace.tables
    return _as_masks(bispace, [m for m in range(t.size) if t.is_sg(idx.open_side, idx.closed_side, m)])


__all__ = [
    "InvariantViolation",
    "SgIndex",
    "g_family",
    "g_prime_family",
    "is_sg_star_closed",
    "is_sg_star_open",
    "sg_closed_type",
    "sg_star_closed_sets",
    "sg_star_closure",
    "sg_star_witness",
    "star_semi_open_family",
]
