"""Executable registry of the paper's claims over finite bispaces.

Each claim enumerates *instances* (index orders, subsets, points) of one
bispace in canonical order and tests each with ``holds``.  Instances are
plain dicts: ``i``/``j`` are structure indices, ``x``/``y``/``p``/``q`` point
indices, every other key a subset bitmask.  A counterexample is the first
failing instance; re-running ``holds`` on it must return ``False``.

Conventions: ``(j, i)`` pairs name an sg* index with open side ``j`` and
closed side ``i``, matching the paper's ``(j-i)sg*`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .. import axioms
from .._finite import ORDERS, FiniteBispace, meet_closure
from ..kappa import Bispace

Instance = dict[str, int]
POINT_KEYS = frozenset("xypq")
INDEX_KEYS = frozenset("ij")


class UnknownClaim(KeyError):
    pass


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    shape: str  # "bispace" | "subset" | "pair" | "point"
    instances: Callable[[Bispace], Iterable[Instance]]
    holds: Callable[[Bispace, Instance], bool]
    kind: str = "paper"  # "paper" | "reading" (alternative encoding) | "invariant"

    def counterexample(self, b: Bispace) -> Instance | None:
        return next((inst for inst in self.instances(b) if not self.holds(b, inst)), None)


CLAIMS: dict[str, Claim] = {}


def _register(cid: str, statement: str, shape: str, instances, kind: str = "paper"):
    def wrap(fn):
        CLAIMS[cid] = Claim(cid, statement, shape, instances, fn, kind)
        return fn

    return wrap


def get_claim(cid: str) -> Claim:
    try:
        return CLAIMS[cid]
    except KeyError:
        raise UnknownClaim(cid) from None


def claim_ids(kind: str = "paper") -> list[str]:
    return [c.id for c in CLAIMS.values() if c.kind == kind]


# ----------------------------------------------------------------- helpers


def _memo(t: FiniteBispace, key, fn):
    cache = t.__dict__.setdefault("_claim_memo", {})
    if key not in cache:
        cache[key] = fn()
    return cache[key]


def _subsets(b: Bispace) -> range:
    return range(b.tables.size)


def _points(b: Bispace) -> range:
    return range(b.tables.n)


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _all_sg(t: FiniteBispace, j: int, i: int) -> bool:
    return _memo(t, ("all_sg", j, i), lambda: all(t.is_sg(j, i, m) for m in range(t.size)))


def _profile(b: Bispace) -> axioms.AxiomProfile:
    return _memo(b.tables, "profile", lambda: axioms.axiom_profile(b))


# instance generators: subsets outer, index order inner, points last


def per_bispace(b: Bispace) -> Iterator[Instance]:
    yield {}


def per_index(b: Bispace) -> Iterator[Instance]:
    for i in (1, 2):
        yield {"i": i}


def per_order(b: Bispace) -> Iterator[Instance]:
    for j, i in ORDERS:
        yield {"j": j, "i": i}


def subset_index(b: Bispace) -> Iterator[Instance]:
    for m in _subsets(b):
        for i in (1, 2):
            yield {"B": m, "i": i}


def subset_order(b: Bispace) -> Iterator[Instance]:
    for m in _subsets(b):
        for j, i in ORDERS:
            yield {"B": m, "j": j, "i": i}


def pair_order(first: str, second: str, nested: bool = False):
    def gen(b: Bispace) -> Iterator[Instance]:
        for m1 in _subsets(b):
            for m2 in _subsets(b):
                if nested and not _sub(m1, m2):
                    continue
                for j, i in ORDERS:
                    yield {first: m1, second: m2, "j": j, "i": i}

    return gen


def point_index(b: Bispace) -> Iterator[Instance]:
    for x in _points(b):
        for i in (1, 2):
            yield {"x": x, "i": i}


def ordered_points(b: Bispace) -> Iterator[Instance]:
    for p in _points(b):
        for q in _points(b):
            if p != q:
                yield {"p": p, "q": q}


# ------------------------------------------------------------------ claims


@_register("C-T6", "semi-closure of B equals B united with its semi-derived set", "subset", subset_index)
def _t6(b: Bispace, d: Instance) -> bool:
    t, m, i = b.tables, d["B"], d["i"]
    return t.scl(i, m) == m | t.k[i].derived(m)


@_register(
    "C-T6A",
    "semi-closures are semi-closed iff every intersection of closed sets is semi-closed",
    "bispace",
    per_index,
)
def _t6a(b: Bispace, d: Instance) -> bool:
    t, i = b.tables, d["i"]
    closures_closed = all(t.sc(i, t.scl(i, m)) for m in range(t.size))
    meets_closed = all(t.sc(i, m) for m in meet_closure(t.k[i].closed))
    return closures_closed == meets_closed


@_register("C-T11", "sg*-closed iff a semi-closed F with B ⊆ F ⊆ sker_j(B) exists", "subset", subset_order)
def _t11(b: Bispace, d: Instance) -> bool:
    t = b.tables
    return t.is_sg(d["j"], d["i"], d["B"]) == t.sg_closed_by_definition(d["j"], d["i"], d["B"])


@_register(
    "C-T12",
    "sg*-open iff a semi-κᵢ-open V ⊆ B holds every semi-κⱼ-closed subset of B",
    "subset",
    subset_order,
)
def _t12(b: Bispace, d: Instance) -> bool:
    t = b.tables
    return t.sg_open(d["j"], d["i"], d["B"]) == t.sg_open_by_inner_sets(d["j"], d["i"], d["B"])


@_register(
    "C-R13a",
    "semi-κᵢ-closed sets are sg*-closed; sg*-closed semi-κⱼ-open sets are semi-κᵢ-closed",
    "subset",
    subset_order,
)
def _r13a(b: Bispace, d: Instance) -> bool:
    t, m, j, i = b.tables, d["B"], d["j"], d["i"]
    forward = not t.sc(i, m) or t.is_sg(j, i, m)
    converse = not (t.is_sg(j, i, m) and t.so(j, m)) or t.sc(i, m)
    return forward and converse


@_register("C-R13b", "if D = sker_j(D): sg*-closed iff semi-κᵢ-closed", "subset", subset_order)
def _r13b(b: Bispace, d: Instance) -> bool:
    t, m, j, i = b.tables, d["B"], d["j"], d["i"]
    return t.sker(j, m) != m or t.is_sg(j, i, m) == t.sc(i, m)


@_register(
    "C-T15",
    "an sg*-closed B has a semi-κᵢ-closed F ⊇ B with no nonempty semi-κⱼ-closed set inside F − B",
    "subset",
    subset_order,
)
def _t15(b: Bispace, d: Instance) -> bool:
    t, m, j, i = b.tables, d["B"], d["j"], d["i"]
    if not t.is_sg(j, i, m):
        return True
    return any(
        _sub(m, f) and not any(p and _sub(p, f & ~m) for p in t.k[j].sc) for f in t.k[i].sc
    )


@_register(
    "C-T17",
    "an (i-j)sg*-closed D is semi-κⱼ-closed iff scl_j(D) and scl_j(D) − D are semi-κⱼ-closed",
    "subset",
    subset_order,
)
def _t17(b: Bispace, d: Instance) -> bool:
    # here the instance's (j, i) is read as the paper's (i-j): open side j, closed side i
    t, m, open_side, closed_side = b.tables, d["B"], d["j"], d["i"]
    if not t.is_sg(open_side, closed_side, m):
        return True
    c = t.scl(closed_side, m)
    return t.sc(closed_side, m) == (t.sc(closed_side, c) and t.sc(closed_side, c & ~m))


def _t20_guard(t: FiniteBispace, j: int, i: int) -> bool:
    def compute() -> bool:
        closed = t.k[i].sc
        return all(t.is_sg(j, i, p | q) for p in closed for q in closed)

    return _memo(t, ("t20", j, i), compute)


@_register(
    "C-T20",
    "if unions of two semi-κᵢ-closed sets are sg*-closed, so are unions of two sg*-closed sets",
    "pair",
    pair_order("E", "F"),
)
def _t20(b: Bispace, d: Instance) -> bool:
    t, e, f, j, i = b.tables, d["E"], d["F"], d["j"], d["i"]
    if not (_t20_guard(t, j, i) and t.is_sg(j, i, e) and t.is_sg(j, i, f)):
        return True
    return t.is_sg(j, i, e | f)


@_register(
    "C-T22",
    "the union of two semi-κⱼ-separated sg*-open sets is sg*-open",
    "pair",
    pair_order("E", "F"),
)
def _t22(b: Bispace, d: Instance) -> bool:
    t, e, f, j, i = b.tables, d["E"], d["F"], d["j"], d["i"]
    if not (t.sg_open(j, i, e) and t.sg_open(j, i, f) and t.k[j].separated(e, f)):
        return True
    return t.sg_open(j, i, e | f)


@_register(
    "C-T23",
    "if {x} is not semi-κᵢ-closed then its complement is (i-j)sg*-closed",
    "point",
    point_index,
)
def _t23(b: Bispace, d: Instance) -> bool:
    t, x, i = b.tables, d["x"], d["i"]
    single = 1 << x
    return t.sc(i, single) or t.is_sg(i, 3 - i, t.full ^ single)


def _separates_by_listed_set(t: FiniteBispace, x: int, y: int) -> bool:
    bx, by = 1 << x, 1 << y
    for m in range(t.size):
        if bool(m & bx) != bool(m & by):
            if any(t.so(k, m) or t.sc(k, m) for k in (1, 2)):
                return True
    return False


@_register(
    "C-T24",
    "pairwise semi-T0 iff each pair is split by a set that is semi-κᵢ-open or semi-κⱼ-closed",
    "bispace",
    per_bispace,
)
def _t24(b: Bispace, d: Instance) -> bool:
    t = b.tables
    split = all(
        _separates_by_listed_set(t, x, y) for x in range(t.n) for y in range(x + 1, t.n)
    )
    return _profile(b).semi_T0 == split


@_register(
    "C-T27",
    "in a pairwise semi-T0 bispace p ∉ scl_1({q}) or q ∉ scl_2({p}) for distinct p, q",
    "point",
    ordered_points,
)
def _t27(b: Bispace, d: Instance) -> bool:
    t, p, q = b.tables, d["p"], d["q"]
    if not _profile(b).semi_T0:
        return True
    return not (t.scl(1, 1 << q) >> p & 1) or not (t.scl(2, 1 << p) >> q & 1)


@_register(
    "C-T28",
    "in a pairwise semi-T0 bispace scl_2({p}) ≠ scl_1({q}) for distinct p, q",
    "point",
    ordered_points,
)
def _t28(b: Bispace, d: Instance) -> bool:
    t, p, q = b.tables, d["p"], d["q"]
    return not _profile(b).semi_T0 or t.scl(2, 1 << p) != t.scl(1, 1 << q)


@_register("C-T29", "pairwise semi-T0 and semi-R0 imply pairwise semi-T1", "bispace", per_bispace)
def _t29(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    return not (pr.semi_T0 and pr.semi_R0) or pr.semi_T1


@_register("C-T32", "pairwise semi-symmetric and semi-T0 imply pairwise semi-T1", "bispace", per_bispace)
def _t32(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    return not (pr.semi_symmetric and pr.semi_T0) or pr.semi_T1


def _singletons_door(t: FiniteBispace) -> bool:
    return all(
        t.sc(i, 1 << x) or t.so(j, 1 << x) for i, j in ORDERS for x in range(t.n)
    )


def _g_equal(t: FiniteBispace) -> bool:
    return all(t.g_family(i) == t.g_prime_family(i) for i in (1, 2))


@_register(
    "C-T35",
    "pairwise semi-Tw iff non-semi-κᵢ-closed singletons are semi-κⱼ-open and G_i = G_i′",
    "bispace",
    per_bispace,
)
def _t35(b: Bispace, d: Instance) -> bool:
    t = b.tables
    return _profile(b).semi_Tw == (_singletons_door(t) and _g_equal(t))


def _combined_meet(t: FiniteBispace, i: int, j: int, m: int) -> int:
    out = t.full
    for f in range(t.size):
        if _sub(m, f) and (t.sc(i, f) or t.so(j, f)):
            out &= f
    return out


@_register(
    "C-T36",
    "pairwise semi-Tw iff each set is the meet of its semi-κᵢ-closed and semi-κⱼ-open supersets, and G_i = G_i′",
    "bispace",
    per_bispace,
)
def _t36(b: Bispace, d: Instance) -> bool:
    t = b.tables
    meets = all(
        _combined_meet(t, i, j, m) == m for i, j in ORDERS for m in range(t.size)
    )
    return _profile(b).semi_Tw == (meets and _g_equal(t))


@_register("C-DOOR", "a pairwise semi-door bispace is pairwise semi-Tw", "bispace", per_bispace)
def _door(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    return not pr.semi_door or pr.semi_Tw


@_register("C-T39", "a pairwise semi-Tw bispace is pairwise semi-T0", "bispace", per_bispace)
def _t39(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    return not pr.semi_Tw or pr.semi_T0


@_register(
    "C-T41",
    "a pairwise strongly semi-symmetric bispace is pairwise semi-symmetric",
    "bispace",
    per_bispace,
)
def _t41(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    return not pr.strongly_semi_symmetric or pr.semi_symmetric


@_register(
    "C-T60",
    "in a pairwise semi-Tw bispace non-semi-κᵢ-closed singletons are semi-κⱼ-open and κᵢ-s.o. = κ(i-j)-s.o.*",
    "bispace",
    per_bispace,
)
def _t60(b: Bispace, d: Instance) -> bool:
    t = b.tables
    if not _profile(b).semi_Tw:
        return True
    return _singletons_door(t) and all(
        frozenset(t.k[i].so) == t.star_family(i) for i in (1, 2)
    )


@_register(
    "C-T61",
    "if C is sg*-closed and C ⊆ D ⊆ scl_i(C) then D is sg*-closed",
    "pair",
    pair_order("C", "D", nested=True),
)
def _t61(b: Bispace, d: Instance) -> bool:
    t, c, dd, j, i = b.tables, d["C"], d["D"], d["j"], d["i"]
    if not (t.is_sg(j, i, c) and _sub(dd, t.scl(i, c))):
        return True
    return t.is_sg(j, i, dd)


def _relative(t: FiniteBispace, b_mask: int):
    return _memo(t, ("sub", b_mask), lambda: t.subspace(b_mask))


@_register(
    "C-T62",
    "for C ⊆ B with B semi-κⱼ-open and sg*-closed, C is sg*-closed iff it is sg*-closed relative to B",
    "pair",
    pair_order("C", "B", nested=True),
)
def _t62(b: Bispace, d: Instance) -> bool:
    t, c, bm, j, i = b.tables, d["C"], d["B"], d["j"], d["i"]
    if not bm or not (t.so(j, bm) and t.is_sg(j, i, bm)):
        return True
    sub, squeeze = _relative(t, bm)
    return t.is_sg(j, i, c) == sub.is_sg(j, i, squeeze(c))


@_register(
    "C-C63",
    "if B is semi-κⱼ-open and sg*-closed and C is sg*-closed, then B ∩ C is sg*-closed",
    "pair",
    pair_order("B", "C"),
)
def _c63(b: Bispace, d: Instance) -> bool:
    t, bm, c, j, i = b.tables, d["B"], d["C"], d["j"], d["i"]
    if not (t.so(j, bm) and t.is_sg(j, i, bm) and t.is_sg(j, i, c)):
        return True
    return t.is_sg(j, i, bm & c)


@_register(
    "C-T64",
    "if every subset is (j-i)sg*-closed then κᵢ-s.c. = κⱼ-s.o.",
    "bispace",
    per_order,
)
def _t64(b: Bispace, d: Instance) -> bool:
    t, j, i = b.tables, d["j"], d["i"]
    return not _all_sg(t, j, i) or t.k[i].sc == t.k[j].so


@_register(
    "C-T66",
    "if κᵢ-s.c. = κⱼ-s.o., every subset is (j-i)sg*-closed iff condition (C) holds for κᵢ",
    "bispace",
    per_order,
)
def _t66(b: Bispace, d: Instance) -> bool:
    t, j, i = b.tables, d["j"], d["i"]
    if t.k[i].sc != t.k[j].so:
        return True
    return _all_sg(t, j, i) == axioms.condition_C(b, i)


@_register(
    "C-C43",
    "a pairwise strongly semi-symmetric semi-Tw bispace is pairwise semi-T1",
    "bispace",
    per_bispace,
)
def _c43(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    return not (pr.strongly_semi_symmetric and pr.semi_Tw) or pr.semi_T1


@_register(
    "C-R25",
    "a semi-T0 structure makes the bispace pairwise semi-T0; pairwise semi-T1 implies semi-T0",
    "bispace",
    per_bispace,
)
def _r25(b: Bispace, d: Instance) -> bool:
    pr = _profile(b)
    some_t0 = axioms.is_semi_T0_space(b, 1) or axioms.is_semi_T0_space(b, 2)
    return (not some_t0 or pr.semi_T0) and (not pr.semi_T1 or pr.semi_T0)


# -------------------------------------------------------------- invariants


@_register(
    "INV-DUAL",
    "semi-closed sets are exactly the F with int(K) ⊆ F ⊆ K for some closed K",
    "subset",
    subset_index,
    kind="invariant",
)
def _inv_dual(b: Bispace, d: Instance) -> bool:
    k, m = b.tables.k[d["i"]], d["B"]
    direct = any(_sub(k.interior(c), m) and _sub(m, c) for c in k.closed)
    return k.sc_flags[m] == direct


@_register(
    "INV-KER",
    "the semi-kernel is extensive and idempotent",
    "subset",
    subset_index,
    kind="invariant",
)
def _inv_ker(b: Bispace, d: Instance) -> bool:
    t, m, i = b.tables, d["B"], d["i"]
    ker = t.sker(i, m)
    return _sub(m, ker) and t.sker(i, ker) == ker


# ------------------------------------------------------ alternative readings


def unordered_points(b: Bispace) -> Iterator[Instance]:
    for p in _points(b):
        for q in _points(b):
            if p < q:
                yield {"p": p, "q": q}


@_register(
    "ALT-T27",
    "C-T27 with the points of each pair assignable to the roles p, q either way",
    "point",
    unordered_points,
    kind="reading",
)
def _alt_t27(b: Bispace, d: Instance) -> bool:
    p, q = d["p"], d["q"]
    return _t27(b, {"p": p, "q": q}) or _t27(b, {"p": q, "q": p})


@_register(
    "ALT-T28",
    "C-T28 with the points of each pair assignable to the roles p, q either way",
    "point",
    unordered_points,
    kind="reading",
)
def _alt_t28(b: Bispace, d: Instance) -> bool:
    p, q = d["p"], d["q"]
    return _t28(b, {"p": p, "q": q}) or _t28(b, {"p": q, "q": p})


@_register(
    "ALT-T64",
    "C-T64 with the hypothesis required for both index orders",
    "bispace",
    per_order,
    kind="reading",
)
def _alt_t64(b: Bispace, d: Instance) -> bool:
    t, j, i = b.tables, d["j"], d["i"]
    both = all(_all_sg(t, jj, ii) for jj, ii in ORDERS)
    return not both or t.k[i].sc == t.k[j].so


@_register(
    "ALT-T36",
    "C-T36 with (i) read as two separate meets: semi-κᵢ-closed supersets, then semi-κⱼ-open supersets",
    "bispace",
    per_bispace,
    kind="reading",
)
def _alt_t36(b: Bispace, d: Instance) -> bool:
    t = b.tables
    meets = all(
        t.scl(i, m) & t.sker(j, m) == m for i, j in ORDERS for m in range(t.size)
    )
    return _profile(b).semi_Tw == (meets and _g_equal(t))
