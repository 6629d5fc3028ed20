from __future__ import annotations

from itertools import product

import pytest

from bispace import _schema
from bispace.kappa import (
    Bispace,
    Explicit,
    InvalidFamily,
    Schema,
    adherence,
    closure,
    enumerate_sigma_structures,
    finite_bispace,
    interior,
    is_closed,
    is_open,
    is_topology,
    validate,
)
from bispace.universe import FiniteUniverse, Kind, SymbolicUniverse, kind_subset

U3 = FiniteUniverse(("a", "b", "c"))


# ------------------------------------------------------------- validation


def test_validation_reports_the_failed_axiom():
    assert validate(Explicit.from_labels(U3, [[], ["a"], ["b"], "abc"]), U3).axiom == 1
    assert validate(Explicit.from_labels(U3, [[], "ab", "bc", "abc"]), U3).axiom == 2
    assert validate(Explicit.from_labels(U3, [["a"], "abc"]), U3).axiom == 3
    assert validate(Explicit.from_labels(U3, [[], ["a"]]), U3).axiom == 3
    assert validate(Explicit((0, 1, 99)), U3).axiom == 0
    assert validate(Explicit.from_labels(U3, [[], ["a"], "abc"]), U3) is None


def test_union_violation_names_its_witnesses():
    v = validate(Explicit.from_labels(U3, [[], ["a"], ["b"], "abc"]), U3)
    assert v.witnesses == (["a"], ["b"]) and "a" in v.message and "b" in v.message


def test_bispace_construction_rejects_invalid_families():
    with pytest.raises(InvalidFamily) as exc:
        finite_bispace("abc", [[], ["a"], ["b"], "abc"], [[], "abc"])
    assert exc.value.violation.axiom == 1


def test_schema_validation():
    su = SymbolicUniverse(("x", "y"))
    assert validate(Schema({"x"}), su) is None
    assert validate(Schema({"z"}), su).axiom == 0
    assert validate(Schema({"x"}, {"x"}), su).axiom == 0
    assert validate(Schema(excluded={"x"}, countable=False, cocountable=True), su).axiom == 0
    assert validate(Schema(countable=False), su).axiom == 0
    assert validate(Schema({"x"}, cocountable=True), su).axiom == 2
    assert validate(Schema(), U3).axiom == 0
    assert validate(Explicit((0, 7)), su).axiom == 0


# ------------------------------------------------------------ enumeration


def brute_force_structures(n: int) -> list[tuple[int, ...]]:
    """Filter every family of subsets containing 0 and X."""
    full = (1 << n) - 1
    middle = list(range(1, full))
    found = []
    for code in range(1 << len(middle)):
        fam = {0, full} | {m for k, m in enumerate(middle) if code >> k & 1}
        if all(a | b in fam and a & b in fam for a, b in product(fam, fam)):
            found.append(tuple(sorted(fam)))
    return sorted(found)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_enumeration_counts_and_oracle(n, count):
    fams = enumerate_sigma_structures(n)
    assert len(fams) == count
    assert [f.open_sets for f in fams] == brute_force_structures(n)


def test_enumeration_is_in_canonical_order_and_valid():
    fams = enumerate_sigma_structures(3)
    assert [f.open_sets for f in fams] == sorted(f.open_sets for f in fams)
    assert all(validate(f, U3) is None for f in fams)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        enumerate_sigma_structures(5)
    with pytest.raises(ValueError):
        enumerate_sigma_structures(0)


# ------------------------------------------------- closure and interior


@pytest.mark.parametrize("fam", enumerate_sigma_structures(3), ids=lambda f: str(f.open_sets))
def test_closure_equals_adherence_and_interior_is_dual(fam):
    for m in range(8):
        s = U3.from_bits(m)
        cl = closure(fam, s)
        assert cl == adherence(fam, s)
        assert is_closed(fam, cl) and s.bits & ~cl.bits == 0
        inner = interior(fam, s)
        assert is_open(fam, inner)
        assert inner.bits == max(
            (g for g in fam.open_sets if g & ~m == 0), key=lambda g: bin(g).count("1")
        )


def test_finite_families_are_topologies():
    assert is_topology(Explicit((0, 7)), U3)


# ------------------------------------------------- symbolic schema rules
#
# Each closed-form rule is re-derived here from more primitive rules by
# point avoidance: a point lies outside the closure of S iff some closed
# superset of S misses it, and similarly for kernels.  A generic atom ‹g›
# stands for an arbitrary bulk point, so the bulk part of a result is full
# exactly when ‹g› (lying outside S) is captured.

SU = SymbolicUniverse(("x", "y"))
GEN = "‹g›"
ATOMS = frozenset({"x", "y", GEN})
TYPES = _schema.all_types(ATOMS)

SCHEMAS = [
    Schema({"x"}),
    Schema(excluded={"x"}),
    Schema(),
    Schema({"x"}, {"y"}),
    Schema({"x"}, countable=False),
    Schema({"x", "y"}, countable=False),
    Schema(cocountable=True),
    Schema(countable=False, cocountable=True),
    Schema(excluded={"x"}, cocountable=True),
]


def possible_superset(s, t) -> bool:
    """Does some set of type ``t`` contain a given set of type ``s``?"""
    return s[0] <= t[0] and kind_subset(s[1], t[1]) is not False


def derived_hull(t, member):
    """Atoms of the intersection of all supersets of type-``t`` sets that satisfy ``member``."""
    out = set(t[0])
    for a in ATOMS - t[0]:
        if not any(member(f) and possible_superset(t, f) and a not in f[0] for f in TYPES):
            out.add(a)
    return frozenset(out)


def check_hull(rules, t, form_rule, member):
    got = _schema.apply_form_type(form_rule(t), t, ATOMS)
    want_atoms = derived_hull(t, member)
    assert got[0] == want_atoms, (t, got)
    if GEN not in t[0] and t[1] is not Kind.FULL:
        assert (got[1] is Kind.FULL) == (GEN in want_atoms), (t, got)


def derived_semi_open(rules, t) -> bool:
    if rules.empty(t):
        return True
    for g in TYPES:
        if not (g[0] <= t[0] and rules.is_open(g)) or rules.empty(g):
            continue
        form = rules.closure(g)
        if form.kind == "full":
            ok = kind_subset(g[1], t[1]) is not False
        elif form.kind == "cofinite":
            ok = kind_subset(g[1], t[1]) is not False and not t[0] & form.atoms
        else:
            ok = g[1] is t[1] and t[0] <= g[0] | form.atoms
        if ok:
            return True
    return False


@pytest.mark.parametrize("schema", SCHEMAS, ids=repr)
def test_schema_closure_is_the_meet_of_closed_supersets(schema):
    assert validate(schema, SU) is None
    rules = _schema.rules_for(schema, SU, ATOMS)
    for t in TYPES:
        check_hull(rules, t, rules.closure, rules.is_closed)


@pytest.mark.parametrize("schema", SCHEMAS, ids=repr)
def test_schema_semi_openness_from_open_sets_and_closures(schema):
    rules = _schema.rules_for(schema, SU, ATOMS)
    for t in TYPES:
        assert rules.is_semi_open(t) == derived_semi_open(rules, t), t


@pytest.mark.parametrize("schema", SCHEMAS, ids=repr)
def test_schema_semi_closure_and_kernel_by_point_avoidance(schema):
    rules = _schema.rules_for(schema, SU, ATOMS)
    for t in TYPES:
        check_hull(rules, t, rules.semi_closure, rules.is_semi_closed)
        check_hull(rules, t, rules.semi_kernel, rules.is_semi_open)


@pytest.mark.parametrize("schema", SCHEMAS, ids=repr)
def test_generic_atoms_behave_like_bulk_points(schema):
    plain = _schema.rules_for(schema, SU)
    ext = _schema.rules_for(schema, SU, ATOMS)
    for atoms, k in _schema.all_types(SU.atom_set):
        # adding the generic atom to a set whose bulk is full changes nothing
        if k is Kind.FULL:
            assert plain.is_open((atoms, k)) == ext.is_open((atoms | {GEN}, k))
            assert plain.is_semi_open((atoms, k)) == ext.is_semi_open((atoms | {GEN}, k))
        # leaving it out of a set with empty bulk changes nothing
        if k is Kind.EMPTY:
            assert plain.is_open((atoms, k)) == ext.is_open((atoms, k))
            assert plain.is_semi_open((atoms, k)) == ext.is_semi_open((atoms, k))


def test_closed_meet_matches_its_definition():
    # S is a meet of closed sets iff no point outside S lies in every closed
    # superset; the generic atom is placed in S exactly when S's bulk is full
    for schema in SCHEMAS:
        rules = _schema.rules_for(schema, SU, ATOMS)
        for t in TYPES:
            if (GEN in t[0]) != (t[1] is Kind.FULL):
                continue
            assert rules.closed_meet(t) == (derived_hull(t, rules.is_closed) == t[0]), (schema, t)


def test_symbolic_bispace_operations():
    su = SymbolicUniverse(("r3",))
    b = Bispace(su, Schema({"r3"}), Schema())
    assert not b.finite and not is_topology(b.kappa1, su)
    assert is_open(b.kappa1, su.small({"r3"}))
    assert not is_open(b.kappa1, su.abstract({"r3"}, "bothbig"))
    assert closure(b.kappa2, su.small({"r3"})) == su.small({"r3"})
