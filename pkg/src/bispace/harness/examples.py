"""Reproduction of the paper's worked examples.

Each example loads its shipped fixture, computes every classification the
example asserts and compares it with the value the paper states.  A
disagreement becomes a :class:`DiscrepancyFinding` carrying the data that
justifies the computed value; nothing here decides which examples disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .. import axioms
from ..kappa import Bispace, is_topology
from ..semi import semi_closed_sets, is_semi_closed, is_semi_open, semi_closure, semi_kernel, semi_open_family
from ..sgstar import SgIndex, is_sg_star_closed, sg_star_witness
from ..universe import Indeterminate, SetExpr, complement, contains_point, equals, union
from .io import load_fixture


def _same(s: SetExpr, t: SetExpr) -> bool:
    verdict = equals(s, t)
    if verdict is None:
        raise Indeterminate(f"cannot compare {s!r} with {t!r}")
    return verdict


def render_set(s: SetExpr) -> str:
    return repr(s)


def render_family(sets) -> list[str]:
    return [render_set(s) for s in sets]


@dataclass
class Assertion:
    statement: str
    paper: Any
    computed: Any
    witness: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.paper == self.computed

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "paper": self.paper,
            "computed": self.computed,
            "agrees": self.agrees,
            "witness": self.witness,
        }


@dataclass
class DiscrepancyFinding:
    example: str
    statement: str
    paper: Any
    computed: Any
    witness: dict

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "statement": self.statement,
            "paper": self.paper,
            "computed": self.computed,
            "witness": self.witness,
        }


@dataclass
class ExampleReport:
    example: str
    fixture: str
    assertions: list[Assertion]

    @property
    def agrees(self) -> bool:
        return all(a.agrees for a in self.assertions)

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "fixture": self.fixture,
            "agrees": self.agrees,
            "assertions": [a.to_dict() for a in self.assertions],
        }


@dataclass
class PaperExamplesReport:
    examples: list[ExampleReport]

    @property
    def findings(self) -> list[DiscrepancyFinding]:
        return [
            DiscrepancyFinding(ex.example, a.statement, a.paper, a.computed, a.witness)
            for ex in self.examples
            for a in ex.assertions
            if not a.agrees
        ]

    def discrepant_examples(self) -> list[str]:
        seen: list[str] = []
        for f in self.findings:
            if f.example not in seen:
                seen.append(f.example)
        return seen

    def example(self, example_id: str) -> ExampleReport:
        return next(e for e in self.examples if e.example == example_id)

    def to_dict(self) -> dict:
        return {
            "examples": [e.to_dict() for e in self.examples],
            "findings": [f.to_dict() for f in self.findings],
        }


# --------------------------------------------------------------- builders


def _sg_assertion(b: Bispace, idx: SgIndex, s: SetExpr, name: str, paper: bool) -> Assertion:
    computed = is_sg_star_closed(b, idx, s)
    kernel = semi_kernel(b, idx.open_side, s)
    witness: dict = {"set": render_set(s), f"sker_{idx.open_side}": render_set(kernel)}
    if computed:
        witness["F"] = render_set(sg_star_witness(b, idx, s))
    elif b.finite:
        # every candidate overflows the kernel
        closed = semi_closed_sets(b, idx.closed_side)
        witness[f"semi-κ{idx.closed_side}-closed supersets"] = render_family(
            f for f in closed if f.bits & s.bits == s.bits
        )
    return Assertion(f"{name} is {idx}sg*-closed", paper, computed, witness)


def _family_assertion(b: Bispace, i: int, paper_sets: list[list[str]]) -> Assertion:
    computed = [s for s in semi_open_family(b, i).members]
    paper = sorted(b.universe.bits(s) for s in paper_sets)
    got = sorted(s.bits for s in computed)
    u = b.universe
    witness = {
        "missing_from_paper": [render_set(u.from_bits(m)) for m in got if m not in paper],
        "not_semi_open": [render_set(u.from_bits(m)) for m in paper if m not in got],
    }
    return Assertion(
        f"semi-κ{i}-open family",
        [render_set(u.from_bits(m)) for m in paper],
        [render_set(u.from_bits(m)) for m in got],
        witness,
    )


def _profile_assertion(b: Bispace, name: str, fn: Callable[[Bispace], bool], paper: bool) -> Assertion:
    return Assertion(name, paper, fn(b))


def _ex14() -> list[Assertion]:
    b = load_fixture("ex14")
    u = b.universe
    a = u.abstract({"r3"}, "bothbig")  # irrationals of (1, 2), holding √3
    return [
        Assertion("κ1 is a topology", False, is_topology(b.kappa1, u)),
        Assertion("A is semi-κ1-closed", False, is_semi_closed(b, 1, a)),
        Assertion("X is the only semi-κ2-open superset of A", True, _same(semi_kernel(b, 2, a), u.whole)),
        _sg_assertion(b, SgIndex(2, 1), a, "A", True),
        _profile_assertion(b, "pairwise semi-T1", axioms.is_pairwise_semi_T1, True),
        _profile_assertion(b, "pairwise semi-T0", axioms.is_pairwise_semi_T0, True),
    ]


def _ex16() -> list[Assertion]:
    b = load_fixture("ex16")
    bb, bc = b.mask("b"), b.mask("bc")
    return [
        Assertion("{b,c} is semi-κ1-closed", True, is_semi_closed(b, 1, bc)),
        Assertion("{b} is semi-κ2-open", True, is_semi_open(b, 2, bb)),
        _sg_assertion(b, SgIndex(2, 1), bb, "{b}", False),
    ]


def _ex18i() -> list[Assertion]:
    b = load_fixture("ex18i")
    idx = SgIndex(2, 1)
    return [
        _family_assertion(b, 1, [[], ["a", "b", "c"], ["a", "b"]]),
        _family_assertion(b, 2, [[], ["a", "b", "c"], ["b"]]),
        _sg_assertion(b, idx, b.mask("ab"), "{a,b}", True),
        _sg_assertion(b, idx, b.mask("bc"), "{b,c}", True),
        _sg_assertion(b, idx, b.mask("b"), "{b}", False),
    ]


def _ex18ii() -> list[Assertion]:
    b = load_fixture("ex18ii")
    u = b.universe
    a = u.cofinite({"r2", "r3", "r5"})
    bset = u.cofinite({"r2", "r7", "r11"})
    c = union(a, bset)
    idx = SgIndex(1, 2)
    return [
        Assertion("κ1 is a topology", False, is_topology(b.kappa1, u)),
        Assertion("X − A is semi-κ2-open", True, is_semi_open(b, 2, complement(a))),
        Assertion("X − B is semi-κ2-open", True, is_semi_open(b, 2, complement(bset))),
        _sg_assertion(b, idx, a, "A", True),
        _sg_assertion(b, idx, bset, "B", True),
        Assertion("A ∪ B = X − {√2}", True, _same(c, u.cofinite({"r2"}))),
        Assertion("{√2} is semi-κ2-open", False, is_semi_open(b, 2, u.small({"r2"}))),
        Assertion("C = A ∪ B is semi-κ1-open", True, is_semi_open(b, 1, c)),
        _sg_assertion(b, idx, c, "C = A ∪ B", False),
    ]


def _ex26() -> list[Assertion]:
    b = load_fixture("ex26")
    u = b.universe
    # a semi-open set holds x but not y exactly when y lies outside sker({x})
    splits = not contains_point(semi_kernel(b, 1, u.small({"r3"})), "r5") or not contains_point(
        semi_kernel(b, 1, u.small({"r5"})), "r3"
    )
    return [
        Assertion("κ1 is a topology", False, is_topology(b.kappa1, u)),
        _profile_assertion(b, "pairwise semi-T0", axioms.is_pairwise_semi_T0, True),
        _profile_assertion(b, "pairwise semi-T1", axioms.is_pairwise_semi_T1, False),
        Assertion("a semi-κ1-open set holds exactly one of √3, √5", False, splits),
    ]


def _ex30() -> list[Assertion]:
    b = load_fixture("ex30")
    X = ["a", "b", "c"]
    return [
        _family_assertion(b, 1, [[], X, ["a"], ["c"], ["a", "c"], ["a", "b"], ["b", "c"]]),
        _family_assertion(b, 2, [[], X, ["b"], ["a", "b"], ["b", "c"]]),
        _profile_assertion(b, "pairwise semi-T1", axioms.is_pairwise_semi_T1, True),
        Assertion("scl_2({b}) = X", True, _same(semi_closure(b, 2, b.mask("b")), b.universe.whole)),
        _profile_assertion(b, "pairwise semi-R0", axioms.is_pairwise_semi_R0, False),
    ]


def _ex38() -> list[Assertion]:
    b = load_fixture("ex38")
    return [
        _profile_assertion(b, "pairwise semi-Tw", axioms.is_pairwise_semi_Tw, True),
        _profile_assertion(b, "pairwise semi-T1", axioms.is_pairwise_semi_T1, False),
        _profile_assertion(b, "pairwise semi-T0", axioms.is_pairwise_semi_T0, True),
    ]


def _ex42() -> list[Assertion]:
    b = load_fixture("ex42")
    u = b.universe
    singles = [u.small({a}) for a in u.atoms]
    # a bulk singleton: small sets only name atoms, so use a fresh atom
    ext = u.extended(["‹point›"])
    eb = Bispace(ext, b.kappa1, b.kappa2)
    bulk_single = ext.small({"‹point›"})
    some_sg = any(
        is_sg_star_closed(b, idx, s) for idx in (SgIndex(1, 2), SgIndex(2, 1)) for s in singles
    ) or any(is_sg_star_closed(eb, idx, bulk_single) for idx in (SgIndex(1, 2), SgIndex(2, 1)))
    return [
        Assertion("κ1 is a topology", False, is_topology(b.kappa1, u)),
        _profile_assertion(b, "pairwise semi-symmetric", axioms.is_pairwise_semi_symmetric, True),
        Assertion("sker_j({l}) = {l}", True, _same(semi_kernel(b, 2, singles[0]), singles[0])),
        Assertion("{l} is semi-κi-closed", False, is_semi_closed(b, 1, singles[0])),
        Assertion("some singleton is sg*-closed", False, some_sg),
        _profile_assertion(
            b, "pairwise strongly semi-symmetric", axioms.is_pairwise_strongly_semi_symmetric, False
        ),
    ]


def _ex65() -> list[Assertion]:
    b = load_fixture("ex65")
    u = b.universe
    d = u.abstract({"r2", "r3"}, "bothbig")  # irrationals of (0, 2)
    out = [
        Assertion("κ1 is a topology", False, is_topology(b.kappa1, u)),
        _profile_assertion(b, "κi-s.c.(X) = κj-s.o.(X)", axioms.sc_equals_so, True),
    ]
    for j, i in ((1, 2), (2, 1)):
        out.append(Assertion(f"D = sker_{j}(D)", True, _same(semi_kernel(b, j, d), d)))
        out.append(Assertion(f"D is semi-κ{i}-closed", False, is_semi_closed(b, i, d)))
        out.append(_sg_assertion(b, SgIndex(j, i), d, "D", False))
    return out


EXAMPLES: list[tuple[str, str, Callable[[], list[Assertion]]]] = [
    ("14", "ex14", _ex14),
    ("16", "ex16", _ex16),
    ("18(i)", "ex18i", _ex18i),
    ("18(ii)", "ex18ii", _ex18ii),
    ("26", "ex26", _ex26),
    ("30", "ex30", _ex30),
    ("38", "ex38", _ex38),
    ("42", "ex42", _ex42),
    ("65", "ex65", _ex65),
]


def paper_examples_report() -> PaperExamplesReport:
    return PaperExamplesReport([ExampleReport(eid, fx, build()) for eid, fx, build in EXAMPLES])
