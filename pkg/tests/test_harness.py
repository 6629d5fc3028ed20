from __future__ import annotations

import csv
import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bispace.axioms import AxiomProfile, axiom_profile
from bispace.harness.claims import CLAIMS, UnknownClaim, claim_ids, get_claim
from bispace.harness.examples import paper_examples_report
from bispace.harness.io import (
    BispaceFormatError,
    bispace_from_dict,
    bispace_to_dict,
    dumps,
    fixture_names,
    fixture_text,
    load_bispace,
    load_fixture,
    loads_bispace,
    save_bispace,
    save_report,
)
from bispace.harness.report import render_examples, render_profile, render_sweep
from bispace.harness.sweep import (
    REFUTED,
    ProfilePredicate,
    bispace_at,
    decode_instance,
    encode_instance,
    iter_profile_matches,
    relabel_equivalent,
    reverify,
    search_profile,
    structure_count,
    sweep,
)
from bispace.kappa import InvalidFamily, finite_bispace
from bispace.sgstar import InvariantViolation

# ------------------------------------------------------------------ claims


def test_registry_shape():
    paper = claim_ids()
    assert len(paper) == 29 and len(set(paper)) == 29
    assert set(claim_ids("invariant")) == {"INV-DUAL", "INV-KER"}
    assert set(claim_ids("reading")) == {"ALT-T27", "ALT-T28", "ALT-T36", "ALT-T64"}
    assert all(c.shape in {"bispace", "subset", "pair", "point"} for c in CLAIMS.values())
    with pytest.raises(UnknownClaim):
        get_claim("C-T999")


def test_instances_are_deterministic():
    b = bispace_at(3, 417)
    for claim in CLAIMS.values():
        assert list(claim.instances(b)) == list(claim.instances(b))


def test_counterexample_matches_first_failing_instance():
    claim = get_claim("C-T17")
    b = bispace_at(3, 36)
    cx = claim.counterexample(b)
    assert cx is not None and not claim.holds(b, cx)
    assert cx == next(d for d in claim.instances(b) if not claim.holds(b, d))


def test_instance_encoding_round_trips():
    b = bispace_at(3, 44)
    for claim in CLAIMS.values():
        for inst in claim.instances(b):
            assert decode_instance(encode_instance(inst, b.universe), b.universe) == inst


def test_reverify_rejects_a_bogus_counterexample():
    b = bispace_at(2, 5)
    claim = get_claim("C-R13a")
    inst = next(iter(claim.instances(b)))
    bogus = {"bispace": bispace_to_dict(b), "instance": encode_instance(inst, b.universe)}
    with pytest.raises(InvariantViolation):
        reverify("C-R13a", bogus)


# ------------------------------------------------------------------- sweep


def test_sweep_is_independent_of_worker_count():
    ids = claim_ids() + claim_ids("invariant")
    one = sweep(2, ids, jobs=1)
    two = sweep(2, ids, jobs=2)
    assert one.to_dict() == two.to_dict()
    assert dumps(one.to_dict()) == dumps(two.to_dict())


def test_sweep_counterexamples_are_reverified_and_serializable():
    report = sweep(3, ["C-T17", "C-T27", "C-R13a"])
    by_id = {c.claim_id: c for c in report.claims}
    assert by_id["C-R13a"].verdict == "HOLDS" and by_id["C-R13a"].counterexample is None
    for cid in ("C-T17", "C-T27"):
        c = by_id[cid]
        assert c.verdict == REFUTED and c.counterexample["reverified"] is True
        reloaded = json.loads(dumps(c.counterexample))
        reverify(cid, reloaded)
        assert 0 < c.refuted_bispaces <= c.bispaces == 841


def test_invariants_and_readings_hold_at_n3():
    report = sweep(3, claim_ids("invariant") + claim_ids("reading"))
    assert all(c.verdict == "HOLDS" for c in report.claims), report.verdicts()


def test_sweep_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sweep(5)
    with pytest.raises(UnknownClaim):
        sweep(2, ["nope"])


# ------------------------------------------------------------------ search


def test_predicate_language():
    p = ProfilePredicate("Tw & !T1")
    prof = AxiomProfile(True, False, True, True, True, True, True, True, True, True)
    assert p(prof)
    assert ProfilePredicate("T0 ∧ ¬(T1 ∨ R0)")(prof) is False
    assert ProfilePredicate("semi_T0 | T1")(prof)
    for bad in ("T0 +", "T9", "T0 == T1", "f(T0)", "1"):
        with pytest.raises(ValueError):
            ProfilePredicate(bad)
    undetermined = AxiomProfile(None, False, True, True, True, True, True, True, True, True)
    with pytest.raises(ValueError):
        ProfilePredicate("T0")(undetermined)


def test_search_finds_first_match_and_relabelings():
    hit = search_profile("Tw & !T1", 3)
    assert hit is not None and hit.n == 2
    assert hit.profile.semi_Tw and not hit.profile.semi_T1
    assert search_profile("T1 & !T0", 3) is None
    ex38 = load_fixture("ex38")
    matches = list(iter_profile_matches("Tw & !T1", 2))
    assert any(relabel_equivalent(m.bispace, ex38) for m in matches)
    assert all(axiom_profile(m.bispace) == m.profile for m in matches)


def test_relabel_equivalence():
    a = finite_bispace("ab", [[], "a", "ab"], [[], "ab"])
    b = finite_bispace("ab", [[], "b", "ab"], [[], "ab"])
    c = finite_bispace("ab", [[], "ab"], [[], "a", "ab"])
    assert relabel_equivalent(a, b) and not relabel_equivalent(a, c)
    assert not relabel_equivalent(a, load_fixture("ex14"))


# ----------------------------------------------------------------- fixtures


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trip_is_bit_exact(name, tmp_path):
    b = load_fixture(name)
    assert dumps(bispace_to_dict(b)) == fixture_text(name)
    path = tmp_path / f"{name}.json"
    save_bispace(b, path)
    assert path.read_text(encoding="utf-8") == fixture_text(name)
    again = load_bispace(path)
    assert bispace_to_dict(again) == bispace_to_dict(b) and again.name == name


@settings(max_examples=60, deadline=None)
@given(st.integers(0, structure_count(3) ** 2 - 1))
def test_enumerated_bispaces_round_trip(k):
    b = bispace_at(3, k)
    text = dumps(bispace_to_dict(b))
    back = loads_bispace(text)
    assert (back.kappa1, back.kappa2) == (b.kappa1, b.kappa2)
    assert dumps(bispace_to_dict(back)) == text


def test_format_errors_name_the_field_or_line():
    good = bispace_to_dict(load_fixture("ex30"))
    missing = {k: v for k, v in good.items() if k != "kappa2"}
    with pytest.raises(BispaceFormatError) as exc:
        bispace_from_dict(missing)
    assert exc.value.field == "kappa2" and "kappa2" in str(exc.value)
    with pytest.raises(BispaceFormatError) as exc:
        loads_bispace('{\n  "universe": [\n  oops\n}')
    assert exc.value.line == 3
    with pytest.raises(BispaceFormatError) as exc:
        bispace_from_dict({**good, "kappa1": [["a", 3]]})
    assert exc.value.field == "kappa1[0]"
    sym = bispace_to_dict(load_fixture("ex14"))
    with pytest.raises(BispaceFormatError) as exc:
        bispace_from_dict({**sym, "universe": {"atoms": ["r3"]}})
    assert exc.value.field == "universe.symbolic"
    with pytest.raises(BispaceFormatError) as exc:
        bispace_from_dict({**sym, "kappa1": {"required": ["r3"], "colour": 1}})
    assert exc.value.field == "kappa1"
    with pytest.raises(BispaceFormatError):
        bispace_from_dict([])


def test_invalid_families_surface_the_axiom():
    data = bispace_to_dict(load_fixture("ex30"))
    data["kappa1"] = [[], ["a"], ["b"], ["a", "b", "c"]]
    with pytest.raises(InvalidFamily) as exc:
        bispace_from_dict(data)
    assert exc.value.violation.axiom == 1


def test_save_report_accepts_plain_data(tmp_path):
    save_report({"x": [1, 2]}, tmp_path / "r.json")
    assert json.loads((tmp_path / "r.json").read_text()) == {"x": [1, 2]}


# ---------------------------------------------------------- paper examples


def test_examples_report_discrepancies_carry_witnesses():
    report = paper_examples_report()
    assert set(report.discrepant_examples()) == {"16", "18(i)"}
    assert report.findings and all(f.witness for f in report.findings)
    data = json.loads(dumps(report.to_dict()))
    assert {f["example"] for f in data["findings"]} == {"16", "18(i)"}
    ex16 = next(f for f in report.findings if f.example == "16")
    assert ex16.paper is False and ex16.computed is True and ex16.witness["F"] == "{b}"


# ----------------------------------------------------------------- reports


def test_renderers_produce_valid_json_and_csv():
    report = sweep(2, ["C-T17", "C-R13a"])
    rows = list(csv.reader(io.StringIO(render_sweep(report, "csv"))))
    assert rows[0][:3] == ["claim", "kind", "verdict"] and len(rows) == 3
    assert json.loads(render_sweep(report, "json")) == report.to_dict()
    assert "claims hold" in render_sweep(report, "text")
    examples = paper_examples_report()
    assert json.loads(render_examples(examples, "json"))["findings"]
    assert list(csv.reader(io.StringIO(render_examples(examples, "csv"))))[0][0] == "example"
    profile = axiom_profile(load_fixture("ex38"))
    assert json.loads(render_profile(profile, "json", "ex38"))["profile"]["semi_T1"] is False
    assert "Tw" in render_profile(profile, "text")


# ------------------------------------------------------- operation vectors


def test_claim_vectors_on_fixtures():
    assert get_claim("C-R13a").counterexample(load_fixture("ex30")) is None
    assert get_claim("C-T6").counterexample(load_fixture("ex16")) is None
    assert len(list(get_claim("C-T6").instances(load_fixture("ex16")))) == 16  # 8 subsets, 2 indices
    for k in range(0, 841, 37):
        assert get_claim("C-T23").counterexample(bispace_at(3, k)) is None


def test_sweep_vectors():
    small = sweep(2)
    assert small.bispaces == 16 and len(small.claims) == 29
    assert sweep(3, ["C-R13a", "C-T39"]).verdicts() == {"C-R13a": "HOLDS", "C-T39": "HOLDS"}


def test_search_vectors():
    hit = search_profile("T0 & !T1", 3)
    assert hit is not None and hit.profile.semi_T0 and not hit.profile.semi_T1
