"""Text, JSON and CSV rendering of reports, plus matplotlib figures."""

from __future__ import annotations

import csv
import io
from pathlib import Path

from ..axioms import PROFILE_KEYS, AxiomProfile
from .examples import PaperExamplesReport
from .io import dumps
from .sweep import REFUTED, SweepReport

FORMATS = ("text", "json", "csv")


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _flag(value: bool | None) -> str:
    return "?" if value is None else ("yes" if value else "no")


# ------------------------------------------------------------------ sweeps


def _counterexample_summary(cx: dict | None) -> str:
    if cx is None:
        return ""
    inst = ", ".join(
        f"{k}={'{' + ','.join(v) + '}' if isinstance(v, list) else v}" for k, v in cx["instance"].items()
    )
    b = cx["bispace"]
    fam = lambda f: "[" + " ".join("{" + ",".join(s) + "}" for s in f) + "]"  # noqa: E731
    return f"#{cx['bispace_index']} κ1={fam(b['kappa1'])} κ2={fam(b['kappa2'])} {inst}".strip()


def sweep_rows(report: SweepReport) -> list[list]:
    rows = [["claim", "kind", "verdict", "refuted_bispaces", "bispaces", "instances", "counterexample"]]
    for c in report.claims:
        rows.append(
            [
                c.claim_id,
                c.kind,
                c.verdict,
                c.refuted_bispaces,
                c.bispaces,
                c.instances,
                _counterexample_summary(c.counterexample),
            ]
        )
    return rows


def render_sweep(report: SweepReport, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(report.to_dict())
    if fmt == "csv":
        return _csv(sweep_rows(report))
    lines = [
        f"sweep n={report.n}: {report.structures} structures, {report.bispaces} bispaces",
        "",
        f"{'claim':<10} {'verdict':<8} {'refuted':>9}  counterexample",
    ]
    for c in report.claims:
        refuted = f"{c.refuted_bispaces}/{c.bispaces}"
        lines.append(f"{c.claim_id:<10} {c.verdict:<8} {refuted:>9}  {_counterexample_summary(c.counterexample)}")
    held = sum(c.verdict != REFUTED for c in report.claims)
    lines += ["", f"{held} of {len(report.claims)} claims hold"]
    return "\n".join(lines) + "\n"


def sweep_figure(report: SweepReport, path: str | Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = [c.claim_id for c in report.claims]
    frac = [c.refuted_bispaces / c.bispaces for c in report.claims]
    colors = ["tab:red" if c.verdict == REFUTED else "tab:green" for c in report.claims]
    fig, ax = plt.subplots(figsize=(7, 0.28 * len(ids) + 1.2))
    ax.barh(ids, frac, color=colors)
    ax.set_xlim(0, 1)
    ax.invert_yaxis()
    ax.set_xlabel("fraction of bispaces with a counterexample")
    ax.set_title(f"claim sweep, n={report.n} ({report.bispaces} bispaces)")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# -------------------------------------------------------- paper examples


def example_rows(report: PaperExamplesReport) -> list[list]:
    rows = [["example", "statement", "paper", "computed", "agrees"]]
    for ex in report.examples:
        for a in ex.assertions:
            rows.append([ex.example, a.statement, _value(a.paper), _value(a.computed), a.agrees])
    return rows


def _value(v) -> str:
    if isinstance(v, list):
        return "{" + ", ".join(map(str, v)) + "}"
    return str(v).lower() if isinstance(v, bool) else str(v)


def render_examples(report: PaperExamplesReport, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(report.to_dict())
    if fmt == "csv":
        return _csv(example_rows(report))
    lines = []
    for ex in report.examples:
        lines.append(f"Example {ex.example} [{ex.fixture}]: {'agrees' if ex.agrees else 'DISAGREES'}")
        for a in ex.assertions:
            mark = "ok  " if a.agrees else "DIFF"
            lines.append(f"  {mark} {a.statement}: paper {_value(a.paper)}, computed {_value(a.computed)}")
    findings = report.findings
    lines += ["", f"{len(findings)} discrepancy finding(s) in examples {', '.join(report.discrepant_examples()) or '-'}"]
    for f in findings:
        witness = "; ".join(f"{k}: {_value(v)}" for k, v in f.witness.items())
        lines.append(f"  Ex. {f.example}: {f.statement} — paper {_value(f.paper)}, computed {_value(f.computed)} [{witness}]")
    return "\n".join(lines) + "\n"


def examples_figure(report: PaperExamplesReport, path: str | Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = [f"Ex. {e.example}" for e in report.examples]
    agree = [sum(a.agrees for a in e.assertions) for e in report.examples]
    differ = [sum(not a.agrees for a in e.assertions) for e in report.examples]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(ids, agree, color="tab:green", label="agrees with paper")
    ax.bar(ids, differ, bottom=agree, color="tab:red", label="discrepancy")
    ax.set_ylabel("assertions")
    ax.set_title("paper example reproduction")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# --------------------------------------------------------------- profiles


def render_profile(profile: AxiomProfile, fmt: str = "text", name: str = "") -> str:
    values = profile.as_dict()
    if fmt == "json":
        return dumps({"bispace": name, "profile": values})
    short = {v: k for k, v in PROFILE_KEYS.items()}
    if fmt == "csv":
        return _csv([["field", "short", "value"]] + [[k, short[k], _flag(v)] for k, v in values.items()])
    head = [f"axiom profile{' of ' + name if name else ''}"]
    return "\n".join(head + [f"  {short[k]:<7} {k:<24} {_flag(v)}" for k, v in values.items()]) + "\n"
