"""Command-line interface: ``bispace <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 indeterminate symbolic query,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import _schema
from ..axioms import axiom_profile
from ..kappa import Bispace, InvalidFamily
from ..semi import is_semi_closed, semi_kernel, semi_open_family
from ..sgstar import InvariantViolation, SgIndex, is_sg_star_closed, is_sg_star_open, sg_star_witness
from ..universe import Bulk, Indeterminate, Kind, SetExpr, UniverseError, complement
from .claims import CLAIMS, UnknownClaim, claim_ids
from .examples import paper_examples_report
from .io import BispaceFormatError, bispace_to_dict, dumps, load_bispace, save_report
from .report import (
    FORMATS,
    examples_figure,
    render_examples,
    render_profile,
    render_sweep,
    sweep_figure,
)
from .sweep import iter_profile_matches, search_profile, sweep

EXIT_OK, EXIT_INPUT, EXIT_INDETERMINATE, EXIT_INVARIANT = 0, 2, 3, 4

_BULK_PREFIXES = {"ctbl": Bulk.CTBL, "coctbl": Bulk.COCTBL, "bothbig": Bulk.BOTHBIG}


class InputError(ValueError):
    pass


def parse_set(text: str, b: Bispace) -> SetExpr:
    """``a,b`` names points; ``~a,b`` is the complement; on a symbolic carrier
    ``bothbig:r3`` / ``ctbl:r3`` / ``coctbl:r3`` classifies the set by atoms
    held and size of the rest."""
    text = text.strip()
    u = b.universe
    prefix, _, rest = text.partition(":")
    if rest or text.endswith(":"):
        if b.finite or prefix not in _BULK_PREFIXES:
            raise InputError(f"unknown set prefix {prefix!r}")
        return u.abstract(_labels(rest), _BULK_PREFIXES[prefix])
    negate = text.startswith("~")
    labels = _labels(text[1:] if negate else text)
    base = u.mask(labels) if b.finite else u.small(labels)
    return complement(base) if negate else base


def _labels(text: str) -> list[str]:
    text = text.strip().strip("{}")
    return [p.strip() for p in text.split(",") if p.strip()]


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _kind_name(k: Kind) -> str:
    return {
        Kind.EMPTY: "no bulk points",
        Kind.COUNTABLE: "countably many bulk points",
        Kind.BOTHBIG: "uncountable, co-uncountable bulk",
        Kind.COCOUNTABLE: "all but countably many bulk points",
        Kind.FULL: "every bulk point",
    }[k]


# ---------------------------------------------------------------- commands


def cmd_analyze(args) -> int:
    b = load_bispace(args.file)
    _emit(render_profile(axiom_profile(b), args.format, b.name))
    return EXIT_OK


def cmd_classify(args) -> int:
    b = load_bispace(args.file)
    s = parse_set(args.set, b)
    try:
        idx = SgIndex(args.open_side, args.closed_side)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    closed = is_sg_star_closed(b, idx, s)
    witness = sg_star_witness(b, idx, s) if closed else None
    result = {
        "set": repr(s),
        "index": str(idx),
        "sg_star_closed": closed,
        "witness": None if witness is None else repr(witness),
        "sg_star_open": is_sg_star_open(b, idx, s),
        f"semi_kernel_{idx.open_side}": repr(semi_kernel(b, idx.open_side, s)),
        f"semi_closed_{idx.closed_side}": is_semi_closed(b, idx.closed_side, s),
    }
    if args.format == "json":
        _emit(dumps(result))
    elif args.format == "csv":
        _emit("field,value\n" + "".join(f"{k},{v}\n" for k, v in result.items()))
    else:
        _emit("".join(f"{k:<18} {v}\n" for k, v in result.items()))
    return EXIT_OK


def cmd_semi(args) -> int:
    b = load_bispace(args.file)
    fam = semi_open_family(b, args.index)
    if b.finite:
        rows = [repr(m) for m in fam.members]
        if args.format == "json":
            _emit(dumps({"index": args.index, "semi_open": rows}))
        else:
            _emit("".join(f"{r}\n" for r in rows))
        return EXIT_OK
    rules = b.rules(args.index)
    rows = [
        (sorted(t[0]), _kind_name(t[1]), rules.is_semi_open(t))
        for t in _schema.all_types(b.universe.atom_set)
    ]
    if args.format == "json":
        _emit(dumps({"index": args.index, "types": [{"atoms": a, "bulk": k, "semi_open": v} for a, k, v in rows]}))
    else:
        _emit("".join(f"{'{' + ','.join(a) + '}':<24} {k:<36} {'semi-open' if v else '-'}\n" for a, k, v in rows))
    return EXIT_OK


def _claim_selection(text: str | None) -> list[str]:
    if not text:
        return claim_ids()
    if text == "all":
        return list(CLAIMS)
    ids = [c.strip() for c in text.split(",") if c.strip()]
    for cid in ids:
        if cid not in CLAIMS:
            raise UnknownClaim(cid)
    return ids


def cmd_verify(args) -> int:
    if args.n == 4 and not args.allow_n4:
        raise InputError("the n=4 sweep covers 126025 bispaces; pass --allow-n4 to run it")
    report = sweep(args.n, _claim_selection(args.claims), jobs=args.jobs)
    _emit(render_sweep(report, args.format))
    if args.output:
        save_report(report, args.output)
    if args.figure:
        sweep_figure(report, args.figure)
    return EXIT_OK


def _describe(result) -> str:
    data = bispace_to_dict(result.bispace)
    return (
        f"n={result.n}, bispace #{result.bispace_index}: "
        f"kappa1 {data['kappa1']}, kappa2 {data['kappa2']}\n"
    )


def cmd_search(args) -> int:
    if args.all:
        results = list(iter_profile_matches(args.profile, args.max_n))
        if args.format == "json":
            _emit(dumps([r.to_dict() for r in results]))
        else:
            _emit(f"{len(results)} bispace(s) on up to {args.max_n} points satisfy {args.profile}\n")
            _emit("".join("  " + _describe(r) for r in results))
        return EXIT_OK
    result = search_profile(args.profile, args.max_n)
    if args.format == "json":
        _emit(dumps(None if result is None else result.to_dict()))
        return EXIT_OK
    if result is None:
        _emit(f"no bispace on up to {args.max_n} points satisfies {args.profile}\n")
        return EXIT_OK
    data = bispace_to_dict(result.bispace)
    _emit(
        f"found at n={result.n}, bispace #{result.bispace_index}\n"
        f"  universe {data['universe']}\n  kappa1 {data['kappa1']}\n  kappa2 {data['kappa2']}\n"
        + render_profile(result.profile, "text")
    )
    return EXIT_OK


def cmd_paper_examples(args) -> int:
    report = paper_examples_report()
    _emit(render_examples(report, args.format))
    if args.output:
        save_report(report, args.output)
    if args.figure:
        examples_figure(report, args.figure)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bispace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("analyze", help="axiom profile of a bispace file")
    p.add_argument("file", type=Path)
    fmt(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="sg*-classification of one set")
    p.add_argument("file", type=Path)
    p.add_argument("--set", required=True, help="a,b | ~a,b | bothbig:r3 | ctbl: | coctbl:r2")
    p.add_argument("--open-side", type=int, choices=(1, 2), required=True)
    p.add_argument("--closed-side", type=int, choices=(1, 2), required=True)
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("semi", help="semi-open family of one structure")
    p.add_argument("file", type=Path)
    p.add_argument("--index", type=int, choices=(1, 2), required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_semi)

    p = sub.add_parser("verify", help="sweep claims over all bispaces on n points")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--claims", help="comma-separated claim ids, or 'all' (default: the paper's claims)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-n4", action="store_true", help="permit the large n=4 sweep")
    p.add_argument("--output", type=Path, help="also write the JSON report here")
    p.add_argument("--figure", type=Path, help="write a bar chart of refutation rates")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="first bispace whose profile satisfies a formula")
    p.add_argument("--profile", required=True, help='e.g. "Tw&!T1"')
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--all", action="store_true", help="list every match instead of the first")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("paper-examples", help="reproduce the paper's examples")
    p.add_argument("--output", type=Path, help="also write the JSON report here")
    p.add_argument("--figure", type=Path, help="write an agreement chart")
    fmt(p)
    p.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except Indeterminate as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (BispaceFormatError, InvalidFamily, UniverseError, UnknownClaim, InputError, OSError, ValueError) as exc:
        message = f"unknown claim {exc.args[0]}" if isinstance(exc, UnknownClaim) else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
