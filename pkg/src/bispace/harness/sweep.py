"""Exhaustive claim sweeps and axiom-profile search over enumerated bispaces.

Bispace number ``k`` on ``n`` points pairs structure ``k // N`` with
structure ``k % N`` (``N`` structures in enumeration order).  Workers take
contiguous ranges of ``k``; results are merged in range order, so a report
does not depend on how many workers produced it.
"""

from __future__ import annotations

import ast
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from ..axioms import PROFILE_KEYS, AxiomProfile, axiom_profile
from ..kappa import MAX_ENUMERATION_POINTS, Bispace, enumerate_sigma_structures, enumeration_labels
from ..sgstar import InvariantViolation
from ..universe import FiniteUniverse
from .claims import INDEX_KEYS, POINT_KEYS, Instance, claim_ids, get_claim
from .io import bispace_from_dict, bispace_to_dict

HOLDS = "HOLDS"
REFUTED = "REFUTED"


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_POINTS:
        raise ValueError(f"carrier size must be 1..{MAX_ENUMERATION_POINTS}, got {n}")


def structure_count(n: int) -> int:
    return len(enumerate_sigma_structures(n))


def bispace_at(n: int, k: int) -> Bispace:
    fams = enumerate_sigma_structures(n)
    a, b = divmod(k, len(fams))
    return Bispace(FiniteUniverse(enumeration_labels(n)), fams[a], fams[b], f"n{n}#{k}")


def encode_instance(inst: Instance, universe: FiniteUniverse) -> dict:
    out = {}
    for key, value in inst.items():
        if key in INDEX_KEYS:
            out[key] = value
        elif key in POINT_KEYS:
            out[key] = universe.points[value]
        else:
            out[key] = universe.labels(value)
    return out


def decode_instance(data: dict, universe: FiniteUniverse) -> Instance:
    out = {}
    for key, value in data.items():
        if key in INDEX_KEYS:
            out[key] = value
        elif key in POINT_KEYS:
            out[key] = universe.index(value)
        else:
            out[key] = universe.bits(value)
    return out


@dataclass
class ClaimReport:
    claim_id: str
    statement: str
    kind: str
    n: int
    bispaces: int
    instances: int
    refuted_bispaces: int
    verdict: str
    counterexample: dict | None
    seconds: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "statement": self.statement,
            "kind": self.kind,
            "n": self.n,
            "bispaces": self.bispaces,
            "instances": self.instances,
            "refuted_bispaces": self.refuted_bispaces,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
        }


@dataclass
class SweepReport:
    n: int
    structures: int
    bispaces: int
    claims: list[ClaimReport]
    seconds: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "structures": self.structures,
            "bispaces": self.bispaces,
            "claims": [c.to_dict() for c in self.claims],
        }

    def verdicts(self) -> dict[str, str]:
        return {c.claim_id: c.verdict for c in self.claims}


@dataclass
class _Partial:
    instances: int = 0
    refuted: int = 0
    first: tuple[int, Instance] | None = None
    seconds: float = 0.0


def _sweep_range(n: int, ids: list[str], start: int, stop: int) -> dict[str, _Partial]:
    claims = [get_claim(cid) for cid in ids]
    out = {cid: _Partial() for cid in ids}
    for k in range(start, stop):
        b = bispace_at(n, k)
        for claim in claims:
            part = out[claim.id]
            t0 = time.perf_counter()
            failed = None
            for inst in claim.instances(b):
                part.instances += 1
                if failed is None and not claim.holds(b, inst):
                    failed = inst
            part.seconds += time.perf_counter() - t0
            if failed is not None:
                part.refuted += 1
                if part.first is None:
                    part.first = (k, failed)
    return out


def _chunks(total: int, jobs: int) -> list[tuple[int, int]]:
    pieces = max(1, min(total, jobs * 4))
    bounds = [total * p // pieces for p in range(pieces + 1)]
    return [(bounds[p], bounds[p + 1]) for p in range(pieces) if bounds[p] < bounds[p + 1]]


def reverify(cid: str, counterexample: dict) -> None:
    """Reload a serialized counterexample and confirm the claim fails on it."""
    b = bispace_from_dict(counterexample["bispace"])
    inst = decode_instance(counterexample["instance"], b.universe)
    if get_claim(cid).holds(b, inst):
        raise InvariantViolation(f"{cid}: counterexample {counterexample} does not re-verify")


def sweep(n: int, ids: list[str] | None = None, jobs: int = 1) -> SweepReport:
    _check_n(n)
    ids = claim_ids() if ids is None else list(ids)
    for cid in ids:
        get_claim(cid)
    started = time.perf_counter()
    total = structure_count(n) ** 2
    ranges = _chunks(total, jobs)
    if jobs <= 1:
        parts = [_sweep_range(n, ids, lo, hi) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_sweep_range, n, ids, lo, hi) for lo, hi in ranges]
            parts = [f.result() for f in futures]
    reports = []
    for cid in ids:
        claim = get_claim(cid)
        merged = _Partial()
        for part in parts:
            p = part[cid]
            merged.instances += p.instances
            merged.refuted += p.refuted
            merged.seconds += p.seconds
            if merged.first is None:
                merged.first = p.first
        counterexample = None
        if merged.first is not None:
            k, inst = merged.first
            b = bispace_at(n, k)
            counterexample = {
                "bispace_index": k,
                "bispace": bispace_to_dict(b),
                "instance": encode_instance(inst, b.universe),
            }
            reverify(cid, counterexample)
            counterexample["reverified"] = True
        reports.append(
            ClaimReport(
                claim.id,
                claim.statement,
                claim.kind,
                n,
                total,
                merged.instances,
                merged.refuted,
                REFUTED if counterexample else HOLDS,
                counterexample,
                merged.seconds,
            )
        )
    return SweepReport(n, structure_count(n), total, reports, time.perf_counter() - started)


# ----------------------------------------------------------------- search


_BOOL_OPS = {"&": " and ", "|": " or ", "!": " not ", "∧": " and ", "∨": " or ", "¬": " not "}


class ProfilePredicate:
    """Boolean formula over profile fields, e.g. ``Tw & !T1``.

    Names are the short keys of :data:`~bispace.axioms.PROFILE_KEYS` or the
    profile field names; operators are ``&``, ``|``, ``!`` (or ∧ ∨ ¬) and
    parentheses.  Parsed with :mod:`ast` and evaluated by a tiny walker.
    """

    def __init__(self, text: str):
        self.text = text
        source = "".join(_BOOL_OPS.get(ch, ch) for ch in text)
        try:
            tree = ast.parse(source.strip(), mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse profile predicate {text!r}: {exc.msg}") from None
        self._check(tree.body)
        self.tree = tree.body

    @staticmethod
    def _field(name: str) -> str:
        if name in PROFILE_KEYS:
            return PROFILE_KEYS[name]
        if name in PROFILE_KEYS.values():
            return name
        raise ValueError(f"unknown profile field {name!r}; known: {', '.join(PROFILE_KEYS)}")

    def _check(self, node: ast.AST) -> None:
        if isinstance(node, ast.BoolOp):
            for v in node.values:
                self._check(v)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            self._check(node.operand)
        elif isinstance(node, ast.Name):
            self._field(node.id)
        else:
            raise ValueError(f"unsupported syntax in profile predicate {self.text!r}")

    def _eval(self, node: ast.AST, profile: AxiomProfile) -> bool:
        if isinstance(node, ast.BoolOp):
            vals = [self._eval(v, profile) for v in node.values]
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        if isinstance(node, ast.UnaryOp):
            return not self._eval(node.operand, profile)
        value = getattr(profile, self._field(node.id))
        if value is None:
            raise ValueError(f"profile field {node.id} is undetermined")
        return value

    def __call__(self, profile: AxiomProfile) -> bool:
        return self._eval(self.tree, profile)


@dataclass
class SearchResult:
    predicate: str
    n: int
    bispace_index: int
    bispace: Bispace
    profile: AxiomProfile

    def to_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "n": self.n,
            "bispace_index": self.bispace_index,
            "bispace": bispace_to_dict(self.bispace),
            "profile": self.profile.as_dict(),
        }


def iter_profile_matches(predicate: str | ProfilePredicate, n_max: int, n_min: int = 1):
    """Enumerated bispaces (smallest n, then index) whose profile matches."""
    pred = predicate if isinstance(predicate, ProfilePredicate) else ProfilePredicate(predicate)
    _check_n(n_max)
    for n in range(max(1, n_min), n_max + 1):
        for k in range(structure_count(n) ** 2):
            b = bispace_at(n, k)
            profile = axiom_profile(b)
            if pred(profile):
                yield SearchResult(pred.text, n, k, b, profile)


def search_profile(predicate: str | ProfilePredicate, n_max: int, n_min: int = 1) -> SearchResult | None:
    return next(iter_profile_matches(predicate, n_max, n_min), None)


def relabel_equivalent(a: Bispace, b: Bispace) -> bool:
    """Same finite bispace up to a bijection of points (structure order kept)."""
    n = a.universe.size
    if not (a.finite and b.finite) or n != b.universe.size:
        return False

    def moved(fam: tuple[int, ...], perm) -> tuple[int, ...]:
        return tuple(sorted(sum(1 << perm[x] for x in range(n) if m >> x & 1) for m in fam))

    target = (b.kappa1.open_sets, b.kappa2.open_sets)
    return any(
        (moved(a.kappa1.open_sets, perm), moved(a.kappa2.open_sets, perm)) == target
        for perm in permutations(range(n))
    )
