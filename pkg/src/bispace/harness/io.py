"""Bispace files and report serialization.

Files are UTF-8 JSON.  Output is canonical (two-space indent, sets in mask
order, labels in carrier order, trailing newline), so a canonical file
survives ``save(load(path))`` byte for byte.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from ..kappa import Bispace, Explicit, Schema
from ..universe import FiniteUniverse, SymbolicUniverse

FIXTURE_PACKAGE = "bispace.fixtures"


class BispaceFormatError(ValueError):
    """A bispace file that does not follow the format; names the field or line."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.field = field
        self.line = line


def _require(data: dict, key: str, where: str = "") -> Any:
    if key not in data:
        raise BispaceFormatError("missing", field=where + key)
    return data[key]


def _labels(value, field: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise BispaceFormatError("expected a list of strings", field=field)
    return value


def _bool(value, field: str) -> bool:
    if not isinstance(value, bool):
        raise BispaceFormatError("expected true or false", field=field)
    return value


def bispace_from_dict(data: Any, name: str = "") -> Bispace:
    if not isinstance(data, dict):
        raise BispaceFormatError("top level must be an object")
    raw_universe = _require(data, "universe")
    raw = {k: _require(data, k) for k in ("kappa1", "kappa2")}
    if isinstance(raw_universe, dict):
        if _require(raw_universe, "symbolic", "universe.") is not True:
            raise BispaceFormatError("must be true", field="universe.symbolic")
        u = SymbolicUniverse(tuple(_labels(_require(raw_universe, "atoms", "universe."), "universe.atoms")))
        fams = [_schema_from(raw[k], k) for k in ("kappa1", "kappa2")]
    else:
        u = FiniteUniverse(tuple(_labels(raw_universe, "universe")))
        fams = [_explicit_from(raw[k], k, u) for k in ("kappa1", "kappa2")]
    return Bispace(u, fams[0], fams[1], name)


def _explicit_from(value, field: str, u: FiniteUniverse) -> Explicit:
    if not isinstance(value, list):
        raise BispaceFormatError("expected a list of open sets", field=field)
    sets = [_labels(s, f"{field}[{k}]") for k, s in enumerate(value)]
    try:
        return Explicit.from_labels(u, sets)
    except ValueError as exc:
        raise BispaceFormatError(str(exc), field=field) from None


def _schema_from(value, field: str) -> Schema:
    if not isinstance(value, dict):
        raise BispaceFormatError("expected a schema object", field=field)
    unknown = set(value) - {"required", "excluded", "countable", "cocountable"}
    if unknown:
        raise BispaceFormatError(f"unknown keys {sorted(unknown)}", field=field)
    return Schema(
        frozenset(_labels(value.get("required", []), f"{field}.required")),
        frozenset(_labels(value.get("excluded", []), f"{field}.excluded")),
        _bool(value.get("countable", True), f"{field}.countable"),
        _bool(value.get("cocountable", False), f"{field}.cocountable"),
    )


def bispace_to_dict(b: Bispace) -> dict:
    u = b.universe
    if b.finite:
        return {
            "universe": list(u.points),
            "kappa1": [u.labels(m) for m in b.kappa1.open_sets],
            "kappa2": [u.labels(m) for m in b.kappa2.open_sets],
        }

    def ordered(atoms: frozenset) -> list[str]:
        return [a for a in u.atoms if a in atoms]

    def schema(s: Schema) -> dict:
        return {
            "required": ordered(s.required),
            "excluded": ordered(s.excluded),
            "countable": s.countable,
            "cocountable": s.cocountable,
        }

    return {
        "universe": {"symbolic": True, "atoms": list(u.atoms)},
        "kappa1": schema(b.kappa1),
        "kappa2": schema(b.kappa2),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def loads_bispace(text: str, name: str = "") -> Bispace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BispaceFormatError(exc.msg, line=exc.lineno) from None
    return bispace_from_dict(data, name)


def load_bispace(path: str | Path) -> Bispace:
    path = Path(path)
    return loads_bispace(path.read_text(encoding="utf-8"), path.stem)


def save_bispace(b: Bispace, path: str | Path) -> None:
    Path(path).write_text(dumps(bispace_to_dict(b)), encoding="utf-8")


def save_report(report: Any, path: str | Path) -> None:
    """Write a report object (anything with ``to_dict``) or plain data as JSON."""
    data = report.to_dict() if hasattr(report, "to_dict") else report
    Path(path).write_text(dumps(data), encoding="utf-8")


def fixture_names() -> list[str]:
    root = resources.files(FIXTURE_PACKAGE)
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    return resources.files(FIXTURE_PACKAGE).joinpath(f"{name}.json").read_text(encoding="utf-8")


def load_fixture(name: str) -> Bispace:
    return loads_bispace(fixture_text(name), name)
