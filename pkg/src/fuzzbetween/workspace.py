"""Named objects loaded from JSON documents, CSV tables or a directory of both.

A JSON workspace document has any of the sections::

    {
      "universes":  {"X": {"elements": ["x1", "x2"], "weights": [1.0, 2.0]}},
      "sets":       {"A": {"universe": "X", "members": ["x1"]}},
      "fuzzy":      {"f": {"universe": "X", "values": {"x1": 0.2, "x2": 0.8}}},
      "hfuzzy":     {"M": {"universe": "X", "mu1": {...}, "mu2": {...}}},
      "hyperbolic": {"z": {"a": 1.5, "b": -0.5}},
      "kernels":    {"K": {"labels": [...], "entries": [[...], ...]}},
      "levels":     {"eta": {"kind": "discrete", "levels": [[0.5, 1.0]]}}
    }

A bare universe object (``{"elements": [...]}``) is also accepted and is
named after the file stem.  When a workspace defines exactly one universe,
objects may omit their ``"universe"`` reference.

A CSV file describes one universe, named after the file stem: a header
``id,weight,<col>,...`` and one row per element.  Each extra column is a
membership function; a pair of columns ``M.mu1`` and ``M.mu2`` is the
D-valued function ``M``.  Empty cells mean 0.0.

Membership values missing from the input default to 0.0 with a
:class:`MissingValueWarning`.  Malformed input raises :class:`InputError`
whose message names the offending field, or the line and column for CSV.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .core import FiniteUniverse, KernelMatrix, LevelMeasure, WeightedMeasure
from .crisp import CrispSet
from .errors import (
    FuzzBetweenError,
    InputError,
    KindMismatchError,
    MissingValueWarning,
    UniverseMismatchError,
    UnknownNameError,
)
from .fuzzy import MembershipFn
from .hfuzzy import HMembershipFn
from .hyperbolic import Hyperbolic

#: Workspace sections in load and display order; keys of the JSON document.
SECTIONS = ("universes", "sets", "fuzzy", "hfuzzy", "hyperbolic", "kernels", "levels")

KIND_LABELS = {
    "universes": "universe",
    "sets": "crisp set",
    "fuzzy": "membership function",
    "hfuzzy": "D-valued membership function",
    "hyperbolic": "hyperbolic number",
    "kernels": "kernel matrix",
    "levels": "level measure",
}


@dataclass
class Workspace:
    universes: dict[str, FiniteUniverse] = field(default_factory=dict)
    measures: dict[str, WeightedMeasure] = field(default_factory=dict)  # keyed by universe name
    sets: dict[str, CrispSet] = field(default_factory=dict)
    fuzzy: dict[str, MembershipFn] = field(default_factory=dict)
    hfuzzy: dict[str, HMembershipFn] = field(default_factory=dict)
    hyperbolic: dict[str, Hyperbolic] = field(default_factory=dict)
    kernels: dict[str, KernelMatrix] = field(default_factory=dict)
    levels: dict[str, LevelMeasure] = field(default_factory=dict)
    #: universe name of every set / fuzzy / hfuzzy object
    owner: dict[tuple[str, str], str] = field(default_factory=dict)

    def section(self, kind: str) -> dict:
        return getattr(self, kind)

    def names(self) -> dict[str, list[str]]:
        return {kind: sorted(self.section(kind)) for kind in SECTIONS}

    def owner_of(self, name: str) -> str:
        """Universe name of a set, membership function or D-valued function."""
        for kind in ("sets", "fuzzy", "hfuzzy"):
            if (kind, name) in self.owner:
                return self.owner[(kind, name)]
        raise UnknownNameError(f"no universe-bound object named {name!r}")

    def common_measure(self, *names: str) -> WeightedMeasure:
        """The weights of the universe shared by every named object."""
        owners = {self.owner_of(n) for n in names}
        if len(owners) != 1:
            raise UniverseMismatchError(
                f"objects {list(names)} live on different universes: {sorted(owners)}"
            )
        return self.measures[owners.pop()]

    # lookup ---------------------------------------------------------------------

    def lookup(self, name: str, *accepted: str):
        """Return ``(kind, object)`` for ``name`` in the first accepted section.

        A {0,1}-valued membership function is accepted where a crisp set is
        wanted, and a crisp set where a membership function is wanted.  A name
        that exists only in other sections raises :class:`KindMismatchError`;
        an unknown name raises :class:`UnknownNameError`.
        """
        for kind in accepted:
            if name in self.section(kind):
                return kind, self.section(kind)[name]
        if "sets" in accepted and name in self.fuzzy and self.fuzzy[name].is_crisp():
            return "sets", self.fuzzy[name].to_crisp()
        if "fuzzy" in accepted and name in self.sets:
            return "fuzzy", MembershipFn.indicator(self.sets[name])
        found = [k for k in SECTIONS if name in self.section(k)]
        wanted = " or ".join(KIND_LABELS[k] for k in accepted)
        if found:
            have = ", ".join(KIND_LABELS[k] for k in found)
            raise KindMismatchError(f"{name!r} is a {have}, expected a {wanted}")
        raise UnknownNameError(f"no object named {name!r} in the workspace (expected a {wanted})")

    def get(self, name: str, kind: str):
        return self.lookup(name, kind)[1]

    # merging --------------------------------------------------------------------

    def merge(self, other: "Workspace", source: str = "") -> None:
        for kind in SECTIONS:
            mine, theirs = self.section(kind), other.section(kind)
            for name, obj in theirs.items():
                if name in mine:
                    where = f" (while reading {source})" if source else ""
                    raise InputError(f"duplicate {KIND_LABELS[kind]} name {name!r}{where}")
                mine[name] = obj
        self.measures.update(other.measures)
        self.owner.update(other.owner)


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise InputError(f"{where}: expected a finite number, got {value!r}")
    return value


def _membership(value: Any, where: str) -> float:
    v = _number(value, where)
    if not 0.0 <= v <= 1.0:
        raise InputError(f"{where}: membership value {v} outside [0, 1]")
    return v


def _mapping(value: Any, where: str) -> Mapping:
    if not isinstance(value, Mapping):
        raise InputError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _string_list(value: Any, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise InputError(f"{where}: expected a list of strings")
    return value


def _guard(where: str, fn, *args):
    """Run a constructor, re-raising validation failures as located input errors."""
    try:
        return fn(*args)
    except InputError:
        raise
    except (FuzzBetweenError, ValueError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def _values_over(universe: FiniteUniverse, data: Any, where: str) -> tuple[float, ...]:
    data = _mapping(data, where)
    for key in data:
        if key not in universe:
            raise InputError(f"{where}.{key}: element not in the universe")
    out = []
    for e in universe:
        if e in data:
            out.append(_membership(data[e], f"{where}.{e}"))
        else:
            warnings.warn(f"{where}: no value for element {e!r}; using 0.0", MissingValueWarning, stacklevel=2)
            out.append(0.0)
    return tuple(out)


def _parse_universe(data: Any, where: str) -> tuple[FiniteUniverse, WeightedMeasure]:
    data = _mapping(data, where)
    extra = set(data) - {"elements", "weights"}
    if extra:
        raise InputError(f"{where}: unexpected field(s) {sorted(extra)}")
    if "elements" not in data:
        raise InputError(f"{where}.elements: missing")
    elements = _string_list(data["elements"], f"{where}.elements")
    universe = _guard(f"{where}.elements", FiniteUniverse, tuple(elements))
    if "weights" not in data or data["weights"] is None:
        return universe, WeightedMeasure.counting(universe)
    raw = data["weights"]
    if not isinstance(raw, list):
        raise InputError(f"{where}.weights: expected a list of numbers")
    if len(raw) != len(elements):
        raise InputError(f"{where}.weights: {len(raw)} weights for {len(elements)} elements")
    weights = tuple(_number(w, f"{where}.weights[{i}]") for i, w in enumerate(raw))
    for i, w in enumerate(weights):
        if w <= 0.0:
            raise InputError(f"{where}.weights[{i}]: weights must be > 0, got {w}")
    return universe, WeightedMeasure(universe, weights)


def _universe_ref(ws: Workspace, data: Mapping, where: str) -> tuple[str, FiniteUniverse]:
    if "universe" not in data:
        if len(ws.universes) == 1:
            return next(iter(ws.universes.items()))
        raise InputError(f"{where}.universe: missing (the workspace has {len(ws.universes)} universes)")
    ref = data["universe"]
    if not isinstance(ref, str):
        raise InputError(f"{where}.universe: expected a universe name")
    if ref not in ws.universes:
        raise InputError(f"{where}.universe: unknown universe {ref!r}")
    return ref, ws.universes[ref]


def _check_fields(data: Mapping, allowed: set[str], where: str) -> None:
    extra = set(data) - allowed
    if extra:
        raise InputError(f"{where}: unexpected field(s) {sorted(extra)}")


def _parse_set(ws: Workspace, name: str, data: Any, where: str) -> None:
    data = _mapping(data, where)
    _check_fields(data, {"universe", "members"}, where)
    uname, universe = _universe_ref(ws, data, where)
    members = _string_list(data.get("members", []), f"{where}.members")
    for m in members:
        if m not in universe:
            raise InputError(f"{where}.members: element {m!r} not in universe {uname!r}")
    ws.sets[name] = CrispSet.from_members(universe, members)
    ws.owner[("sets", name)] = uname


def _parse_fuzzy(ws: Workspace, name: str, data: Any, where: str) -> None:
    data = _mapping(data, where)
    _check_fields(data, {"universe", "values"}, where)
    uname, universe = _universe_ref(ws, data, where)
    values = _values_over(universe, data.get("values", {}), f"{where}.values")
    ws.fuzzy[name] = MembershipFn(universe, values)
    ws.owner[("fuzzy", name)] = uname


def _parse_hfuzzy(ws: Workspace, name: str, data: Any, where: str) -> None:
    data = _mapping(data, where)
    _check_fields(data, {"universe", "mu1", "mu2"}, where)
    uname, universe = _universe_ref(ws, data, where)
    comps = []
    for key in ("mu1", "mu2"):
        if key not in data:
            warnings.warn(f"{where}.{key}: missing; every value defaults to 0.0", MissingValueWarning, stacklevel=2)
        comps.append(MembershipFn(universe, _values_over(universe, data.get(key, {e: 0.0 for e in universe}),
                                                         f"{where}.{key}")))
    ws.hfuzzy[name] = HMembershipFn(*comps)
    ws.owner[("hfuzzy", name)] = uname


def _parse_hyperbolic(ws: Workspace, name: str, data: Any, where: str) -> None:
    data = _mapping(data, where)
    for k, v in data.items():
        _number(v, f"{where}.{k}")
    ws.hyperbolic[name] = _guard(where, Hyperbolic.from_mapping, data)


def _parse_kernel(ws: Workspace, name: str, data: Any, where: str) -> None:
    data = _mapping(data, where)
    _check_fields(data, {"labels", "entries"}, where)
    labels = _string_list(data.get("labels"), f"{where}.labels")
    rows = data.get("entries")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{where}.entries: expected a list of rows")
    entries = tuple(
        tuple(_number(v, f"{where}.entries[{i}][{j}]") for j, v in enumerate(row)) for i, row in enumerate(rows)
    )
    ws.kernels[name] = _guard(where, KernelMatrix, tuple(labels), entries)


def _parse_level(ws: Workspace, name: str, data: Any, where: str) -> None:
    data = _mapping(data, where)
    _check_fields(data, {"kind", "levels"}, where)
    kind = data.get("kind", "lebesgue")
    atoms = data.get("levels", [])
    if not isinstance(atoms, list) or not all(isinstance(a, list) and len(a) == 2 for a in atoms):
        raise InputError(f"{where}.levels: expected a list of [alpha, weight] pairs")
    atoms = tuple(
        (_number(a, f"{where}.levels[{i}][0]"), _number(w, f"{where}.levels[{i}][1]"))
        for i, (a, w) in enumerate(atoms)
    )
    ws.levels[name] = _guard(where, LevelMeasure, kind, atoms)


_PARSERS = {
    "sets": _parse_set,
    "fuzzy": _parse_fuzzy,
    "hfuzzy": _parse_hfuzzy,
    "hyperbolic": _parse_hyperbolic,
    "kernels": _parse_kernel,
    "levels": _parse_level,
}


def workspace_from_dict(doc: Any, default_name: str = "X", base: Workspace | None = None) -> Workspace:
    """Build a workspace from a parsed JSON document.

    ``base`` supplies universes already loaded (from other files of a
    directory) that the document may reference; they are not copied into the
    result.
    """
    doc = _mapping(doc, "workspace")
    if "elements" in doc:
        doc = {"universes": {default_name: doc}}
    unknown = set(doc) - set(SECTIONS)
    if unknown:
        raise InputError(f"workspace: unknown section(s) {sorted(unknown)}")
    ws = Workspace()
    for name, data in _mapping(doc.get("universes", {}), "universes").items():
        ws.universes[name], ws.measures[name] = _parse_universe(data, f"universes.{name}")
    # references resolve against this document's universes plus the base ones
    scope = Workspace()
    if base is not None:
        scope.universes.update(base.universes)
        scope.measures.update(base.measures)
    scope.merge(ws)
    for kind in SECTIONS[1:]:
        for name, data in _mapping(doc.get(kind, {}), kind).items():
            _PARSERS[kind](scope, name, data, f"{kind}.{name}")
    for kind in SECTIONS[1:]:
        ws.section(kind).update(scope.section(kind))
    ws.owner.update(scope.owner)
    return ws


def load_json(path: Path, base: Workspace | None = None) -> Workspace:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: cannot read: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return workspace_from_dict(doc, default_name=path.stem, base=base)


def load_csv(path: Path) -> Workspace:
    """Parse one CSV table into a universe with its membership functions."""
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except (OSError, UnicodeDecodeError, csv.Error) as exc:
        raise InputError(f"{path}: cannot read CSV: {exc}") from exc
    if not rows:
        raise InputError(f"{path}: empty file; a header row is required")
    header = [h.strip() for h in rows[0]]
    if header[:2] != ["id", "weight"]:
        raise InputError(f"{path} line 1: header must start with 'id,weight', got {','.join(header[:2])!r}")
    columns = header[2:]
    if len(set(header)) != len(header):
        raise InputError(f"{path} line 1: duplicate column names")
    for col in columns:
        if not col:
            raise InputError(f"{path} line 1: empty column name")

    ids: list[str] = []
    weights: list[float] = []
    values: dict[str, list[float]] = {c: [] for c in columns}
    for lineno, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise InputError(f"{path} line {lineno}: expected {len(header)} fields, got {len(row)}")
        ident = row[0].strip()
        if not ident:
            raise InputError(f"{path} line {lineno}, column 'id': empty element id")
        ids.append(ident)
        weights.append(_csv_float(row[1], path, lineno, "weight", positive=True))
        for col, cell in zip(columns, row[2:]):
            if not cell.strip():
                warnings.warn(f"{path} line {lineno}, column {col!r}: empty cell; using 0.0",
                              MissingValueWarning, stacklevel=2)
                values[col].append(0.0)
            else:
                values[col].append(_csv_float(cell, path, lineno, col))
    if not ids:
        raise InputError(f"{path}: no data rows")

    name = path.stem
    universe = _guard(f"{path} column 'id'", FiniteUniverse, tuple(ids))
    ws = Workspace()
    ws.universes[name] = universe
    ws.measures[name] = WeightedMeasure(universe, tuple(weights))

    pairs: dict[str, dict[str, list[float]]] = {}
    for col in columns:
        stem, dot, comp = col.rpartition(".")
        if dot and comp in ("mu1", "mu2") and stem:
            pairs.setdefault(stem, {})[comp] = values[col]
        else:
            ws.fuzzy[col] = MembershipFn(universe, tuple(values[col]))
            ws.owner[("fuzzy", col)] = name
    for stem, comps in pairs.items():
        for comp in ("mu1", "mu2"):
            if comp not in comps:
                warnings.warn(f"{path}: column '{stem}.{comp}' missing; every value defaults to 0.0",
                              MissingValueWarning, stacklevel=2)
                comps[comp] = [0.0] * len(ids)
        ws.hfuzzy[stem] = HMembershipFn(MembershipFn(universe, tuple(comps["mu1"])),
                                        MembershipFn(universe, tuple(comps["mu2"])))
        ws.owner[("hfuzzy", stem)] = name
    return ws


def _csv_float(cell: str, path: Path, lineno: int, col: str, positive: bool = False) -> float:
    where = f"{path} line {lineno}, column {col!r}"
    try:
        v = float(cell)
    except ValueError:
        raise InputError(f"{where}: not a number: {cell.strip()!r}") from None
    if not math.isfinite(v):
        raise InputError(f"{where}: not a finite number: {cell.strip()!r}")
    if positive:
        if v <= 0.0:
            raise InputError(f"{where}: weight must be > 0, got {v}")
    elif not 0.0 <= v <= 1.0:
        raise InputError(f"{where}: membership value {v} outside [0, 1]")
    return v


def load_workspace(path: str | Path) -> Workspace:
    """Load a JSON document, a CSV table, or every *.json / *.csv in a directory.

    Directory entries load in sorted name order: CSV tables first (they
    define universes), then JSON documents, which may refer to any universe
    loaded so far.
    """
    path = Path(path)
    if path.is_dir():
        ws = Workspace()
        files = sorted(path.glob("*.csv")) + sorted(path.glob("*.json"))
        if not files:
            raise InputError(f"{path}: directory holds no .json or .csv files")
        for f in files:
            part = load_csv(f) if f.suffix == ".csv" else load_json(f, base=ws)
            ws.merge(part, source=str(f))
        return ws
    if not path.exists():
        raise InputError(f"{path}: no such file or directory")
    if path.suffix.lower() == ".csv":
        return load_csv(path)
    return load_json(path)


# ---------------------------------------------------------------------------
# serialization (the same JSON shapes the loader accepts)
# ---------------------------------------------------------------------------


def object_to_json(ws: Workspace, kind: str, name: str) -> dict:
    obj = ws.section(kind)[name]
    if kind == "universes":
        return {"elements": list(obj.elements), "weights": list(ws.measures[name].weights)}
    if kind == "sets":
        return {"universe": ws.owner[(kind, name)], "members": list(obj.members)}
    if kind == "fuzzy":
        return {"universe": ws.owner[(kind, name)], "values": obj.as_mapping()}
    if kind == "hfuzzy":
        return {"universe": ws.owner[(kind, name)], "mu1": obj.mu1.as_mapping(), "mu2": obj.mu2.as_mapping()}
    if kind == "hyperbolic":
        return obj.to_mapping("ab")
    if kind == "kernels":
        return {"labels": list(obj.labels), "entries": [list(r) for r in obj.entries]}
    if kind == "levels":
        return {"kind": obj.kind, "levels": [list(a) for a in obj.levels]}
    raise KeyError(kind)


def workspace_to_dict(ws: Workspace) -> dict:
    return {kind: {name: object_to_json(ws, kind, name) for name in sorted(ws.section(kind))}
            for kind in SECTIONS if ws.section(kind)}
