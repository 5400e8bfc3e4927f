"""Command reports and their two renderings.

The JSON rendering is canonical (sorted keys, two-space indent).  The table
rendering lists every leaf as ``path<TAB>value`` where ``value`` is the JSON
encoding of the leaf, so parsing the table gives back exactly the values in
the JSON.  Reports hold no timings or other wall-clock data, so identical
inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

FORMATS = ("json", "table")


@dataclass
class Report:
    command: dict[str, Any]
    inputs: dict[str, Any] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    error: str | None = None
    exit_status: int = 0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def to_table(self) -> str:
        return "".join(f"{path}\t{json.dumps(value, allow_nan=False)}\n"
                       for path, value in flatten(self.to_dict()))

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "table":
            return self.to_table()
        raise ValueError(f"unknown format {fmt!r}")


def _key(part: str) -> str:
    # JSON-escape (so control characters cannot break a line), then mark the
    # path separators; every literal backslash is already doubled by then
    return json.dumps(part)[1:-1].replace(".", "\\.").replace("[", "\\[")


def flatten(obj: Any, prefix: str = "") -> list[tuple[str, Any]]:
    """Leaves of a JSON value as (dotted path, value) pairs, in sorted-key order.

    Empty containers are leaves themselves so that nothing is lost.
    """
    if isinstance(obj, dict) and obj:
        out = []
        for k in sorted(obj):
            out += flatten(obj[k], f"{prefix}.{_key(str(k))}" if prefix else _key(str(k)))
        return out
    if isinstance(obj, (list, tuple)) and obj:
        out = []
        for i, v in enumerate(obj):
            out += flatten(v, f"{prefix}[{i}]")
        return out
    if isinstance(obj, tuple):
        obj = list(obj)
    return [(prefix, obj)]


def parse_table(text: str) -> list[tuple[str, Any]]:
    """Inverse of :meth:`Report.to_table`: the (path, value) rows."""
    rows = []
    for line in text.splitlines():
        path, _, raw = line.partition("\t")
        rows.append((path, json.loads(raw)))
    return rows
