"""Serialized document formats used by the command line front end.

Both documents are JSON objects carrying an explicit schema version so
future revisions can stay backward compatible.  The grid rendering is a
display aid only; nothing parses it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .core import PartialLatinSquare, validate
from .errors import DocumentError

SCHEMA_VERSION = "1"


def _load_object(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    schema = data.get("schema")
    if schema != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema {schema!r}, expected {SCHEMA_VERSION!r}")
    return data


def _int_field(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DocumentError(f"{where} must be a positive integer, got {value!r}")
    return value


def _int_list(value: Any, where: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise DocumentError(f"{where} must be a nonempty array")
    return tuple(_int_field(k, f"{where} entry") for k in value)


@dataclass(frozen=True)
class PlsDocument:
    """Wire form of one partial Latin square: a list of triples."""

    triples: tuple[tuple[int, int, int], ...]
    schema: str = SCHEMA_VERSION

    @classmethod
    def from_pls(cls, pls: PartialLatinSquare) -> "PlsDocument":
        return cls(tuple((t.row, t.col, t.sym) for t in pls.sorted_triples()))

    @classmethod
    def from_json(cls, text: str) -> "PlsDocument":
        data = _load_object(text)
        raw = data.get("triples")
        if not isinstance(raw, list) or not raw:
            raise DocumentError("triples must be a nonempty array")
        triples = []
        for entry in raw:
            if not isinstance(entry, list) or len(entry) != 3:
                raise DocumentError(f"each triple must be a three element array, got {entry!r}")
            triples.append(tuple(_int_field(k, "triple entry") for k in entry))
        return cls(tuple(triples))

    def to_pls(self) -> PartialLatinSquare:
        """Validate and wrap; clashes raise the usual validation errors."""
        return validate(self.triples)

    def to_json(self) -> str:
        return json.dumps(
            {"schema": self.schema, "triples": [list(t) for t in sorted(self.triples)]}
        )


@dataclass(frozen=True)
class SpecDocument:
    """Wire form of a prescription: parameter lists and scalar counts.

    Every field is optional, but at least one constraint must be present
    and all implied volumes (list totals and v) must agree.
    """

    rows: tuple[int, ...] | None = None
    cols: tuple[int, ...] | None = None
    symbols: tuple[int, ...] | None = None
    r: int | None = None
    c: int | None = None
    s: int | None = None
    v: int | None = None
    schema: str = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if all(
            getattr(self, name) is None
            for name in ("rows", "cols", "symbols", "r", "c", "s", "v")
        ):
            raise DocumentError("prescription must contain at least one constraint")
        for list_name, scalar_name in (("rows", "r"), ("cols", "c"), ("symbols", "s")):
            family = getattr(self, list_name)
            scalar = getattr(self, scalar_name)
            if family is not None and scalar is not None and len(family) != scalar:
                raise DocumentError(
                    f"{scalar_name} = {scalar} disagrees with {len(family)} {list_name} entries"
                )
        volumes = {
            sum(family)
            for family in (self.rows, self.cols, self.symbols)
            if family is not None
        }
        if self.v is not None:
            volumes.add(self.v)
        if len(volumes) > 1:
            raise DocumentError(f"implied volumes disagree: {sorted(volumes)}")

    @classmethod
    def from_json(cls, text: str) -> "SpecDocument":
        data = _load_object(text)
        kwargs: dict[str, Any] = {}
        for name in ("rows", "cols", "symbols"):
            if data.get(name) is not None:
                kwargs[name] = _int_list(data[name], name)
        for name in ("r", "c", "s", "v"):
            if data.get(name) is not None:
                kwargs[name] = _int_field(data[name], name)
        return cls(**kwargs)

    def to_json(self) -> str:
        payload: dict[str, Any] = {"schema": self.schema}
        for name in ("rows", "cols", "symbols"):
            family = getattr(self, name)
            if family is not None:
                payload[name] = list(family)
        for name in ("r", "c", "s", "v"):
            scalar = getattr(self, name)
            if scalar is not None:
                payload[name] = scalar
        return json.dumps(payload)


def render_grid(pls: PartialLatinSquare) -> str:
    """Row-major board view with '.' for empty cells.  Display only."""
    height = max(t.row for t in pls.triples)
    width = max(t.col for t in pls.triples)
    cells = {(t.row, t.col): t.sym for t in pls.triples}
    digits = max(len(str(t.sym)) for t in pls.triples)
    lines = []
    for i in range(1, height + 1):
        entries = [
            str(cells.get((i, j), ".")).rjust(digits) for j in range(1, width + 1)
        ]
        lines.append(" ".join(entries))
    return "\n".join(lines)
