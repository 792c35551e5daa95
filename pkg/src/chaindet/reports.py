"""Report objects shared by the census and the CLI.

Counts are serialized as decimal strings (arbitrary precision safe).  Cell
order is always the sorted grid key, so identical inputs produce
byte-identical emissions.  Wall-time metadata is kept on the report object
but excluded from equality and from emission, which keeps re-parsed reports
exactly equal to the originals and repeated runs byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .counting import DeterminantClass

CSV_COLUMNS = ("ring", "q", "e", "n", "shape", "class",
               "formula", "oracle", "applicable", "match")


def _cell_sort_key(cell: "CellResult"):
    return (cell.ring, cell.n, cell.shape, DeterminantClass.parse(cell.det_class))


def _opt_int_str(v: int | None) -> str:
    return "" if v is None else str(v)


def _opt_bool_str(v: bool | None) -> str:
    return "" if v is None else ("true" if v else "false")


def _parse_opt_int(s: str) -> int | None:
    return None if s == "" else int(s)


def _parse_opt_bool(s: str) -> bool | None:
    if s == "":
        return None
    if s in ("true", "false"):
        return s == "true"
    raise ValueError(f"expected true/false/empty, got {s!r}")


@dataclass(frozen=True)
class CellResult:
    """One grid cell: formula vs oracle for a (ring, n, shape, class).

    ``match`` is None unless both values are present; a False match means a
    theorem failed to verify, which signals an implementation bug.
    """

    ring: str
    q: int
    e: int
    n: int
    shape: str
    det_class: str
    formula: int | None
    oracle: int | None
    applicable: bool
    match: bool | None

    def to_row(self) -> dict[str, str]:
        return {
            "ring": self.ring,
            "q": str(self.q),
            "e": str(self.e),
            "n": str(self.n),
            "shape": self.shape,
            "class": self.det_class,
            "formula": _opt_int_str(self.formula),
            "oracle": _opt_int_str(self.oracle),
            "applicable": "true" if self.applicable else "false",
            "match": _opt_bool_str(self.match),
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "CellResult":
        return cls(
            ring=row["ring"],
            q=int(row["q"]),
            e=int(row["e"]),
            n=int(row["n"]),
            shape=row["shape"],
            det_class=row["class"],
            formula=_parse_opt_int(row["formula"]),
            oracle=_parse_opt_int(row["oracle"]),
            applicable=row["applicable"] == "true",
            match=_parse_opt_bool(row["match"]),
        )

    def to_json_obj(self) -> dict:
        # counts stay decimal strings (arbitrary precision safe); the small
        # structural fields use native JSON types
        return {
            "ring": self.ring,
            "q": self.q,
            "e": self.e,
            "n": self.n,
            "shape": self.shape,
            "class": self.det_class,
            "formula": None if self.formula is None else str(self.formula),
            "oracle": None if self.oracle is None else str(self.oracle),
            "applicable": self.applicable,
            "match": self.match,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CellResult":
        return cls(
            ring=obj["ring"],
            q=obj["q"],
            e=obj["e"],
            n=obj["n"],
            shape=obj["shape"],
            det_class=obj["class"],
            formula=None if obj["formula"] is None else int(obj["formula"]),
            oracle=None if obj["oracle"] is None else int(obj["oracle"]),
            applicable=obj["applicable"],
            match=obj["match"],
        )


@dataclass
class VerificationReport:
    """Formula-vs-oracle results over a query grid."""

    cells: list[CellResult]
    cap: int
    elapsed_seconds: float | None = field(default=None, compare=False)

    def __post_init__(self):
        self.cells = sorted(self.cells, key=_cell_sort_key)

    @property
    def all_match(self) -> bool:
        return not any(c.match is False for c in self.cells)

    def mismatches(self) -> list[CellResult]:
        return [c for c in self.cells if c.match is False]

    def to_json(self) -> str:
        payload = {
            "kind": "verification",
            "cap": str(self.cap),
            "cells": [c.to_json_obj() for c in self.cells],
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        payload = json.loads(text)
        if payload.get("kind") != "verification":
            raise ValueError(f"not a verification report: {payload.get('kind')!r}")
        return cls(
            cells=[CellResult.from_json_obj(r) for r in payload["cells"]],
            cap=int(payload["cap"]),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# chaindet verification cap={self.cap}\n")
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for c in self.cells:
            writer.writerow(c.to_row())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "VerificationReport":
        lines = text.splitlines()
        cap = None
        body = []
        for line in lines:
            if line.startswith("#"):
                if "cap=" in line:
                    cap = int(line.split("cap=", 1)[1].strip())
                continue
            body.append(line)
        if cap is None:
            raise ValueError("missing cap metadata line")
        reader = csv.DictReader(io.StringIO("\n".join(body)))
        return cls(cells=[CellResult.from_row(r) for r in reader], cap=cap)


@dataclass(frozen=True)
class ConjectureCell:
    """Scan outcome for one (ring, n) cell."""

    ring: str
    n: int
    status: str  # consistent | counterexample | skipped
    detail: str

    def to_row(self) -> dict[str, str]:
        return {"ring": self.ring, "n": str(self.n),
                "status": self.status, "detail": self.detail}

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "ConjectureCell":
        return cls(row["ring"], int(row["n"]), row["status"], row["detail"])


@dataclass
class ConjectureReport:
    """Outcome of a conjecture scan over a cell grid."""

    conjecture: str
    cells: list[ConjectureCell]
    cap: int
    elapsed_seconds: float | None = field(default=None, compare=False)

    def __post_init__(self):
        self.cells = sorted(self.cells, key=lambda c: (c.ring, c.n))

    @property
    def has_counterexample(self) -> bool:
        return any(c.status == "counterexample" for c in self.cells)

    def counterexamples(self) -> list[ConjectureCell]:
        return [c for c in self.cells if c.status == "counterexample"]

    def to_json(self) -> str:
        payload = {
            "kind": "conjecture-scan",
            "conjecture": self.conjecture,
            "cap": str(self.cap),
            "cells": [c.to_row() for c in self.cells],
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ConjectureReport":
        payload = json.loads(text)
        if payload.get("kind") != "conjecture-scan":
            raise ValueError(f"not a conjecture report: {payload.get('kind')!r}")
        return cls(
            conjecture=payload["conjecture"],
            cells=[ConjectureCell.from_row(r) for r in payload["cells"]],
            cap=int(payload["cap"]),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# chaindet conjecture={self.conjecture} cap={self.cap}\n")
        writer = csv.DictWriter(
            buf, fieldnames=("ring", "n", "status", "detail"), lineterminator="\n"
        )
        writer.writeheader()
        for c in self.cells:
            writer.writerow(c.to_row())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ConjectureReport":
        lines = text.splitlines()
        conjecture, cap = None, None
        body = []
        for line in lines:
            if line.startswith("#"):
                for token in line[1:].split():
                    if token.startswith("conjecture="):
                        conjecture = token.split("=", 1)[1]
                    elif token.startswith("cap="):
                        cap = int(token.split("=", 1)[1])
                continue
            body.append(line)
        if conjecture is None or cap is None:
            raise ValueError("missing conjecture metadata line")
        reader = csv.DictReader(io.StringIO("\n".join(body)))
        return cls(conjecture=conjecture,
                   cells=[ConjectureCell.from_row(r) for r in reader], cap=cap)
