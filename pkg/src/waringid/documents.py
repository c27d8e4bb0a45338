"""Input and report documents.

Two input syntaxes are accepted:

* JSON object with keys ``n``, ``d`` (default 4), ``points`` (list of rows) and
  optional ``weights``;
* bare CSV, one point per line, ``n`` inferred from the row length. Blank lines
  and ``#`` comments are skipped.

Scalars are integers or ``"p/q"`` literals anywhere.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import InputError
from .exactlin import as_rational

REPORT_SCHEMA = "waringid.report/1"


class DocumentError(InputError):
    """Parse failure carrying a 1-based line/column position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class InputDocument:
    n: int
    d: int
    points: tuple[tuple[Fraction, ...], ...]
    weights: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"n must be >= 0, got {self.n}")
        if self.d < 0:
            raise InputError(f"d must be >= 0, got {self.d}")
        for i, row in enumerate(self.points):
            if len(row) != self.n + 1:
                raise InputError(f"point {i} has {len(row)} coordinates, expected n+1 = {self.n + 1}")
        if self.weights is not None and len(self.weights) != len(self.points):
            raise InputError(f"{len(self.weights)} weights for {len(self.points)} points")

    @classmethod
    def build(cls, points: Sequence[Sequence[Any]], n: int | None = None, d: int = 4,
              weights: Sequence[Any] | None = None) -> InputDocument:
        rows = tuple(tuple(as_rational(x) for x in row) for row in points)
        if n is None:
            if not rows:
                raise InputError("cannot infer n without points")
            n = len(rows[0]) - 1
        ws = None if weights is None else tuple(as_rational(w) for w in weights)
        return cls(n=n, d=d, points=rows, weights=ws)


def _scalar_json(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def document_to_dict(doc: InputDocument) -> dict:
    out: dict[str, Any] = {
        "n": doc.n,
        "d": doc.d,
        "points": [[_scalar_json(x) for x in row] for row in doc.points],
    }
    if doc.weights is not None:
        out["weights"] = [_scalar_json(w) for w in doc.weights]
    return out


def serialize_document(doc: InputDocument) -> str:
    return json.dumps(document_to_dict(doc), sort_keys=True, indent=None, separators=(", ", ": ")) + "\n"


def document_digest(doc: InputDocument) -> str:
    canon = json.dumps(document_to_dict(doc), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


def _json_scalar(value: Any, where: str) -> Fraction:
    if isinstance(value, float) or isinstance(value, bool):
        raise InputError(f"{where}: {value!r} is not an integer or 'p/q' literal")
    if not isinstance(value, (int, str)):
        raise InputError(f"{where}: expected a scalar, got {type(value).__name__}")
    try:
        return as_rational(value)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _parse_json(text: str) -> InputDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(obj, dict):
        raise DocumentError("top-level JSON value must be an object", 1, 1)
    unknown = set(obj) - {"n", "d", "points", "weights"}
    if unknown:
        raise InputError(f"unknown keys: {', '.join(sorted(unknown))}")
    if "points" not in obj or not isinstance(obj["points"], list):
        raise InputError("'points' must be a list of coordinate rows")
    points = []
    for i, row in enumerate(obj["points"]):
        if not isinstance(row, list):
            raise InputError(f"points[{i}] must be a list")
        points.append(tuple(_json_scalar(x, f"points[{i}][{k}]") for k, x in enumerate(row)))
    n = obj.get("n")
    d = obj.get("d", 4)
    for key, val in (("n", n), ("d", d)):
        if val is not None and (isinstance(val, bool) or not isinstance(val, int)):
            raise InputError(f"'{key}' must be an integer")
    weights = obj.get("weights")
    if weights is not None:
        if not isinstance(weights, list):
            raise InputError("'weights' must be a list")
        weights = [_json_scalar(w, f"weights[{i}]") for i, w in enumerate(weights)]
    return InputDocument.build(points, n=n, d=d, weights=weights)


def _parse_csv(text: str) -> InputDocument:
    points = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = []
        col = 1
        for field_text in line.split(","):
            token = field_text.strip()
            start = col + (len(field_text) - len(field_text.lstrip()))
            try:
                if not token:
                    raise InputError("empty field")
                row.append(as_rational(token))
            except InputError:
                raise DocumentError(f"not an integer or 'p/q' literal: {token!r}", lineno, start) from None
            col += len(field_text) + 1
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DocumentError(f"row has {len(row)} entries, expected {width}", lineno, 1)
        points.append(tuple(row))
    if not points:
        raise DocumentError("no points found", 1, 1)
    return InputDocument.build(points)


def parse_document(text: str) -> InputDocument:
    """Parse either syntax; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_csv(text)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
