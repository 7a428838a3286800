"""Certificate reports and their deterministic serialization.

Every checker returns a CertificateReport: a verdict string from a small
closed vocabulary, the parameters it ran with, and per-row diagnostics.
Serialization is byte-deterministic: keys are emitted in sorted order,
floats as 12-significant-digit decimal strings, LogScalar values as that
string plus the raw (sign, logmag) pair so nothing is lost to rounding.
No timestamps, no environment echo.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import Any

from .numerics import LogScalar

# verdict vocabulary, grouped by how the CLI exit code reads them
POSITIVE_VERDICTS = {
    "certified-at-horizon",
    "condition-B-holds-at-horizon",
    "witnessed",
    "witness-found",
    "falsified-at-horizon",      # ACB falsification searches *want* a falsifier
    "condition-A-holds-at-horizon",
    "passes-at-horizon",
    "agrees",
}
NEGATIVE_VERDICTS = {
    "refuted-at-horizon",
    "condition-failed",
    "condition-A-refuted-at-horizon",
    "no-witness-found-at-horizon",
    "no-falsifier-found-at-horizon",
    "not-certified-at-horizon",
    "mismatch",
}
INCONCLUSIVE_VERDICTS = {
    "inconclusive",
    "not-witnessed-at-depth",
}


def fmt_float(x: float) -> str:
    return f"{float(x):.12g}"


def fmt_value(v: Any) -> Any:
    """Normalize one report value for serialization."""
    if isinstance(v, LogScalar):
        return {"decimal": v.decimal_str(), "sign": v.sign,
                "logmag": fmt_float(v.logmag)}
    if isinstance(v, bool):
        return v
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, int):
        return v
    if isinstance(v, (list, tuple)):
        return [fmt_value(u) for u in v]
    if isinstance(v, dict):
        return {str(k): fmt_value(u) for k, u in sorted(v.items(), key=lambda kv: str(kv[0]))}
    return str(v)


@dataclass
class CertificateReport:
    kind: str
    verdict: str
    params: dict = field(default_factory=dict)
    rows: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def row_columns(self) -> list[str]:
        cols: list[str] = []
        for r in self.rows:
            for key in r:
                if key not in cols:
                    cols.append(key)
        return cols

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "params": fmt_value(self.params),
            "rows": [fmt_value(r) for r in self.rows],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        cols = self.row_columns()
        buf = io.StringIO()
        buf.write(",".join(cols) + "\n")
        for r in self.rows:
            cells = []
            for c in cols:
                v = fmt_value(r.get(c, ""))
                if isinstance(v, dict):  # LogScalar -> its decimal form in csv
                    v = v["decimal"]
                cells.append(str(v))
            buf.write(",".join(cells) + "\n")
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"check: {self.kind}", f"verdict: {self.verdict}"]
        for k in sorted(self.params, key=str):
            lines.append(f"param {k} = {_flat(fmt_value(self.params[k]))}")
        for r in self.rows:
            cells = [f"{k}={_flat(fmt_value(v))}" for k, v in r.items()]
            lines.append("  " + " ".join(cells))
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def _flat(v: Any) -> str:
    if isinstance(v, dict) and "decimal" in v:
        return v["decimal"]
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    if isinstance(v, list):
        return "[" + ",".join(_flat(u) for u in v) + "]"
    return str(v)


def verdict_exit_code(verdict: str) -> int:
    if verdict in POSITIVE_VERDICTS:
        return 0
    if verdict in NEGATIVE_VERDICTS:
        return 1
    if verdict in INCONCLUSIVE_VERDICTS:
        return 2
    return 3
