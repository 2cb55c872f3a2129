"""Serializable result records and the on-disk result cache.

Exact rationals travel as ``"num/den"`` strings so that a record re-read
from JSON reproduces its payload bit for bit.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__

CACHE_ENV = "CYCLESTATS_CACHE_DIR"
THREADS_ENV = "CYCLESTATS_THREADS"

SCAN_CSV_HEADER = ["q", "n", "r", "alpha", "S", "q_pow_n", "prob_num", "prob_den",
                   "model_num", "model_den", "deviation", "normalized_deviation"]


def rational_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def decimal_str(x, digits: int = 15) -> str:
    """Render with ``digits`` significant digits."""
    return f"{float(x):.{digits}g}"


@dataclass
class ResultRecord:
    command: str
    config: dict[str, Any]
    payload: dict[str, Any]
    provenance: str                      # exact | float | certified-bracket
    version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    cached: bool = False

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(asdict(self), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls(**json.loads(text))

    def cache_key(self) -> str:
        return cache_key(self.command, self.config)

    def to_csv(self) -> str:
        """Table rows when the payload has them, otherwise ``key,value`` pairs."""
        buf = io.StringIO()
        rows = self.payload.get("rows")
        if rows:
            header = list(rows[0].keys())
            writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        else:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["key", "value"])
            for key, value in self.payload.items():
                writer.writerow([key, json.dumps(value) if isinstance(value, (dict, list)) else value])
        return buf.getvalue()


def scan_row(report) -> dict[str, Any]:
    """One CSV/JSON row in the scan-sweep schema."""
    return {
        "q": report.q,
        "n": report.n,
        "r": report.r,
        "alpha": report.alpha_label,
        "S": report.S,
        "q_pow_n": report.q_pow_n,
        "prob_num": report.probability.numerator,
        "prob_den": report.probability.denominator,
        "model_num": report.model_value.numerator,
        "model_den": report.model_value.denominator,
        "deviation": decimal_str(report.deviation),
        "normalized_deviation": decimal_str(report.normalized_deviation),
    }


def cache_key(command: str, config: dict[str, Any]) -> str:
    blob = json.dumps({"version": __version__, "command": command, "config": config}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Content-addressed directory of JSON records."""

    def __init__(self, root: str | os.PathLike | None = None):
        root = root or os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "cyclestats"
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, command: str, config: dict[str, Any]) -> ResultRecord | None:
        path = self._path(cache_key(command, config))
        if not path.exists():
            return None
        record = ResultRecord.from_json(path.read_text())
        record.cached = True
        return record

    def put(self, record: ResultRecord) -> Path:
        path = self._path(record.cache_key())
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(record.to_json())
        tmp.replace(path)
        return path
