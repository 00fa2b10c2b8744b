"""Report envelopes and their JSON, text and CSV renderings.

Exact values are written as "P/Q" strings, never floats; Poisson comparisons
keep their float tails next to the tolerance used.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .dominance import POISSON_TOL, Distribution
from .graph import Graph

SCHEMA_VERSION = 1

# Every JSON report has this shape; `result` is free-form but JSON-only.
REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "config", "holds", "result"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"type": "string"},
        "config": {"type": "object"},
        "holds": {"type": ["boolean", "null"]},
        "tolerance": {"type": "number"},
        "result": {},
    },
    "additionalProperties": False,
}


def fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if obj == obj and abs(obj) != float("inf") else repr(obj)
    if isinstance(obj, Fraction):
        return fmt_fraction(obj)
    if isinstance(obj, Graph):
        return obj.to_graph6()
    if isinstance(obj, Distribution):
        return {str(k): fmt_fraction(v) for k, v in obj.pmf.items()}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        if hasattr(type(obj), "holds") and isinstance(getattr(type(obj), "holds"), property):
            out["holds"] = bool(obj.holds)
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if hasattr(obj, "name"):
        return obj.name
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(kind: str, config: dict, result, holds=None, tolerance: float = POISSON_TOL) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": kind,
        "config": to_jsonable(config),
        "holds": holds,
        "tolerance": tolerance,
        "result": to_jsonable(result),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(report: dict) -> str:
    """Aligned key/value lines; nested structures are flattened with dotted keys."""
    flat = []

    def walk(prefix, x):
        if isinstance(x, dict) and x:
            for k, v in x.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(x, list) and x and any(isinstance(v, (dict, list)) for v in x):
            for i, v in enumerate(x):
                walk(f"{prefix}[{i}]", v)
        else:
            flat.append((prefix, json.dumps(x) if not isinstance(x, str) else x))

    walk("", {"kind": report["kind"], "holds": report["holds"], "config": report["config"],
              "result": report["result"]})
    width = max(len(k) for k, _ in flat)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in flat)


def render_csv(header: list[str], rows: list[list]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in rows:
        writer.writerow([to_jsonable(v) if not isinstance(v, float) else repr(v) for v in r])
    return buf.getvalue()
