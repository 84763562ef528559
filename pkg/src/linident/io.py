"""Stable on-disk formats: series files and structured JSON documents.

Series files are plain text, one decimal number per line; lines starting
with '#' are comments, and a ``# step=<float>`` header records the sampling
step. Structured documents (system specs, models, reports) are JSON with a
``format_version`` field, sorted keys and floats printed to 17 significant
digits, which makes serialization byte-deterministic and doubles round-trip
losslessly.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import EmptySeries, ParseError
from .dynsys import SystemSpec, TimeSeries
from .ident import IdentReport, PredictionModel

FORMAT_VERSION = 1

__all__ = [
    "FORMAT_VERSION",
    "dumps",
    "model_to_dict",
    "model_from_dict",
    "read_model",
    "read_report",
    "read_series",
    "read_system",
    "write_model",
    "write_report",
    "write_series",
    "write_system",
]


def read_series(path) -> TimeSeries:
    """Parse a series file; reports the 1-based line of the first bad value."""
    values = []
    step = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.startswith("step="):
                    try:
                        step = float(body[len("step="):])
                    except ValueError as exc:
                        raise ParseError(f"bad step value at line {lineno}", line=lineno) from exc
                continue
            try:
                v = float(line)
            except ValueError as exc:
                raise ParseError(f"bad sample {line!r} at line {lineno}", line=lineno) from exc
            if not math.isfinite(v):
                raise ParseError(f"non-finite sample at line {lineno}", line=lineno)
            values.append(v)
    if not values:
        raise EmptySeries(f"no samples in {path}")
    return TimeSeries(np.array(values), step=step)


def write_series(series: TimeSeries, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if series.step is not None:
            fh.write(f"# step={_fmt(series.step)}\n")
        for v in series.values:
            fh.write(_fmt(v) + "\n")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, 17-significant-digit floats."""
    return _dump(obj) + "\n"


def _dump(obj) -> str:
    if isinstance(obj, dict):
        items = sorted(obj.items())
        body = ", ".join(json.dumps(str(k)) + ": " + _dump(v) for k, v in items)
        return "{" + body + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def write_report(report: dict, path) -> None:
    """Write any dict-shaped document deterministically."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(report))


def read_report(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad document {path}: {exc}", line=exc.lineno) from exc


def write_system(sys: SystemSpec, path) -> None:
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": sys.kind,
        "A": sys.a,
        "c": sys.c,
    }
    if sys.b is not None:
        doc["b"] = sys.b
    if sys.step is not None:
        doc["step"] = sys.step
    write_report(doc, path)


def read_system(path) -> SystemSpec:
    doc = read_report(path)
    try:
        return SystemSpec(
            kind=doc["kind"],
            a=np.array(doc["A"], dtype=float),
            c=np.array(doc["c"], dtype=float),
            b=np.array(doc["b"], dtype=float) if "b" in doc else None,
            step=float(doc["step"]) if "step" in doc else None,
        )
    except KeyError as exc:
        raise ParseError(f"system file {path} is missing field {exc}") from exc


def model_to_dict(report: IdentReport) -> dict:
    model = report.model
    doc = {
        "format_version": FORMAT_VERSION,
        "order": model.order,
        "coeffs": model.coeffs,
        "residual": report.residual,
        "condition_estimate": report.condition_estimate,
        "window_start": report.window_start,
    }
    if model.offset is not None:
        doc["offset"] = model.offset
    if model.step is not None:
        doc["step"] = model.step
    return doc


def model_from_dict(doc: dict) -> PredictionModel:
    try:
        return PredictionModel(
            coeffs=np.array(doc["coeffs"], dtype=float),
            offset=float(doc["offset"]) if "offset" in doc else None,
            step=float(doc["step"]) if "step" in doc else None,
        )
    except KeyError as exc:
        raise ParseError(f"model document is missing field {exc}") from exc


def write_model(report: IdentReport, path) -> None:
    write_report(model_to_dict(report), path)


def read_model(path) -> PredictionModel:
    return model_from_dict(read_report(path))
