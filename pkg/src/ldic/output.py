"""Machine-readable document builders and their inverse parsers.

Every rational value is serialized twice: an exact lowest-terms
"numerator/denominator" string, and a 6-decimal approximation in a parallel
``*_decimal`` field for spreadsheet convenience. Bit vectors become 0/1
strings with the most significant level first. Golden files therefore never
contain binary floating point.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .bounds import Bound, BoundSet, Constraint
from .metrics import MetricSurface, MetricsResult
from .params import ChannelParams
from .polytope import RatePoint, RatePolytope
from .sim import SessionResult, SimConfig

SCHEMA_VERSION = "1"


def format_rational(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value) -> str:
    scaled = round(Fraction(value) * 10**6)
    sign = "-" if scaled < 0 else ""
    return f"{sign}{abs(scaled) // 10**6}.{abs(scaled) % 10**6:06d}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def bit_string(vector) -> str:
    return "".join(str(bit) for bit in vector)


def parse_bit_string(text: str) -> tuple:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"bit string must contain only 0 and 1, got {text!r}")
    return tuple(int(ch) for ch in text)


def _rational_fields(name: str, value) -> dict:
    return {name: format_rational(value), f"{name}_decimal": format_decimal(value)}


def params_payload(params: ChannelParams) -> dict:
    return {
        "fwd11": params.fwd11,
        "fwd22": params.fwd22,
        "inr12": params.inr12,
        "inr21": params.inr21,
        "fb11": params.fb11,
        "fb22": params.fb22,
    }


def _document(params: ChannelParams, key: str, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "params": params_payload(params), key: payload}


def region_document(params: ChannelParams, poly: RatePolytope) -> dict:
    bounds = [
        {
            "r1_coeff": c.r1_coeff,
            "r2_coeff": c.r2_coeff,
            "rhs": c.rhs,
            "source": c.source.value if c.source is not None else None,
        }
        for c in poly.bounds.constraints
    ]
    vertices = [
        {**_rational_fields("r1", v.r1), **_rational_fields("r2", v.r2)}
        for v in poly.vertices
    ]
    return _document(params, "region", {"bounds": bounds, "vertices": vertices})


def parse_region_document(document):
    """Exact inverse of region_document; accepts a dict or JSON text."""
    if isinstance(document, str):
        document = json.loads(document)
    if document.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {document.get('schema_version')!r}")
    params = ChannelParams(**document["params"])
    constraints = tuple(
        Constraint(
            r1_coeff=row["r1_coeff"],
            r2_coeff=row["r2_coeff"],
            rhs=row["rhs"],
            source=Bound(row["source"]) if row["source"] is not None else None,
        )
        for row in document["region"]["bounds"]
    )
    vertices = tuple(
        RatePoint(parse_rational(row["r1"]), parse_rational(row["r2"]))
        for row in document["region"]["vertices"]
    )
    return params, BoundSet(constraints), vertices


REGION_CSV_COLUMNS = (
    "kind", "r1_coeff", "r2_coeff", "rhs", "source", "r1", "r1_decimal", "r2", "r2_decimal",
)


def region_csv(params: ChannelParams, poly: RatePolytope) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REGION_CSV_COLUMNS)
    for c in poly.bounds.constraints:
        source = c.source.value if c.source is not None else ""
        writer.writerow(["bound", c.r1_coeff, c.r2_coeff, c.rhs, source, "", "", "", ""])
    for v in poly.vertices:
        writer.writerow(
            ["vertex", "", "", "", "",
             format_rational(v.r1), format_decimal(v.r1),
             format_rational(v.r2), format_decimal(v.r2)]
        )
    return buffer.getvalue()


def _metrics_fields(result: MetricsResult) -> dict:
    fields = {}
    fields.update(_rational_fields("delta1", result.delta1))
    fields.update(_rational_fields("delta2", result.delta2))
    fields.update(_rational_fields("sigma", result.sigma))
    return fields


def metrics_document(params: ChannelParams, result: MetricsResult, thresholds, useless: bool) -> dict:
    payload = _metrics_fields(result)
    payload["thresholds"] = [
        {"link": t.link, "threshold": t.threshold, "saturation": t.saturation}
        for t in thresholds
    ]
    payload["feedback_useless"] = useless
    return _document(params, "metrics", payload)


def surface_rows(surface: MetricSurface):
    # fb11-major, fb22-minor, both ascending
    for (fb11, fb22) in sorted(surface.cells):
        yield fb11, fb22, surface.cells[(fb11, fb22)]


def surface_document(params: ChannelParams, surface: MetricSurface) -> dict:
    rows = [
        {"fb11": fb11, "fb22": fb22, **_metrics_fields(cell)}
        for fb11, fb22, cell in surface_rows(surface)
    ]
    return _document(params, "surface", {"cells": rows})


SWEEP_CSV_COLUMNS = (
    "fb11", "fb22",
    "delta1", "delta1_decimal", "delta2", "delta2_decimal", "sigma", "sigma_decimal",
)


def sweep_csv(surface: MetricSurface) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for fb11, fb22, cell in surface_rows(surface):
        writer.writerow(
            [fb11, fb22,
             format_rational(cell.delta1), format_decimal(cell.delta1),
             format_rational(cell.delta2), format_decimal(cell.delta2),
             format_rational(cell.sigma), format_decimal(cell.sigma)]
        )
    return buffer.getvalue()


def session_document(
    cfg: SimConfig,
    scheme_name: str,
    seed,
    result: SessionResult,
    include_trace: bool = False,
) -> dict:
    m1, m2 = result.message_lengths
    payload = {
        "scheme": scheme_name,
        "delay": cfg.delay,
        "block_length": cfg.block_length,
        "q": cfg.q,
        "seed": seed,
        "message_lengths": [m1, m2],
        **_rational_fields("rate1", Fraction(m1, cfg.block_length)),
        **_rational_fields("rate2", Fraction(m2, cfg.block_length)),
        **_rational_fields("p1", result.p1),
        **_rational_fields("p2", result.p2),
        "messages": [bit_string(result.messages[0]), bit_string(result.messages[1])],
        "estimates": [bit_string(result.estimates[0]), bit_string(result.estimates[1])],
    }
    if include_trace:
        payload["trace"] = [
            {
                "x1": bit_string(step.x1),
                "x2": bit_string(step.x2),
                "y1": bit_string(step.y1),
                "y2": bit_string(step.y2),
                "fb1": bit_string(step.fb1),
                "fb2": bit_string(step.fb2),
            }
            for step in result.trace
        ]
    return _document(cfg.params, "session", payload)
