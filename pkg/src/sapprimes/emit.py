"""CSV and JSON serialisation of every dataset the CLI produces.

CSV output is UTF-8 with LF line endings, a header row and minimal
RFC 4180 quoting.  JSON output carries a ``kind`` key and fixed key order.
Exact rationals go out as JSON integers when integral and as ``"p/q"``
strings otherwise, so no float ever stands in for an exact value.
:func:`decode_json` reverses :func:`emit_json`.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

import numpy as np

from .conjecture import (ConjectureRecord, GapSeries, ScanResult, ScanSummary, TwinRecord,
                         WindowMode, format_ratio)
from .errors import DomainError
from .primes import PrimePair, PrimeTable
from .sap import ExtrapolationResult, ShiftIdentityCheck
from .stats import DistributionComparison, Histogram, SummaryStats

__all__ = ["emit_csv", "emit_json", "decode_json", "encode_rational", "decode_rational",
           "CSV_COLUMNS"]

CSV_COLUMNS = {
    "sieve": ("prime",),
    "extrapolation": ("steps_ahead", "value"),
    "shift_identity": ("n", "x", "y", "lhs", "rhs", "holds"),
    "conjecture_records": ("p_prev2", "p_prev1", "midpoint", "mode", "primes_found", "hit"),
    "scan_summary": ("mode", "min_midpoint", "total_pairs", "hits", "misses", "hit_rate",
                     "counterexamples"),
    "gaps": ("index", "diff", "zero"),
    "twins": ("p_small", "p_large", "difference", "condition_satisfied"),
    "histogram": ("bin", "lo", "hi", "count"),
    "comparison": ("bin", "lo", "hi", "count_condition", "count_all"),
}

_LIST_KINDS = {
    ExtrapolationResult: "extrapolation",
    ShiftIdentityCheck: "shift_identity",
    ConjectureRecord: "conjecture_records",
    TwinRecord: "twins",
}


def encode_rational(v) -> int | str:
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def decode_rational(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise DomainError(f"not an encoded rational: {v!r}")
    return Fraction(v)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _kind(data, kind: str | None) -> str:
    if kind is not None:
        return kind
    if isinstance(data, PrimeTable):
        return "sieve"
    if isinstance(data, ScanResult):
        return "scan"
    if isinstance(data, ScanSummary):
        return "scan_summary"
    if isinstance(data, GapSeries):
        return "gaps"
    if isinstance(data, Histogram):
        return "histogram"
    if isinstance(data, DistributionComparison):
        return "comparison"
    if isinstance(data, (list, tuple)):
        if not data:
            raise DomainError("cannot infer the record type of an empty list; pass kind=")
        for cls, name in _LIST_KINDS.items():
            if isinstance(data[0], cls):
                return name
    raise DomainError(f"don't know how to serialise {type(data).__name__}")


# --- CSV -------------------------------------------------------------------

def _record_row(r: ConjectureRecord):
    return (r.pair.p_prev2, r.pair.p_prev1, r.midpoint, r.mode.value,
            " ".join(map(str, r.primes_found)), _bool(r.hit))


def _csv_rows(data, kind: str):
    if kind == "sieve":
        return ((p,) for p in data)
    if kind == "extrapolation":
        return ((r.steps_ahead, encode_rational(r.value)) for r in data)
    if kind == "shift_identity":
        return ((c.n, encode_rational(c.x), encode_rational(c.y), encode_rational(c.lhs),
                 encode_rational(c.rhs), _bool(c.holds)) for c in data)
    if kind == "conjecture_records":
        return (_record_row(r) for r in data)
    if kind == "scan":
        return (_record_row(r) for r in data.records)
    if kind == "scan_summary":
        s = data
        return [(s.mode.value, s.min_midpoint, s.total_pairs, s.hits, s.misses,
                 s.hit_rate_text or "", " ".join(f"{p.p_prev2}:{p.p_prev1}" for p in s.counterexamples))]
    if kind == "gaps":
        return data.triples()
    if kind == "twins":
        return ((t.p_small, t.p_large, t.difference, _bool(t.condition_satisfied)) for t in data)
    if kind == "histogram":
        return ((i, encode_rational(lo), encode_rational(hi), c)
                for i, (lo, hi, c) in enumerate(data.bins(), start=1))
    if kind == "comparison":
        e = data.edges
        return ((i, encode_rational(e[i - 1]), encode_rational(e[i]), a, b)
                for i, (a, b) in enumerate(zip(data.histogram_condition.counts,
                                               data.histogram_all.counts), start=1))
    raise DomainError(f"unknown kind {kind!r}")


def emit_csv(data, kind: str | None = None) -> bytes:
    kind = _kind(data, kind)
    header = CSV_COLUMNS["conjecture_records" if kind == "scan" else kind]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(_csv_rows(data, kind))
    return buf.getvalue().encode("utf-8")


# --- JSON ------------------------------------------------------------------

def _record_obj(r: ConjectureRecord) -> dict:
    return {"p_prev2": r.pair.p_prev2, "p_prev1": r.pair.p_prev1, "midpoint": r.midpoint,
            "mode": r.mode.value, "primes_found": list(r.primes_found), "hit": r.hit}


def _summary_obj(s: ScanSummary) -> dict:
    return {
        "mode": s.mode.value,
        "min_midpoint": s.min_midpoint,
        "total_pairs": s.total_pairs,
        "hits": s.hits,
        "misses": s.misses,
        "hit_rate": s.hit_rate_text,
        "hit_fraction": [s.hits, s.total_pairs],
        "counterexamples": [[p.p_prev2, p.p_prev1] for p in s.counterexamples],
    }


def _stats_obj(s: SummaryStats) -> dict:
    return {"count": s.count, "min": s.min, "max": s.max, "mean": encode_rational(s.mean),
            "mean_decimal": format_ratio(s.mean.numerator, s.mean.denominator),
            "median": encode_rational(s.median)}


def _json_obj(data, kind: str) -> dict[str, Any]:
    if kind == "sieve":
        return {"limit": data.limit, "count": len(data), "primes": data.tolist()}
    if kind == "extrapolation":
        return {"results": [{"steps_ahead": r.steps_ahead, "value": encode_rational(r.value)}
                            for r in data]}
    if kind == "shift_identity":
        return {"checks": [{"n": c.n, "x": encode_rational(c.x), "y": encode_rational(c.y),
                            "lhs": encode_rational(c.lhs), "rhs": encode_rational(c.rhs),
                            "holds": c.holds} for c in data]}
    if kind == "conjecture_records":
        return {"records": [_record_obj(r) for r in data]}
    if kind == "scan":
        return {"summary": _summary_obj(data.summary),
                "records": [_record_obj(r) for r in data.records]}
    if kind == "scan_summary":
        return _summary_obj(data)
    if kind == "gaps":
        return {"source_primes": list(data.source_primes), "diffs": list(data.diffs),
                "triples": [list(t) for t in data.triples()]}
    if kind == "twins":
        return {"records": [{"p_small": t.p_small, "p_large": t.p_large,
                             "difference": t.difference,
                             "condition_satisfied": t.condition_satisfied} for t in data]}
    if kind == "histogram":
        return {"edges": [encode_rational(e) for e in data.edges], "counts": list(data.counts),
                "total": data.total}
    if kind == "comparison":
        return {
            "bins": data.histogram_all.bin_count,
            "shared_edges": data.shared_edges,
            "edges": [encode_rational(e) for e in data.edges],
            "condition": {"counts": list(data.histogram_condition.counts),
                          "total": data.histogram_condition.total,
                          "stats": _stats_obj(data.stats_condition)},
            "all": {"counts": list(data.histogram_all.counts),
                    "total": data.histogram_all.total,
                    "stats": _stats_obj(data.stats_all)},
        }
    raise DomainError(f"unknown kind {kind!r}")


def emit_json(data, kind: str | None = None) -> bytes:
    kind = _kind(data, kind)
    payload = {"kind": kind, **_json_obj(data, kind)}
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _record_from(o: dict) -> ConjectureRecord:
    return ConjectureRecord(PrimePair(o["p_prev2"], o["p_prev1"]), o["midpoint"],
                            WindowMode(o["mode"]), tuple(o["primes_found"]))


def _summary_from(o: dict) -> ScanSummary:
    return ScanSummary(WindowMode(o["mode"]), o["min_midpoint"], o["total_pairs"], o["hits"],
                       o["misses"], tuple(PrimePair(a, b) for a, b in o["counterexamples"]))


def _stats_from(o: dict) -> SummaryStats:
    return SummaryStats(o["count"], o["min"], o["max"], decode_rational(o["mean"]),
                        decode_rational(o["median"]))


def decode_json(text: str | bytes):
    """Rebuild the in-memory object that :func:`emit_json` serialised."""
    o = json.loads(text)
    kind = o.get("kind")
    if kind == "sieve":
        return PrimeTable(o["limit"], np.asarray(o["primes"], dtype=np.int64))
    if kind == "extrapolation":
        return [ExtrapolationResult(decode_rational(r["value"]), r["steps_ahead"])
                for r in o["results"]]
    if kind == "shift_identity":
        return [ShiftIdentityCheck(c["holds"], decode_rational(c["lhs"]), decode_rational(c["rhs"]),
                                   c["n"], decode_rational(c["x"]), decode_rational(c["y"]))
                for c in o["checks"]]
    if kind == "conjecture_records":
        return [_record_from(r) for r in o["records"]]
    if kind == "scan":
        return ScanResult(tuple(_record_from(r) for r in o["records"]), _summary_from(o["summary"]))
    if kind == "scan_summary":
        return _summary_from(o)
    if kind == "gaps":
        return GapSeries(tuple(o["source_primes"]))
    if kind == "twins":
        return [TwinRecord(t["p_small"], t["p_large"], t["difference"], t["condition_satisfied"])
                for t in o["records"]]
    if kind == "histogram":
        return Histogram(tuple(decode_rational(e) for e in o["edges"]), tuple(o["counts"]))
    if kind == "comparison":
        edges = tuple(decode_rational(e) for e in o["edges"])
        return DistributionComparison(
            Histogram(edges, tuple(o["condition"]["counts"])),
            Histogram(edges, tuple(o["all"]["counts"])),
            _stats_from(o["condition"]["stats"]),
            _stats_from(o["all"]["stats"]),
        )
    raise DomainError(f"unknown or missing kind {kind!r}")

