"""Report serialization: deterministic JSON, CSV tables, label helpers.

Reports are written with sorted keys and no timestamps, so identical
configuration and seed give byte-identical files; the content digest is
the sha256 of exactly those bytes.  Wall-clock data goes into a sibling
``*.meta.json`` that is excluded from the digest.
"""

import csv
import hashlib
import json
import os
from datetime import datetime, timezone
from fractions import Fraction

from ..algebra import CyclotomicValue


def value_label(value):
    """Compact exact rendering of a scalar for reports and CSV cells."""
    if isinstance(value, CyclotomicValue):
        if value.is_rational():
            return str(value.as_fraction())
        return repr(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return repr(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def point_label(cp):
    if cp.is_infinity:
        return "inf"
    x, y = cp.rep
    if cp.degree == 1:
        return "(%d,%d)" % (x.index(), y.index())
    return "deg%d(%d,%d)" % (cp.degree, x.index(), y.index())


def divisor_label(divisor):
    items = divisor.items()
    if not items:
        return "0"
    parts = []
    for cp, mult in items:
        base = point_label(cp)
        parts.append(base if mult == 1 else "%d*%s" % (mult, base))
    return "+".join(parts)


def jsonable(value):
    """Recursively convert witnesses to JSON-safe structures."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, (Fraction, complex, CyclotomicValue)):
        return value_label(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def report_document(config, records, artifacts):
    """The report body: config echo, ordered check records, summary."""
    summary = {"pass": 0, "fail": 0, "inconclusive": 0}
    entries = []
    for rec in records:
        summary[rec.status] += 1
        entries.append({
            "name": rec.name,
            "claim": rec.claim,
            "status": rec.status,
            "witness": jsonable(rec.witness),
        })
    doc = {
        "tool": "endokit",
        "command": config.command,
        "config": config.echo(),
        "records": entries,
        "summary": summary,
        "artifacts": sorted(artifacts),
        "allPassed": summary["fail"] == 0 and summary["inconclusive"] == 0,
    }
    doc["digest"] = "sha256:" + hashlib.sha256(
        canonical_bytes(doc)).hexdigest()
    return doc


def canonical_bytes(doc):
    body = {k: v for k, v in doc.items() if k != "digest"}
    return json.dumps(body, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True).encode("utf-8")


def write_report(out_dir, stem, doc, elapsed):
    """Write ``<stem>.json`` (deterministic) and ``<stem>.meta.json``
    (timestamp and timing, outside the digest).  Returns both paths."""
    os.makedirs(out_dir, exist_ok=True)
    report_path = os.path.join(out_dir, stem + ".json")
    with open(report_path, "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1, ensure_ascii=True)
        fh.write("\n")
    meta_path = os.path.join(out_dir, stem + ".meta.json")
    meta = {
        "digest": doc["digest"],
        "timestampUtc": datetime.now(timezone.utc).isoformat(),
        "elapsedSeconds": round(elapsed, 3),
    }
    with open(meta_path, "w") as fh:
        json.dump(meta, fh, sort_keys=True, indent=1)
        fh.write("\n")
    return report_path, meta_path


def write_artifacts(out_dir, artifacts):
    """Write CSV/SVG artifacts; returns the list of paths written."""
    paths = []
    os.makedirs(out_dir, exist_ok=True)
    for name in sorted(artifacts):
        kind = artifacts[name][0]
        path = os.path.join(out_dir, name)
        if kind == "csv":
            _, header, rows = artifacts[name]
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(header)
                writer.writerows(rows)
        elif kind == "svg":
            _, text = artifacts[name]
            with open(path, "w") as fh:
                fh.write(text)
        else:
            raise ValueError("unknown artifact kind %r" % (kind,))
        paths.append(path)
    return paths
