"""Persisted closed-point censuses.

One JSON document per (curve, degree bound), carrying a content digest
and written atomically (temp file, then rename), so a crashed run can
never leave behind a half-written census that a later run would trust.
A file that fails any validation step raises CacheError and is never
silently used.
"""

import hashlib
import json
import os
import tempfile

from ..algebra import FiniteField
from .curves import ClosedPoint, EllipticCurveFq, enumerate_closed_points

CENSUS_VERSION = 1


class CacheError(RuntimeError):
    """A cache file that cannot be trusted (corrupt, stale, or mismatched)."""

    def __init__(self, path, reason, digest=None):
        super().__init__("%s: %s" % (path, reason))
        self.path = path
        self.reason = reason
        self.digest = digest


def default_cache_dir():
    env = os.environ.get("ENDOKIT_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "endokit")


def _curve_payload(curve):
    return {
        "p": curve.field.p,
        "m": curve.field.d,
        "a2": curve.a2.index(),
        "a4": curve.a4.index(),
        "a6": curve.a6.index(),
    }


def _encode_point(P):
    if P is None:
        return None
    return [P[0].index(), P[1].index()]


def content_digest(doc):
    """sha256 over the canonical serialization, digest field excluded."""
    body = {k: v for k, v in doc.items() if k != "digest"}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def cache_path(cache_dir, curve, N):
    c = _curve_payload(curve)
    name = "census-p%d-m%d-a2_%d-a4_%d-a6_%d-N%d.json" % (
        c["p"], c["m"], c["a2"], c["a4"], c["a6"], N)
    return os.path.join(cache_dir, name)


def write_census(cache_dir, curve, N, closed_points):
    os.makedirs(cache_dir, exist_ok=True)
    doc = {
        "censusVersion": CENSUS_VERSION,
        "curve": _curve_payload(curve),
        "degreeBound": N,
        "points": [
            {
                "degree": cp.degree,
                "rep": _encode_point(cp.rep),
                "orbit": [_encode_point(P) for P in cp.orbit],
            }
            for cp in closed_points
        ],
    }
    doc["digest"] = content_digest(doc)
    path = cache_path(cache_dir, curve, N)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=".census-",
                               suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_census(path, curve=None, N=None):
    """Parse and validate a census document; CacheError on any defect."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CacheError(path, "unreadable census: %s" % exc)
    if not isinstance(doc, dict):
        raise CacheError(path, "census is not an object")
    for key in ("censusVersion", "curve", "degreeBound", "points", "digest"):
        if key not in doc:
            raise CacheError(path, "missing field %r" % key)
    if doc["censusVersion"] != CENSUS_VERSION:
        raise CacheError(path, "census version %r, expected %r"
                         % (doc["censusVersion"], CENSUS_VERSION))
    digest = content_digest(doc)
    if digest != doc["digest"]:
        raise CacheError(path, "digest mismatch: stored %s, computed %s"
                         % (doc["digest"], digest), digest=digest)
    if curve is not None and doc["curve"] != _curve_payload(curve):
        raise CacheError(path, "census is for a different curve",
                         digest=digest)
    if N is not None and doc["degreeBound"] != N:
        raise CacheError(path, "census degree bound %r, wanted %r"
                         % (doc["degreeBound"], N), digest=digest)
    return doc


def restore_points(doc, path="<census>"):
    """Rebuild (curve, closed points) from a validated document, checking
    each orbit lies on the curve with a canonical representative."""
    c = doc["curve"]
    base = FiniteField(c["p"], c["m"])
    curve = EllipticCurveFq(base, base.element(c["a4"]),
                            base.element(c["a6"]), base.element(c["a2"]))
    out = []
    for entry in doc["points"]:
        d = entry["degree"]
        ext = FiniteField(c["p"], c["m"] * d)

        def decode(item):
            if item is None:
                return None
            return (ext.element(item[0]), ext.element(item[1]))

        orbit = [decode(i) for i in entry["orbit"]]
        if len(orbit) != d:
            raise CacheError(path, "orbit of size %d tagged degree %d"
                             % (len(orbit), d))
        for P in orbit:
            if not curve.contains(P):
                raise CacheError(path, "stored point %r is off the curve"
                                 % (entry,))
        cp = ClosedPoint(curve, orbit)
        if _encode_point(cp.rep) != entry["rep"]:
            raise CacheError(path, "non-canonical representative in %r"
                             % (entry,))
        out.append(cp)
    return curve, out


def cached_closed_points(curve, N, cache_dir):
    """enumerate_closed_points with a read-through census cache."""
    path = cache_path(cache_dir, curve, N)
    if os.path.exists(path):
        doc = load_census(path, curve, N)
        _, points = restore_points(doc, path)
        return points
    points = enumerate_closed_points(curve, N)
    write_census(cache_dir, curve, N, points)
    return points


def _census_files(cache_dir):
    if not os.path.isdir(cache_dir):
        return []
    return sorted(
        os.path.join(cache_dir, name)
        for name in os.listdir(cache_dir)
        if name.startswith("census-") and name.endswith(".json"))


def list_cache(cache_dir):
    """One record per census file: digest and key, or the defect found."""
    records = []
    for path in _census_files(cache_dir):
        try:
            doc = load_census(path)
            records.append({
                "path": path,
                "status": "ok",
                "digest": doc["digest"],
                "curve": doc["curve"],
                "degreeBound": doc["degreeBound"],
                "pointCount": len(doc["points"]),
            })
        except CacheError as exc:
            records.append({
                "path": path,
                "status": "corrupt",
                "reason": exc.reason,
                "digest": exc.digest,
            })
    return records


def clear_cache(cache_dir):
    """Remove all census files; clearing an empty cache is a no-op."""
    removed = 0
    for path in _census_files(cache_dir):
        os.unlink(path)
        removed += 1
    return removed


def verify_cache(cache_dir):
    """Re-run the census identity for every stored file.

    For each degree n up to the stored bound, sum_{m | n} m * N_m from
    the file must equal an independent exhaustive recount of
    #E(F_{q^n}).
    """
    records = []
    for path in _census_files(cache_dir):
        try:
            doc = load_census(path)
            curve, points = restore_points(doc, path)
            N = doc["degreeBound"]
            by_degree = {}
            for cp in points:
                by_degree[cp.degree] = by_degree.get(cp.degree, 0) + 1
            for n in range(1, N + 1):
                lhs = sum(m * by_degree.get(m, 0)
                          for m in range(1, n + 1) if n % m == 0)
                ext = FiniteField(curve.field.p, curve.field.d * n)
                rhs = curve.point_count(ext)
                if lhs != rhs:
                    raise CacheError(
                        path, "census identity fails at degree %d: %d vs "
                        "recount %d" % (n, lhs, rhs), digest=doc["digest"])
            records.append({"path": path, "status": "ok",
                            "digest": doc["digest"]})
        except CacheError as exc:
            records.append({"path": path, "status": "corrupt",
                            "reason": exc.reason, "digest": exc.digest})
    return records
