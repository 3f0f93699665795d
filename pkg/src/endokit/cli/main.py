"""Command-line entry point.

Exit status: 0 when every check passes, 1 when any check fails or is
inconclusive (and for corrupt cache entries under ``cache``), 2 for
configuration or input errors.  Errors are emitted as a JSON object on
standard error so callers never have to parse prose.
"""

import argparse
import json
import sys
import time

from ..funcfield import (
    CacheError,
    ResourceLimitError,
    clear_cache,
    default_cache_dir,
    list_cache,
    verify_cache,
)
from .config import (
    COMMANDS,
    ConfigError,
    RunConfig,
    load_config_file,
    merge_config,
)
from .output import write_artifacts, write_report
from .suites import suite_for

CONFIG_KEYS = ("a", "b", "sigma0", "w", "p", "m", "base_a", "base_b",
               "torsion", "char_order", "deg", "toy_n", "samples", "seed",
               "out", "cache_dir", "plot", "tolerances")


def _add_common(parser):
    parser.add_argument("--config", help="JSON config file; flags override")
    parser.add_argument("--out", help="output directory for reports")
    parser.add_argument("--seed", type=int, help="sampling seed")
    parser.add_argument("--samples", type=int,
                        help="sample count for randomized checks")
    parser.add_argument("--tol", action="append", metavar="NAME=VALUE",
                        help="tolerance override, repeatable")
    parser.add_argument("--cache-dir", dest="cache_dir",
                        help="census cache directory")


def _add_rational_curve(parser):
    parser.add_argument("--a", dest="a", help="rational coefficient a")
    parser.add_argument("--b", dest="b", help="rational coefficient b")


def _add_finite_curve(parser):
    parser.add_argument("--p", type=int, help="field characteristic")
    parser.add_argument("--m", type=int, help="base extension degree")
    parser.add_argument("--a", dest="base_a", type=int,
                        help="curve coefficient a over the finite field")
    parser.add_argument("--b", dest="base_b", type=int,
                        help="curve coefficient b over the finite field")
    parser.add_argument("--torsion", type=int,
                        help="two-torsion abscissa of the datum")
    parser.add_argument("--char-order", dest="char_order", type=int,
                        help="exact order of the cover character")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="endokit",
        description="verification suites for genus-one Hitchin fibers, "
                    "geometric endoscopy, and fractional Hecke "
                    "eigensystems")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hitchin", help="elliptic surface and fiber checks")
    _add_rational_curve(p)
    p.add_argument("--sigma0", help="nonzero ramification scale")
    p.add_argument("--w", help="base value, or 'all-singular'")
    p.add_argument("--plot", action="store_const", const=True,
                   help="emit SVG slice plots")
    _add_common(p)

    p = sub.add_parser("spectral",
                       help="spectral curves, Prym census, operators")
    _add_rational_curve(p)
    _add_common(p)

    p = sub.add_parser("endoscopy",
                       help="function-field Frobenius and eigenvalues")
    _add_finite_curve(p)
    p.add_argument("--deg", type=int, help="closed-point degree bound")
    _add_common(p)

    p = sub.add_parser("whittaker", help="coset parity criterion")
    _add_finite_curve(p)
    _add_common(p)

    p = sub.add_parser("fractional",
                       help="finite-group Fourier calculus fixtures")
    p.add_argument("--toy-n", dest="toy_n", type=int,
                   help="scalar order of the toy model")
    _add_common(p)

    p = sub.add_parser("verify-all", help="run every suite in order")
    _add_common(p)

    p = sub.add_parser("cache", help="census cache management")
    p.add_argument("action", choices=("list", "clear", "verify"))
    p.add_argument("--cache-dir", dest="cache_dir",
                   help="census cache directory")
    return parser


def _parse_tolerances(entries):
    if not entries:
        return None
    out = {}
    for entry in entries:
        if "=" not in entry:
            raise ConfigError("--tol expects NAME=VALUE, got %r" % entry)
        key, _, value = entry.partition("=")
        out[key.strip()] = value.strip()
    return out


def build_config(args):
    file_values = load_config_file(args.config) if args.config else {}
    flag_values = {key: getattr(args, key, None) for key in CONFIG_KEYS}
    flag_values["tolerances"] = _parse_tolerances(getattr(args, "tol",
                                                          None))
    file_tols = file_values.pop("tolerances", None)
    merged = merge_config(file_values, flag_values)
    if merged.get("tolerances") is None:
        merged["tolerances"] = file_tols
    elif file_tols:
        combined = dict(file_tols)
        combined.update(merged["tolerances"])
        merged["tolerances"] = combined
    merged.pop("command", None)
    return RunConfig(command=args.command, **merged).validate()


def _emit_error(kind, message, **extra):
    payload = {"error": dict(extra, kind=kind, message=message)}
    json.dump(payload, sys.stderr)
    sys.stderr.write("\n")


def _run_command(config):
    suite = suite_for(config.command)
    started = time.perf_counter()
    records, artifacts = suite(config)
    elapsed = time.perf_counter() - started
    from .output import report_document
    doc = report_document(config, records, artifacts)
    report_path, _ = write_report(config.out, config.command + "-report",
                                  doc, elapsed)
    artifact_paths = write_artifacts(config.out, artifacts)
    for rec in records:
        print("[%s] %s: %s" % (rec.status, rec.name, rec.claim))
    print("report: %s" % report_path)
    for path in artifact_paths:
        print("artifact: %s" % path)
    return 0 if doc["allPassed"] else 1


def _cache_command(args):
    cache_dir = args.cache_dir or default_cache_dir()
    if args.action == "clear":
        removed = clear_cache(cache_dir)
        json.dump({"cacheDir": cache_dir, "cleared": removed}, sys.stdout)
        sys.stdout.write("\n")
        return 0
    if args.action == "list":
        records = list_cache(cache_dir)
    else:
        records = verify_cache(cache_dir)
    json.dump({"cacheDir": cache_dir, "entries": records}, sys.stdout,
              indent=1)
    sys.stdout.write("\n")
    return 0 if all(r["status"] == "ok" for r in records) else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "cache":
            return _cache_command(args)
        config = build_config(args)
        return _run_command(config)
    except ConfigError as exc:
        _emit_error("config", str(exc))
        return 2
    except ResourceLimitError as exc:
        _emit_error("resource", str(exc))
        return 2
    except CacheError as exc:
        _emit_error("corrupt-cache", str(exc), digest=exc.digest,
                    path=exc.path)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        _emit_error("internal", "%s: %s" % (type(exc).__name__, exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
