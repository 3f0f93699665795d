"""End-to-end exercises of the command-line interface.

Each test drives ``endokit.cli.main`` in process and inspects the JSON
reports, CSV tables, exit codes, and stderr error objects the contract
promises.  The expensive suite runs are shared across tests through
module-scoped fixtures.
"""

import hashlib
import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from endokit.algebra import FiniteField
from endokit.cli import build_parser, load_schema, main, schema_path
from endokit.cli.main import build_config
from endokit.funcfield import EllipticCurveFq, cached_closed_points


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def stderr_error(err):
    return json.loads(err)["error"]


def read_report(out_dir, command):
    return json.loads((out_dir / (command + "-report.json")).read_text())


# -- hitchin ---------------------------------------------------------------


@pytest.fixture(scope="module")
def hitchin_run(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("hitchin-out")
    code, stdout, _ = run_cli([
        "hitchin", "--a", "-1", "--b", "0", "--sigma0", "1",
        "--w", "all-singular", "--samples", "3", "--plot",
        "--out", str(out_dir),
    ])
    return code, stdout, out_dir, read_report(out_dir, "hitchin")


def test_hitchin_command_passes(hitchin_run):
    code, _, _, report = hitchin_run
    assert code == 0
    assert report["allPassed"] is True
    assert report["summary"] == {"pass": 7, "fail": 0, "inconclusive": 0}


def test_hitchin_record_order(hitchin_run):
    report = hitchin_run[3]
    assert [r["name"] for r in report["records"]] == [
        "singular-fibers", "fibers", "two-torsion-action",
        "cotangent-model", "component-isomorphism", "quotient-nodes",
        "improper-quadrics"]
    assert all(r["claim"] for r in report["records"])


def test_fiber_census_witness(hitchin_run):
    report = hitchin_run[3]
    by_name = {r["name"]: r for r in report["records"]}
    witness = by_name["fibers"]["witness"]
    assert witness["splitFibers"] == 3
    assert witness["doublePoints"] == 6
    assert [f["w"] for f in witness["fibers"]] == ["-1", "0", "1"]


def test_console_lines_mirror_records(hitchin_run):
    _, stdout, _, report = hitchin_run
    lines = [line for line in stdout.splitlines() if line.startswith("[")]
    assert len(lines) == len(report["records"])
    for line, rec in zip(lines, report["records"]):
        assert line.startswith("[%s] %s:" % (rec["status"], rec["name"]))


def test_plot_artifacts_are_labeled_slices(hitchin_run):
    _, _, out_dir, report = hitchin_run
    svgs = sorted(p.name for p in out_dir.glob("*.svg"))
    assert "hitchin-fiber-1.svg" in svgs
    assert "hitchin-quadric-3.svg" in svgs
    assert set(svgs) <= set(report["artifacts"])
    body = (out_dir / "hitchin-fiber-1.svg").read_text()
    assert "real slice of a complex surface" in body


def test_report_digest_and_meta(hitchin_run):
    out_dir = hitchin_run[2]
    doc = read_report(out_dir, "hitchin")
    digest = doc.pop("digest")
    canonical = json.dumps(doc, sort_keys=True,
                           separators=(",", ":")).encode("utf-8")
    assert digest == "sha256:" + hashlib.sha256(canonical).hexdigest()
    meta = json.loads((out_dir / "hitchin-report.meta.json").read_text())
    assert meta["digest"] == digest
    assert set(meta) == {"digest", "timestampUtc", "elapsedSeconds"}


# -- endoscopy -------------------------------------------------------------


@pytest.fixture(scope="module")
def endoscopy_run(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("endoscopy-out")
    cache_dir = tmp_path_factory.mktemp("endoscopy-cache")
    code, _, _ = run_cli([
        "endoscopy", "--p", "5", "--a", "-1", "--b", "0",
        "--torsion", "1", "--deg", "2", "--char-order", "2",
        "--samples", "10", "--out", str(out_dir),
        "--cache-dir", str(cache_dir),
    ])
    return code, out_dir, cache_dir, read_report(out_dir, "endoscopy")


def test_endoscopy_command_passes(endoscopy_run):
    code, _, _, report = endoscopy_run
    assert code == 0
    assert [r["name"] for r in report["records"]] == [
        "closed-point-census", "frobenius-reduction", "hecke-eigenvalues",
        "reciprocity", "differential-parity"]
    assert [r["status"] for r in report["records"]] == ["pass"] * 5


def test_eigenvalue_table(endoscopy_run):
    """One CSV row per closed point of degree at most two, all passing."""
    out_dir = endoscopy_run[1]
    rows = (out_dir / "endoscopy-eigenvalues.csv").read_text().splitlines()
    assert rows[0] == "point,degree,split,a,b,adjoint_trace,check"
    assert rows[1] == "inf,1,yes,1,2,-1,pass"
    assert len(rows) == 1 + 8 + 12
    assert all(row.endswith(",pass") for row in rows[1:])


def test_endoscopy_populates_census_cache(endoscopy_run):
    cache_dir = endoscopy_run[2]
    code, stdout, _ = run_cli(["cache", "list",
                               "--cache-dir", str(cache_dir)])
    listing = json.loads(stdout)
    assert code == 0
    assert listing["cacheDir"] == str(cache_dir)
    assert [entry["status"] for entry in listing["entries"]] == ["ok"]
    assert listing["entries"][0]["degreeBound"] == 2


# -- cache management ------------------------------------------------------


@pytest.fixture
def census_dir(tmp_path):
    curve = EllipticCurveFq(FiniteField(5), -1, 0)
    cached_closed_points(curve, 2, str(tmp_path))
    return tmp_path


def test_cache_verify_recounts(census_dir):
    code, stdout, _ = run_cli(["cache", "verify",
                               "--cache-dir", str(census_dir)])
    entries = json.loads(stdout)["entries"]
    assert code == 0
    assert len(entries) == 1
    assert entries[0]["status"] == "ok"
    assert int(entries[0]["digest"], 16)
    assert len(entries[0]["digest"]) == 64


def test_corrupt_census_is_reported(census_dir):
    path = next(census_dir.glob("census-*.json"))
    path.write_text(path.read_text()[:-40])
    code, stdout, _ = run_cli(["cache", "list",
                               "--cache-dir", str(census_dir)])
    assert code == 1
    entry = json.loads(stdout)["entries"][0]
    assert entry["status"] == "corrupt"
    assert entry["reason"]


def test_corrupt_census_never_silently_used(census_dir):
    path = next(census_dir.glob("census-*.json"))
    doc = json.loads(path.read_text())
    doc["points"] = doc["points"][:-1]
    path.write_text(json.dumps(doc))
    code, _, err = run_cli([
        "endoscopy", "--p", "5", "--a", "-1", "--b", "0", "--torsion", "1",
        "--deg", "2", "--samples", "2", "--cache-dir", str(census_dir),
        "--out", str(census_dir / "out"),
    ])
    assert code == 2
    error = stderr_error(err)
    assert error["kind"] == "corrupt-cache"
    assert len(error["digest"]) == 64
    assert error["path"] == str(path)


def test_cache_clear_is_idempotent(census_dir):
    code, stdout, _ = run_cli(["cache", "clear",
                               "--cache-dir", str(census_dir)])
    assert code == 0
    assert json.loads(stdout)["cleared"] == 1
    code, stdout, _ = run_cli(["cache", "clear",
                               "--cache-dir", str(census_dir)])
    assert code == 0
    assert json.loads(stdout)["cleared"] == 0


def test_cache_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("ENDOKIT_CACHE_DIR", str(tmp_path))
    code, stdout, _ = run_cli(["cache", "list"])
    listing = json.loads(stdout)
    assert code == 0
    assert listing["cacheDir"] == str(tmp_path)
    assert listing["entries"] == []


# -- configuration ---------------------------------------------------------


def test_schema_ships_and_loads():
    schema = load_schema()
    assert schema["additionalProperties"] is False
    assert "tolerances" in schema["properties"]
    assert str(schema_path()).endswith("config_schema.json")


def test_unknown_config_key_rejected(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"alpha": 1}))
    code, _, err = run_cli(["hitchin", "--config", str(cfg)])
    assert code == 2
    error = stderr_error(err)
    assert error["kind"] == "config"
    assert "alpha" in error["message"]


@pytest.mark.parametrize("argv,needle", [
    (["hitchin", "--a", "-3", "--b", "2"], "repeated root"),
    (["endoscopy", "--p", "6"], "not prime"),
    (["endoscopy", "--torsion", "2"], "two-torsion"),
    (["hitchin", "--tol", "omega"], "NAME=VALUE"),
    (["fractional", "--toy-n", "3"], "even"),
])
def test_config_errors_exit_two(argv, needle):
    code, _, err = run_cli(argv)
    assert code == 2
    error = stderr_error(err)
    assert error["kind"] == "config"
    assert needle in error["message"]


def test_flags_override_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"a": "-1", "b": "0", "seed": 5,
                               "tolerances": {"omega": 1e-7}}))
    args = build_parser().parse_args(["hitchin", "--config", str(cfg),
                                      "--seed", "7"])
    config = build_config(args)
    assert config.seed == 7
    assert config.a == Fraction(-1)
    assert config.tolerance("omega") == 1e-7
    assert config.tolerance("residue") == 1e-8


def test_reports_are_byte_identical(tmp_path):
    payloads = []
    for name in ("first", "second"):
        out_dir = tmp_path / name
        code, _, _ = run_cli(["fractional", "--toy-n", "2", "--seed", "3",
                              "--out", str(out_dir)])
        assert code == 0
        payloads.append((out_dir / "fractional-report.json").read_bytes())
    assert payloads[0] == payloads[1]


# -- failure and inconclusive paths ----------------------------------------


def test_unreachable_tolerance_fails(tmp_path):
    out_dir = tmp_path / "strict"
    code, _, _ = run_cli(["hitchin", "--a", "-1", "--b", "0",
                          "--samples", "1", "--tol", "omega=1e-18",
                          "--out", str(out_dir)])
    assert code == 1
    report = read_report(out_dir, "hitchin")
    by_name = {r["name"]: r["status"] for r in report["records"]}
    assert by_name["component-isomorphism"] == "fail"
    assert report["allPassed"] is False


@pytest.fixture(scope="module")
def octic_character_run(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("whittaker-out")
    code, _, _ = run_cli([
        "whittaker", "--p", "5", "--a", "-1", "--b", "0", "--torsion", "1",
        "--char-order", "8", "--out", str(out_dir),
    ])
    return code, read_report(out_dir, "whittaker")


def test_undecidable_cosets_reported(octic_character_run):
    """A character of order eight puts even-pairing cosets out of reach of
    the principal shift pool; they surface as inconclusive, never as a
    silent pass."""
    code, report = octic_character_run
    assert code == 1
    assert report["allPassed"] is False
    scan = report["records"][1]
    assert scan["name"] == "configured-datum-scan"
    assert scan["status"] == "inconclusive"
    assert scan["witness"]["undecided"] == ["inf", "(0,0)", "(2,1)",
                                            "(2,4)"]
    assert "shift pool" in scan["witness"]["note"]


def test_odd_cosets_still_vanish_for_octic_character(octic_character_run):
    report = octic_character_run[1]
    assert report["records"][0]["name"] == "parity-criterion"
    assert report["records"][0]["status"] == "pass"
    outcomes = report["records"][1]["witness"]["outcomes"]
    for entry in outcomes:
        if entry["pairing"] % 2:
            assert entry["verdict"] == "VANISHES-ALL"


# -- verify-all ------------------------------------------------------------


@pytest.fixture(scope="module")
def verify_all_run(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("verify-out")
    cache_dir = tmp_path_factory.mktemp("verify-cache")
    code, _, _ = run_cli(["verify-all", "--samples", "2",
                          "--out", str(out_dir),
                          "--cache-dir", str(cache_dir)])
    return code, read_report(out_dir, "verify-all")


def test_verify_all_aggregates_every_suite(verify_all_run):
    code, report = verify_all_run
    assert code == 0
    prefixes = [r["name"].split("/")[0] for r in report["records"]]
    assert prefixes == (["hitchin"] * 7 + ["spectral"] * 3 +
                        ["endoscopy"] * 5 + ["whittaker"] * 1 +
                        ["fractional"] * 3)
    assert report["summary"] == {"pass": 19, "fail": 0, "inconclusive": 0}


def test_verify_all_artifacts(verify_all_run):
    report = verify_all_run[1]
    assert report["artifacts"] == ["endoscopy-eigenvalues.csv",
                                   "fractional-eigenvalues.csv",
                                   "whittaker-instances.csv"]


def test_module_invocation(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "endokit.cli", "fractional", "--toy-n", "2",
         "--out", str(tmp_path)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "toy-census" in proc.stdout
