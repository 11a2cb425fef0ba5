#!/usr/bin/env python3
"""End-to-end checks of the warpds command-line harness."""

import argparse
import csv
import json
import shutil
import subprocess
import sys
from pathlib import Path

import jsonschema

failures = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def run(exe, args, cwd):
    return subprocess.run([exe, *args], cwd=cwd, capture_output=True, text=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exe", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--config", required=True)
    ap.add_argument("--workdir", required=True)
    a = ap.parse_args()
    a.exe = str(Path(a.exe).resolve())
    a.config = str(Path(a.config).resolve())

    work = Path(a.workdir)
    shutil.rmtree(work, ignore_errors=True)
    work.mkdir(parents=True)
    schema = json.loads(Path(a.schema).read_text())
    validator = jsonschema.Draft202012Validator(schema)

    # locality over two kappas: two passing reports, exit 0
    r = run(a.exe, ["verify", "--config", a.config, "--suite", "locality", "--kappa", "0,0.5",
                    "--out", "loc", "--format", "csv"], work)
    check(r.returncode == 0, f"locality run exits 0 (got {r.returncode})")
    report = json.loads((work / "loc" / "report.json").read_text())
    validator.validate(report)
    check(True, "locality report validates against the schema")
    checks = report["suites"][0]["checks"]
    check(len(report["suites"]) == 1 and len(checks) == 2, "locality run has one suite with two checks")
    check(all(c["pass"] for c in checks), "both locality checks pass")
    check(sorted(c["metadata"]["kappa"] for c in checks) == [0.0, 0.5], "one check per kappa")
    rows = list(csv.DictReader((work / "loc" / "report.csv").open()))
    check([row["kappa"] for row in rows] == ["0", "0.5"] and all(row["pass"] == "true" for row in rows),
          "CSV rows mirror the JSON report")
    check((work / "loc" / "timings.json").exists(), "timings written separately")

    # geometry: the literal i*omega = 1 check is the only failure, exit 1
    r = run(a.exe, ["verify", "--suite", "geometry", "--out", "geo"], work)
    check(r.returncode == 1, f"geometry run exits 1 (got {r.returncode})")
    geo = json.loads((work / "geo" / "report.json").read_text())
    validator.validate(geo)
    failed = [c["name"] for s in geo["suites"] for c in s["checks"] if not c["pass"]]
    check(failed == ["pseudoscalar_i_omega_is_one"], f"only the pseudoscalar check fails ({failed})")

    # determinism: same config and seed in two working directories
    for d in ("det1", "det2"):
        (work / d).mkdir()
        run(a.exe, ["verify", "--config", a.config, "--suite", "covering,car,fixed_point,borchers",
                    "--seed", "7", "--out", "out"], work / d)
    b1 = (work / "det1" / "out" / "report.json").read_bytes()
    b2 = (work / "det2" / "out" / "report.json").read_bytes()
    check(b1 == b2 and len(b1) > 0, "repeated runs give byte-identical report.json")
    det = json.loads(b1)
    validator.validate(det)
    check(det["seeds"]["base"] == 7 and det["config"]["model"]["seed"] == 7, "seed override is recorded")
    check([s["name"] for s in det["suites"]] == ["covering", "car", "fixed_point", "borchers"],
          "suites run in canonical order, each exactly once")
    r = run(a.exe, ["verify", "--config", a.config, "--suite", "covering", "--seed", "8", "--out", "other"], work)
    other = json.loads((work / "other" / "report.json").read_text())
    check(other["suites"][0]["checks"][0]["max_residual"] != det["suites"][0]["checks"][0]["max_residual"],
          "a different seed changes the sampled residuals")

    # configuration errors exit 2
    bad = work / "guard.json"
    bad.write_text(json.dumps({"model": {"d_plus": 20}}))
    r = run(a.exe, ["verify", "--config", str(bad)], work)
    check(r.returncode == 2 and "guard" in r.stderr, f"d_plus = 20 is a guard error (exit {r.returncode})")
    for name, cfg in {
        "unknown suite": {"suites": ["nope"]},
        "unknown key": {"model": {"d_pluss": 2}},
        "non-numeric kappa": {"deformation": {"kappa": ["x"]}},
        "broken pairing": {"model": {"reflection_pairs": [[0, 2]]}},
    }.items():
        p = work / "bad.json"
        p.write_text(json.dumps(cfg))
        r = run(a.exe, ["verify", "--config", str(p)], work)
        check(r.returncode == 2, f"{name} exits 2 (got {r.returncode})")
    (work / "broken.json").write_text("{ not json")
    check(run(a.exe, ["verify", "--config", "broken.json"], work).returncode == 2, "malformed JSON exits 2")
    check(run(a.exe, ["verify", "--bogus"], work).returncode == 2, "unknown flag exits 2")
    check(run(a.exe, ["frobnicate"], work).returncode == 2, "unknown subcommand exits 2")
    check(run(a.exe, ["verify", "--suite", "locality", "--kappa", "nan"], work).returncode == 2,
          "non-finite kappa exits 2")

    # group: pi(lambda(0.5)) = Lambda(0.5)
    r = run(a.exe, ["group", "--t", "0.5"], work)
    g = json.loads(r.stdout)
    b = g["boosts"][0]
    diff = max(abs(x - y) for rp, rl in zip(b["pi_lambda"], b["Lambda"]) for x, y in zip(rp, rl))
    check(r.returncode == 0 and diff < 1e-10, f"group prints pi(lambda(0.5)) = Lambda(0.5) (diff {diff:.2e})")

    # oracle: halving eps decreases the Gaussian residual
    r = run(a.exe, ["oracle", "--cutoff", "gaussian", "--eps", "0.2,0.1,0.05"], work)
    pts = [p["residual"] for p in json.loads(r.stdout)["sweeps"][0]["points"]]
    check(r.returncode == 0 and pts[0] > pts[1] > pts[2], f"oracle residuals decrease {pts}")

    # deform: row-major [re, im] pairs; warp of c_0 keeps its charge shift
    r = run(a.exe, ["deform", "--generator", "cdag0", "--kappa", "0.3"], work)
    d = json.loads(r.stdout)
    m = d["matrix"]
    check(r.returncode == 0 and len(m) == d["dim"] == 16 and all(len(row) == 16 and all(len(z) == 2 for z in row)
                                                                 for row in m), "deform prints a 16x16 complex matrix")
    check(d["shifts"] == [1], "warped creation operator raises the charge by one")
    check(run(a.exe, ["deform", "--generator", "c99"], work).returncode == 2, "bad generator index exits 2")

    # wedges and report
    r = run(a.exe, ["wedges", "--pairs", "3", "--samples", "20000"], work)
    w = json.loads(r.stdout)
    check(r.returncode == 0 and all(p["outcome"] == "witness" for p in w["probes"]), "wedge probes find witnesses")
    r = run(a.exe, ["report", "loc/report.json"], work)
    check(r.returncode == 0 and "twisted_locality" in r.stdout and "0 of 2 checks failed" in r.stdout,
          "report renders a table")

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
