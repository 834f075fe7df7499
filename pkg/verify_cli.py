#!/usr/bin/env python3
"""
Verify the command-line surface: report values for the documented
examples, exit codes, byte-identical reruns and the sweep / export path.

Commands run in-process through main.main(argv) with --output pointing at
a temporary directory.

Usage:
    python verify_cli.py

Exit codes:
    0 = all checks passed
    1 = one or more checks failed
"""
import contextlib
import csv
import io
import json
import sys
import tempfile
from pathlib import Path

import main as cli

# argv -> {report key: expected value}
REFERENCE = [
    (["alt", "--family", "kneser:5,2", "--mode", "alt"], {"value": 2, "exact": True}),
    (["alt", "--family", "schrijver:6,2", "--mode", "salt", "--sigma", "identity"], {"value": 3}),
    (["alt", "--family", "pnks:8,2,2"], {"value": 3, "all_in_property": False}),
    (["gale", "--family", "schrijver:6,2"], {"d": 2, "verification.ok": True, "verification.method": "exact"}),
    (["gale", "--family", "pnks:8,2,2", "--trials", "100000", "--seed", "7"],
     {"d": 4, "verification.ok": True, "verification.method": "sampled"}),
    (["bounds", "--family", "kneser:5,2"], {"chi": 3, "cd": 3, "alt_bound": 3, "salt_bound": 3}),
    (["bounds", "--family", "sstable:8,2,2"], {"chi": 6, "targets.chen": 6}),
    (["bounds", "--family", "kneser:4,2"], {"chi": 2, "targets.stahl": 2}),
    (["multichi", "--family", "kneser:5,2", "--m", "2", "--nmax", "8"], {"value": 5}),
    (["multichi", "--family", "sstable:6,2,2", "--m", "1", "--nmax", "8"], {"value": 4, "targets.chen": 4}),
    (["multichi", "--family", "kneser:4,2", "--m", "1"], {"value": 2}),
    (["boxcomplex", "--graph", "k2", "--variant", "b0"], {"f_vector": [4, 4]}),
    (["boxcomplex", "--graph", "k2", "--variant", "b"], {"f_vector": [4, 2]}),
    (["boxcomplex", "--graph", "k1", "--variant", "b0"], {"f_vector": [2]}),
]

# argv -> expected exit code
EXIT_CODES = [
    (["gale", "--n", "5", "--d", "5"], cli.EXIT_INPUT),
    (["alt", "--family", "pnks:8,2,3"], cli.EXIT_INPUT),
    (["alt", "--family", "kneser:2,3"], cli.EXIT_INPUT),
    (["bounds", "--family", "hamming:3,2"], cli.EXIT_INPUT),
    (["boxcomplex", "--graph", "k17"], cli.EXIT_CAPACITY),
    (["multichi", "--family", "kneser:5,2", "--m", "2", "--nmax", "4"], cli.EXIT_CAPACITY),
    (["gale", "--family", "kneser:7,2", "--mode", "alt", "--verify", "exact"], cli.EXIT_CAPACITY),
]


def run(argv: list[str]) -> int:
    """Run a command quietly; returns the exit code."""
    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
        return cli.main(argv)


def run_json(argv: list[str], out: Path) -> tuple[int, dict | None]:
    code = run(argv + ["--output", str(out)])
    if code != cli.EXIT_OK or not out.exists():
        return code, None
    return code, json.loads(out.read_text(encoding="utf-8"))


def lookup(report: dict, dotted: str):
    value = report
    for part in dotted.split("."):
        value = value.get(part) if isinstance(value, dict) else None
    return value


def check_reference(tmp: Path) -> list[str]:
    issues = []
    for i, (argv, expected) in enumerate(REFERENCE):
        code, report = run_json(argv, tmp / f"ref_{i}.json")
        if report is None:
            issues.append(f"{' '.join(argv)}: exit {code}")
            continue
        if report.get("schema") != 1:
            issues.append(f"{' '.join(argv)}: schema field missing")
        for key, want in expected.items():
            if lookup(report, key) != want:
                issues.append(f"{' '.join(argv)}: {key} = {lookup(report, key)}, expected {want}")
    return issues


def check_inputs(tmp: Path) -> list[str]:
    issues = []
    edgeless = tmp / "edgeless.json"
    edgeless.write_text(json.dumps({"vertices": ["a", "b", "c"], "edges": []}), encoding="utf-8")
    _, report = run_json(["alt", "--input", str(edgeless), "--mode", "salt"], tmp / "edgeless_out.json")
    if report is None or report["value"] != 3 or not report["degenerate"]:
        issues.append(f"edgeless input report {report}")

    broken = tmp / "broken.json"
    broken.write_text('{"vertices": ["a", "b"],\n "edges": [["a", "b"]\n', encoding="utf-8")
    if run(["alt", "--input", str(broken)]) != cli.EXIT_INPUT:
        issues.append("truncated JSON did not exit with the input-error code")
    stderr = io.StringIO()
    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(stderr):
        cli.main(["alt", "--input", str(broken)])
    if "line" not in stderr.getvalue() or "column" not in stderr.getvalue():
        issues.append(f"parse error lacks line/column: {stderr.getvalue().strip()}")

    graph = tmp / "c5.json"
    graph.write_text(json.dumps({"vertices": list("abcde"),
                                 "adjacency": {"a": ["b"], "b": ["c"], "c": ["d"], "d": ["e"], "e": ["a"]}}),
                     encoding="utf-8")
    _, report = run_json(["bounds", "--graph", str(graph)], tmp / "c5_out.json")
    if report is None or report["chi"] != 3 or report["violations"]:
        issues.append(f"C_5 via Kneser representation: {report}")
    return issues


def check_exit_codes(_tmp: Path) -> list[str]:
    issues = []
    for argv, want in EXIT_CODES:
        got = run(argv)
        if got != want:
            issues.append(f"{' '.join(argv)}: exit {got}, expected {want}")
    return issues


def check_reproducible(tmp: Path) -> list[str]:
    issues = []
    commands = [["alt", "--family", "kneser:6,2", "--mode", "salt"],
                ["gale", "--family", "pnks:8,2,2", "--trials", "5000", "--seed", "11"],
                ["bounds", "--family", "schrijver:6,2", "--threads", "2"]]
    for i, argv in enumerate(commands):
        first, second = tmp / f"rerun_{i}_a.json", tmp / f"rerun_{i}_b.json"
        run(argv + ["--output", str(first)])
        run(argv + ["--output", str(second)])
        if not first.exists() or first.read_bytes() != second.read_bytes():
            issues.append(f"{' '.join(argv)}: reruns differ")

    serial, threaded = tmp / "serial.json", tmp / "threaded.json"
    run(["alt", "--family", "schrijver:7,2", "--mode", "salt", "--output", str(serial)])
    run(["alt", "--family", "schrijver:7,2", "--mode", "salt", "--threads", "3", "--output", str(threaded)])
    if serial.read_bytes() != threaded.read_bytes():
        issues.append("--threads changed the alt report")
    return issues


def check_formats(tmp: Path) -> list[str]:
    issues = []
    csv_out, text_out = tmp / "bounds.csv", tmp / "bounds.txt"
    run(["bounds", "--family", "kneser:5,2", "--format", "csv", "--output", str(csv_out)])
    run(["bounds", "--family", "kneser:5,2", "--format", "text", "--output", str(text_out)])
    rows = dict(csv.reader(io.StringIO(csv_out.read_text(encoding="utf-8"))))
    if rows.get("chi") != "3" or rows.get("schema") != "1":
        issues.append(f"CSV report rows {rows}")
    if "BOUND REPORT" not in text_out.read_text(encoding="utf-8"):
        issues.append("text report lacks its title banner")
    return issues


def check_sweep(tmp: Path) -> list[str]:
    issues = []
    corpus = tmp / "corpus.yaml"
    corpus.write_text("seed: 5\n"
                      "budget:\n  exhaustive_max: 7\n  anneal_steps: 50\n"
                      "families:\n  - kneser:5,2\n  - schrijver:6,2\n  - bogus:1\n"
                      "random:\n  count: 4\n  vertices: [3, 6]\n  edges: [1, 6]\n"
                      "gale:\n  exact_max_dim: 3\n  trials: 300\n", encoding="utf-8")
    db = tmp / "sweep.db"
    code = run(["sweep", str(corpus), "--db", str(db)])
    if code != cli.EXIT_OK:
        issues.append(f"sweep exit {code}")

    out = tmp / "sweep.csv"
    if run(["export-csv", str(out), "--db", str(db)]) != cli.EXIT_OK:
        return issues + ["export-csv failed"]
    with open(out, encoding="utf-8", newline="") as f:
        rows = list(csv.DictReader(f))
    if len(rows) != 6:
        issues.append(f"sweep CSV has {len(rows)} rows, expected 6")
    petersen = next((r for r in rows if r["instance_id"] == "kneser:5,2"), None)
    if petersen is None or (petersen["chi"], petersen["gale_alt_ok"], petersen["gale_salt_d"]) != ("3", "1", "1"):
        issues.append(f"kneser:5,2 sweep row {petersen}")
    if any(json.loads(r["violations"]) for r in rows):
        issues.append("sweep stored chain violations")
    if run(["stats", "--db", str(db)]) != cli.EXIT_OK:
        issues.append("stats failed")
    if run(["sweep", str(tmp / "missing.yaml"), "--db", str(db)]) != cli.EXIT_INPUT:
        issues.append("missing corpus file did not exit with the input-error code")
    return issues


def export_rows(db: Path, out: Path, run_id: int) -> list[dict]:
    if run(["export-csv", str(out), "--db", str(db), "--run", str(run_id)]) != cli.EXIT_OK:
        return []
    with open(out, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def check_duplicate_families(tmp: Path) -> list[str]:
    issues = []
    corpus = tmp / "dup.yaml"
    corpus.write_text("families:\n  - kneser:5,2\n  - kneser:5,2\n", encoding="utf-8")
    db = tmp / "dup.db"
    code = run(["sweep", str(corpus), "--db", str(db)])
    if code != cli.EXIT_OK:
        return [f"sweep of a corpus listing kneser:5,2 twice exited {code}"]
    ids = [r["instance_id"] for r in export_rows(db, tmp / "dup.csv", 1)]
    if ids != ["kneser:5,2"]:
        issues.append(f"duplicate family rows {ids}")
    return issues


def check_sweep_history(tmp: Path) -> list[str]:
    """A second sweep with the same seed must not rewrite the rows of the first."""
    issues = []
    db = tmp / "history.db"
    for name, size in (("small", 3), ("large", 8)):
        corpus = tmp / f"{name}.yaml"
        corpus.write_text(f"seed: 5\nrandom:\n  count: 1\n  vertices: [{size}, {size}]\n  edges: [2, 4]\n",
                          encoding="utf-8")
        run(["sweep", str(corpus), "--db", str(db)])

    first = export_rows(db, tmp / "history_1.csv", 1)
    second = export_rows(db, tmp / "history_2.csv", 2)
    if len(first) != 1 or len(second) != 1:
        return [f"history exports hold {len(first)} and {len(second)} rows, expected 1 each"]
    if first[0]["vertices"] != "3" or second[0]["vertices"] != "8":
        issues.append(f"vertex counts {first[0]['vertices']} / {second[0]['vertices']}, expected 3 / 8")
    if first[0]["instance_id"] == second[0]["instance_id"]:
        issues.append(f"different random draws share the id {first[0]['instance_id']}")
    if int(first[0]["salt"]) > 3:
        issues.append(f"run 1 salt {first[0]['salt']} exceeds its 3 vertices")
    return issues


def check_ingest(tmp: Path) -> list[str]:
    issues = []
    folder = tmp / "inputs"
    folder.mkdir()
    (folder / "triangle.json").write_text(json.dumps({"vertices": ["1", "2", "3"],
                                                      "edges": [["1", "2"], ["2", "3"], ["1", "3"]]}),
                                          encoding="utf-8")
    (folder / "bad.json").write_text('{"vertices": ["1"]}', encoding="utf-8")
    db = tmp / "ingest.db"
    if run(["ingest", str(folder), "--db", str(db)]) != cli.EXIT_OK:
        issues.append("directory ingest failed")
    if run(["ingest", str(folder / "bad.json"), "--db", str(db)]) != cli.EXIT_INPUT:
        issues.append("malformed file ingest did not exit with the input-error code")

    corpus = tmp / "files.yaml"
    corpus.write_text("families: []\ninclude_files: true\n", encoding="utf-8")
    run(["sweep", str(corpus), "--db", str(db)])
    out = tmp / "files.csv"
    run(["export-csv", str(out), "--db", str(db)])
    with open(out, encoding="utf-8", newline="") as f:
        ids = [r["instance_id"] for r in csv.DictReader(f)]
    if ids != ["file:triangle"]:
        issues.append(f"ingested sweep instances {ids}")
    return issues


CHECKS = [
    ("documented examples", check_reference),
    ("file inputs", check_inputs),
    ("exit codes", check_exit_codes),
    ("byte-identical reruns", check_reproducible),
    ("csv / text formats", check_formats),
    ("sweep and export", check_sweep),
    ("duplicate families", check_duplicate_families),
    ("sweep history", check_sweep_history),
    ("ingest", check_ingest),
]


def main():
    print("=" * 50)
    print("CLI VERIFICATION")
    print("=" * 50)

    failures = 0
    print(f"\n{'Check':<28} {'Status'}")
    print("-" * 50)
    with tempfile.TemporaryDirectory() as tmp_dir:
        for name, check in CHECKS:
            issues = check(Path(tmp_dir))
            failures += bool(issues)
            print(f"{name:<28} {'PASS' if not issues else 'FAIL: ' + '; '.join(issues[:3])}")

    if failures:
        print(f"\nVERIFICATION FAILED: {failures} check(s)")
        sys.exit(1)
    print("\nVERIFICATION PASSED")
    sys.exit(0)


if __name__ == "__main__":
    main()
