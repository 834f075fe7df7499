"""
Corpus sweeps.

Handles loading the sweep corpus from YAML, evaluating every instance
(bound report plus Gale checks) and storing the results in SQLite.
"""
import csv
import json
import multiprocessing as mp
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

import numpy as np
import yaml

from alternation import DEFAULT_SEED, SearchBudget, alt_hypergraph, property_for_mode, salt_hypergraph
from coloring import bound_report
from database import DB_PATH, get_connection, init_database
from gale import EXACT_MAX_DIM, corollary_configuration, verify
from hypergraph import CapacityError, DomainError, Hypergraph, random_hypergraph
from ingest import family_hypergraph, payload_digest, store_instance, stored_instances


DEFAULT_CORPUS_FILE = "corpus.yaml"
CSV_COLUMNS = [
    "run_id", "instance_id", "source", "vertices", "edges", "chi", "cd", "alt", "salt",
    "alt_identity", "salt_identity", "alt_bound", "salt_bound", "dim_lb", "sdim_lb",
    "alt_exact", "salt_exact", "degenerate", "gale_alt_d", "gale_alt_ok",
    "gale_salt_d", "gale_salt_ok", "violations", "errors",
]


def load_corpus(yaml_path: str = DEFAULT_CORPUS_FILE) -> dict:
    """
    Load and validate a corpus YAML file.

    Returns the normalized config, or {"error": ...} when the file is
    unusable.  Malformed entries are dropped and listed under "errors".
    """
    yaml_file = Path(yaml_path)
    if not yaml_file.exists():
        return {"error": f"Corpus file not found: {yaml_path}"}

    with open(yaml_file, 'r', encoding='utf-8') as f:
        try:
            config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            return {"error": f"Invalid YAML: {e}"}

    if not config or not ("families" in config or "random" in config):
        return {"error": "Invalid corpus format: needs a 'families' or 'random' key"}

    out = {"seed": int(config.get("seed", DEFAULT_SEED)), "families": [], "random": None,
           "budget": SearchBudget(), "exact_max_dim": EXACT_MAX_DIM, "trials": 2000,
           "include_files": bool(config.get("include_files", False)), "errors": []}

    budget = config.get("budget") or {}
    out["budget"] = SearchBudget(exhaustive_max=int(budget.get("exhaustive_max", out["budget"].exhaustive_max)),
                                 anneal_steps=int(budget.get("anneal_steps", out["budget"].anneal_steps)),
                                 seed=out["seed"])

    for spec in config.get("families") or []:
        if str(spec) in out["families"]:
            out["errors"].append(f"Family {spec!r} skipped: duplicate")
            continue
        try:
            family_hypergraph(str(spec))
            out["families"].append(str(spec))
        except (DomainError, CapacityError) as e:
            out["errors"].append(f"Family {spec!r} skipped: {e}")

    block = config.get("random")
    if block:
        try:
            lo_v, hi_v = (int(x) for x in block.get("vertices", [3, 8]))
            lo_e, hi_e = (int(x) for x in block.get("edges", [1, 10]))
            if not 1 <= lo_v <= hi_v or not 1 <= lo_e <= hi_e:
                raise ValueError("ranges must be increasing and positive")
            out["random"] = {"count": int(block.get("count", 0)),
                             "vertices": (lo_v, hi_v), "edges": (lo_e, hi_e)}
        except (TypeError, ValueError) as e:
            out["errors"].append(f"Random block skipped: {e}")

    gale = config.get("gale") or {}
    out["exact_max_dim"] = min(int(gale.get("exact_max_dim", EXACT_MAX_DIM)), EXACT_MAX_DIM)
    out["trials"] = int(gale.get("trials", out["trials"]))
    return out


def build_instances(config: dict, db_path: str = DB_PATH) -> list[tuple[str, str, Hypergraph]]:
    """(instance_id, source, hypergraph) for every family, random draw and stored file."""
    instances = [(spec, "family", family_hypergraph(spec)) for spec in config["families"]]

    block = config.get("random")
    if block:
        rng = np.random.default_rng(config["seed"])
        for i in range(block["count"]):
            n = int(rng.integers(block["vertices"][0], block["vertices"][1] + 1))
            m = int(rng.integers(block["edges"][0], block["edges"][1] + 1))
            h = random_hypergraph(rng, n, m)
            instances.append((f"random:{config['seed']}:{i:03d}:{payload_digest(h)}", "random", h))

    if config.get("include_files") and Path(db_path).exists():
        instances += [(iid, "file", h) for iid, h in stored_instances(db_path, source="file")]
    return instances


def evaluate_instance(args) -> dict:
    """Bound report, identity-sigma values and Gale checks for one instance."""
    instance_id, h, budget, exact_max_dim, trials, seed = args
    report = bound_report(h, budget)
    row = {"instance_id": instance_id, "vertices": h.n, "edges": len(h.edges),
           "report": report.to_dict(), "gale": []}

    violations = list(report.violations())
    alt_id, salt_id = alt_hypergraph(h), salt_hypergraph(h)
    row["alt_identity"], row["salt_identity"] = alt_id, salt_id
    if report.chi is not None and not report.degenerate:
        if report.chi < h.n - alt_id:
            violations.append(f"chi >= |V|-alt(H,I) violated ({report.chi} < {h.n - alt_id})")
        if report.chi < h.n - salt_id + 1:
            violations.append(f"chi >= |V|-salt(H,I)+1 violated ({report.chi} < {h.n - salt_id + 1})")

    for mode in ("alt", "salt"):
        try:
            z = corollary_configuration(h, None, mode)
        except DomainError:
            continue  # d = -1: no configuration to check
        method = "exact" if z.d <= exact_max_dim else "sampled"
        result = verify(z, property_for_mode(h, mode), method, trials, seed)
        row["gale"].append({"mode": mode, "d": z.d, **result.to_dict()})
        if not result.ok:
            violations.append(f"Gale check failed ({mode}, d={z.d})")

    row["violations"] = violations
    return row


def run_sweep(yaml_path: str = DEFAULT_CORPUS_FILE, db_path: str = DB_PATH, workers: int = 1) -> dict:
    """
    Evaluate every corpus instance and store the results.

    Returns a summary of the run, including every chain violation.
    """
    config = load_corpus(yaml_path)
    if "error" in config:
        return config

    init_database(db_path)
    instances = build_instances(config, db_path)
    budget = replace(config["budget"], workers=1)

    stats = {"run_id": None, "instances": len(instances), "gale_checks": 0,
             "violations": [], "errors": list(config["errors"])}

    conn = get_connection(db_path)
    cursor = conn.cursor()
    cursor.execute("""
        INSERT INTO runs (started_at, seed, config_path, instance_count, violation_count)
        VALUES (?, ?, ?, ?, ?)
    """, (datetime.now(timezone.utc).isoformat(timespec="seconds"), config["seed"], yaml_path, len(instances), 0))
    run_id = cursor.lastrowid
    stats["run_id"] = run_id

    for instance_id, source, h in instances:
        store_instance(cursor, instance_id, source, h)

    tasks = [(iid, h, budget, config["exact_max_dim"], config["trials"], config["seed"])
             for iid, _source, h in instances]
    if workers > 1:
        with mp.Pool(workers) as pool:
            rows = pool.map(evaluate_instance, tasks)
    else:
        rows = []
        for i, task in enumerate(tasks, 1):
            print(f"[{i}/{len(tasks)}] {task[0]}")
            rows.append(evaluate_instance(task))

    for row in rows:
        r = row["report"]
        cursor.execute("""
            INSERT INTO bound_reports
            (run_id, instance_id, vertices, edges, chi, cd, alt, salt, alt_identity, salt_identity,
             alt_bound, salt_bound, dim_lb, sdim_lb, alt_exact, salt_exact, degenerate,
             violations, errors)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
        """, (
            run_id, row["instance_id"], row["vertices"], row["edges"], r["chi"], r["cd"], r["alt"], r["salt"],
            row["alt_identity"], row["salt_identity"], r["alt_bound"], r["salt_bound"],
            r["dim_lb"], r["sdim_lb"], _flag(r["exact"].get("alt")), _flag(r["exact"].get("salt")),
            1 if r["degenerate"] else 0, json.dumps(row["violations"]), json.dumps(r["errors"])
        ))
        for check in row["gale"]:
            cursor.execute("""
                INSERT INTO gale_checks (run_id, instance_id, mode, d, method, ok, checked, counterexample)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """, (
                run_id, row["instance_id"], check["mode"], check["d"], check["method"],
                1 if check["ok"] else 0, check.get("cells_checked", check.get("trials")),
                json.dumps(check["counterexample"], sort_keys=True) if check["counterexample"] else None
            ))
            stats["gale_checks"] += 1
        stats["violations"] += [f"{row['instance_id']}: {v}" for v in row["violations"]]
        stats["errors"] += [f"{row['instance_id']}: {e}" for e in r["errors"]]

    cursor.execute("UPDATE runs SET violation_count = ? WHERE id = ?", (len(stats["violations"]), run_id))
    conn.commit()
    conn.close()
    return stats


def _flag(value) -> int | None:
    return None if value is None else int(bool(value))


def latest_run_id(db_path: str = DB_PATH) -> int | None:
    conn = get_connection(db_path)
    cursor = conn.cursor()
    cursor.execute("SELECT MAX(id) FROM runs")
    run_id = cursor.fetchone()[0]
    conn.close()
    return run_id


def export_csv(output_path: str, db_path: str = DB_PATH, run_id: int | None = None) -> int:
    """Write one CSV row per instance of a run (default: the latest). Returns the row count."""
    run_id = run_id if run_id is not None else latest_run_id(db_path)
    if run_id is None:
        raise DomainError(f"no sweep runs stored in {db_path}")

    conn = get_connection(db_path)
    cursor = conn.cursor()
    cursor.execute(f"SELECT {', '.join(CSV_COLUMNS)} FROM v_sweep WHERE run_id = ? ORDER BY instance_id", (run_id,))
    rows = cursor.fetchall()
    conn.close()

    with open(output_path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in CSV_COLUMNS])
    return len(rows)


def print_summary(db_path: str = DB_PATH, run_id: int | None = None) -> None:
    """Print summary statistics for a stored sweep run."""
    run_id = run_id if run_id is not None else latest_run_id(db_path)
    if run_id is None:
        print(f"No sweep runs stored in {db_path}")
        return

    conn = get_connection(db_path)
    cursor = conn.cursor()

    print("\n" + "=" * 50)
    print("SWEEP SUMMARY")
    print("=" * 50)

    cursor.execute("SELECT started_at, seed, config_path, instance_count, violation_count FROM runs WHERE id = ?",
                   (run_id,))
    run = cursor.fetchone()
    print(f"\nRun: {run_id} ({run['started_at']}, seed {run['seed']}, {run['config_path']})")
    print(f"Instances: {run['instance_count']}")
    print(f"Chain violations: {run['violation_count']}")

    print("\n" + "-" * 50)
    print("BOUNDS BY SOURCE")
    print("-" * 50)
    cursor.execute("""
        SELECT source,
               COUNT(*)                                       AS instances,
               SUM(CASE WHEN chi = alt_bound THEN 1 ELSE 0 END)  AS alt_tight,
               SUM(CASE WHEN chi = salt_bound THEN 1 ELSE 0 END) AS salt_tight,
               SUM(CASE WHEN chi = cd THEN 1 ELSE 0 END)         AS cd_tight,
               SUM(CASE WHEN salt_bound > cd THEN 1 ELSE 0 END)  AS salt_beats_cd
        FROM v_sweep
        WHERE run_id = ? AND degenerate = 0
        GROUP BY source
        ORDER BY source
    """, (run_id,))
    print(f"{'Source':<10} {'Count':>7} {'alt=chi':>9} {'salt=chi':>9} {'cd=chi':>8} {'salt>cd':>8}")
    print("-" * 55)
    for row in cursor.fetchall():
        print(f"{row['source']:<10} {row['instances']:>7} {row['alt_tight']:>9} {row['salt_tight']:>9} "
              f"{row['cd_tight']:>8} {row['salt_beats_cd']:>8}")

    print("\n" + "-" * 50)
    print("GALE CHECKS")
    print("-" * 50)
    cursor.execute("""
        SELECT mode, method, COUNT(*) AS checks, SUM(ok) AS passed, MAX(d) AS max_d
        FROM gale_checks
        WHERE run_id = ?
        GROUP BY mode, method
        ORDER BY mode, method
    """, (run_id,))
    print(f"{'Mode':<6} {'Method':<9} {'Checks':>7} {'Passed':>7} {'Max d':>6}")
    print("-" * 40)
    for row in cursor.fetchall():
        print(f"{row['mode']:<6} {row['method']:<9} {row['checks']:>7} {row['passed']:>7} {row['max_d']:>6}")

    conn.close()
    print("\n" + "=" * 50)
