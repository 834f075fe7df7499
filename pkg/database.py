"""
SQLite schema and initialization for corpus sweep results.
"""
import sqlite3


DB_PATH = "alternation.db"


def get_connection(db_path: str = DB_PATH) -> sqlite3.Connection:
    """Get a database connection with row factory enabled."""
    conn = sqlite3.connect(db_path)
    conn.row_factory = sqlite3.Row
    return conn


def init_database(db_path: str = DB_PATH, quiet: bool = False) -> None:
    """Initialize the database with all required tables."""
    conn = get_connection(db_path)
    cursor = conn.cursor()

    # Instances - hypergraphs known to the store (families, random draws, ingested files)
    cursor.execute("""
        CREATE TABLE IF NOT EXISTS instances (
            id TEXT PRIMARY KEY,
            source TEXT NOT NULL,
            vertices INTEGER,
            edges INTEGER,
            payload TEXT NOT NULL
        )
    """)

    # Runs - one row per sweep invocation
    cursor.execute("""
        CREATE TABLE IF NOT EXISTS runs (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            started_at TEXT,
            seed INTEGER,
            config_path TEXT,
            instance_count INTEGER,
            violation_count INTEGER
        )
    """)

    # Bound reports - chi(KG(H)) against cd and the alternation bounds.
    # alt_identity / salt_identity are the values at sigma = identity; the
    # chain is checked for them as well as for the minimizing sigma.  vertices /
    # edges are the counts this run saw; the instances payload may be newer.
    cursor.execute("""
        CREATE TABLE IF NOT EXISTS bound_reports (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            run_id INTEGER NOT NULL,
            instance_id TEXT NOT NULL,
            vertices INTEGER,
            edges INTEGER,
            chi INTEGER,
            cd INTEGER,
            alt INTEGER,
            salt INTEGER,
            alt_identity INTEGER,
            salt_identity INTEGER,
            alt_bound INTEGER,
            salt_bound INTEGER,
            dim_lb INTEGER,
            sdim_lb INTEGER,
            alt_exact INTEGER,
            salt_exact INTEGER,
            degenerate INTEGER,
            violations TEXT,
            errors TEXT,
            FOREIGN KEY (run_id) REFERENCES runs(id),
            FOREIGN KEY (instance_id) REFERENCES instances(id),
            UNIQUE(run_id, instance_id)
        )
    """)

    # Gale checks - configuration from the alternation value, verified against P1/P2
    cursor.execute("""
        CREATE TABLE IF NOT EXISTS gale_checks (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            run_id INTEGER NOT NULL,
            instance_id TEXT NOT NULL,
            mode TEXT NOT NULL,
            d INTEGER,
            method TEXT,
            ok INTEGER,
            checked INTEGER,
            counterexample TEXT,
            FOREIGN KEY (run_id) REFERENCES runs(id),
            FOREIGN KEY (instance_id) REFERENCES instances(id),
            UNIQUE(run_id, instance_id, mode)
        )
    """)

    cursor.execute("CREATE INDEX IF NOT EXISTS idx_bound_reports_run ON bound_reports(run_id)")
    cursor.execute("CREATE INDEX IF NOT EXISTS idx_gale_checks_run ON gale_checks(run_id)")
    cursor.execute("CREATE INDEX IF NOT EXISTS idx_instances_source ON instances(source)")

    # View: one row per (run, instance) for CSV export. Gale verdicts are
    # pivoted into alt/salt columns; NULL when the mode was skipped (d = -1).
    cursor.execute("""
        CREATE VIEW IF NOT EXISTS v_sweep AS
        SELECT
            br.run_id, br.instance_id, i.source, br.vertices, br.edges,
            br.chi, br.cd, br.alt, br.salt, br.alt_identity, br.salt_identity,
            br.alt_bound, br.salt_bound, br.dim_lb, br.sdim_lb,
            br.alt_exact, br.salt_exact, br.degenerate,
            ga.d  AS gale_alt_d,  ga.ok AS gale_alt_ok,
            gs.d  AS gale_salt_d, gs.ok AS gale_salt_ok,
            br.violations, br.errors
        FROM bound_reports br
        JOIN instances i ON br.instance_id = i.id
        LEFT JOIN gale_checks ga
            ON ga.run_id = br.run_id AND ga.instance_id = br.instance_id AND ga.mode = 'alt'
        LEFT JOIN gale_checks gs
            ON gs.run_id = br.run_id AND gs.instance_id = br.instance_id AND gs.mode = 'salt'
    """)

    conn.commit()
    conn.close()
    if not quiet:
        print(f"Database initialized: {db_path}")


if __name__ == "__main__":
    init_database()
