"""
Input side: hypergraph / graph JSON files, family specs, and ingestion of
hypergraph files into the instance store.

Hypergraph file:  {"vertices": ["1", "2", ...], "edges": [["1", "2"], ...]}
Graph file:       {"vertices": ["a", "b", ...], "adjacency": {"a": ["b"], ...}}
Family specs:     kneser:n,k  schrijver:n,k  sstable:n,k,s  pnks:n,k,s
Graph specs:      kN  petersen  plus the family specs (their Kneser graphs)
"""
import hashlib
import json
import re
from pathlib import Path

import networkx as nx

from coloring import complete_graph, kneser_graph, label_of, petersen_graph
from database import DB_PATH, get_connection, init_database
from hypergraph import (DomainError, Hypergraph, complete_k_uniform, hypergraph_from_edges,
                        s_stable_k_uniform, schrijver_hypergraph)


FAMILY_ARITY = {"kneser": 2, "schrijver": 2, "sstable": 3, "pnks": 3}


# ==================== JSON ====================

def load_json(json_path: str) -> dict:
    """Read a JSON object; decode errors carry line and column."""
    try:
        with open(json_path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise DomainError(f"cannot read {json_path}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f"{json_path}: line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise DomainError(f"{json_path}: top level must be a JSON object")
    return data


def hypergraph_from_dict(data: dict) -> Hypergraph:
    if "vertices" not in data or "edges" not in data:
        raise DomainError("hypergraph JSON needs 'vertices' and 'edges' keys")
    if not isinstance(data["edges"], list) or not all(isinstance(e, list) for e in data["edges"]):
        raise DomainError("'edges' must be a list of vertex lists")
    return hypergraph_from_edges(data["vertices"], data["edges"])


def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {"vertices": list(h.vertices), "edges": [list(e) for e in h.edge_sets()]}


def payload_digest(h: Hypergraph) -> str:
    """Short content hash of the canonical JSON payload."""
    payload = json.dumps(hypergraph_to_dict(h), sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:12]


def graph_from_dict(data: dict) -> nx.Graph:
    """Adjacency-list JSON to a graph on nodes 0..n-1 with "label" attributes."""
    if "vertices" not in data or "adjacency" not in data:
        raise DomainError("graph JSON needs 'vertices' and 'adjacency' keys")
    names = [str(v) for v in data["vertices"]]
    if len(set(names)) != len(names):
        raise DomainError("vertex identifiers must be pairwise distinct")
    index = {name: i for i, name in enumerate(names)}
    g = nx.Graph()
    for i, name in enumerate(names):
        g.add_node(i, label=name)
    for name, neighbours in data["adjacency"].items():
        if str(name) not in index:
            raise DomainError(f"adjacency lists unknown vertex {name!r}")
        for other in neighbours:
            if str(other) not in index:
                raise DomainError(f"adjacency of {name!r} lists unknown vertex {other!r}")
            if str(other) == str(name):
                raise DomainError(f"loop at {name!r}; graphs must be simple")
            g.add_edge(index[str(name)], index[str(other)])
    return g


def graph_to_dict(g: nx.Graph) -> dict:
    nodes = sorted(g.nodes)
    return {"vertices": [label_of(g, v) for v in nodes],
            "adjacency": {label_of(g, v): [label_of(g, u) for u in sorted(g.neighbors(v))] for v in nodes}}


def load_hypergraph(json_path: str) -> Hypergraph:
    return hypergraph_from_dict(load_json(json_path))


def load_graph(json_path: str) -> nx.Graph:
    return graph_from_dict(load_json(json_path))


# ==================== FAMILY SPECS ====================

def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """'sstable:8,2,2' -> ('sstable', (8, 2, 2))."""
    name, _, args = spec.strip().partition(":")
    name = name.lower()
    if name not in FAMILY_ARITY:
        raise DomainError(f"unknown family {name!r} (expected one of {', '.join(FAMILY_ARITY)})")
    try:
        params = tuple(int(a) for a in args.split(","))
    except ValueError:
        raise DomainError(f"family spec {spec!r} needs integer parameters") from None
    if len(params) != FAMILY_ARITY[name]:
        raise DomainError(f"family {name} takes {FAMILY_ARITY[name]} parameters (got {spec!r})")
    return name, params


def family_hypergraph(spec: str) -> Hypergraph:
    name, params = parse_family(spec)
    if name == "kneser":
        return complete_k_uniform(*params)
    if name == "schrijver":
        return schrijver_hypergraph(*params)
    if name == "pnks" and params[2] % 2:
        raise DomainError(f"pnks needs even s (got s={params[2]})")
    return s_stable_k_uniform(*params)


def family_graph(spec: str) -> nx.Graph:
    """Graph spec or adjacency-list JSON path to a graph."""
    text = spec.strip().lower()
    if match := re.fullmatch(r"k(\d+)", text):
        return complete_graph(int(match.group(1)))
    if text == "petersen":
        return petersen_graph()
    if text.partition(":")[0] in FAMILY_ARITY:
        return kneser_graph(family_hypergraph(text))
    return load_graph(spec)


# ==================== INSTANCE STORE ====================

def store_instance(cursor, instance_id: str, source: str, h: Hypergraph) -> None:
    cursor.execute("""
        INSERT OR REPLACE INTO instances (id, source, vertices, edges, payload)
        VALUES (?, ?, ?, ?, ?)
    """, (instance_id, source, h.n, len(h.edges), json.dumps(hypergraph_to_dict(h), sort_keys=True)))


def stored_instances(db_path: str = DB_PATH, source: str | None = None) -> list[tuple[str, Hypergraph]]:
    conn = get_connection(db_path)
    cursor = conn.cursor()
    if source is None:
        cursor.execute("SELECT id, payload FROM instances ORDER BY id")
    else:
        cursor.execute("SELECT id, payload FROM instances WHERE source = ? ORDER BY id", (source,))
    rows = cursor.fetchall()
    conn.close()
    return [(row['id'], hypergraph_from_dict(json.loads(row['payload']))) for row in rows]


def ingest_file(json_path: str, db_path: str = DB_PATH) -> dict:
    """
    Store a hypergraph JSON file as a sweep instance.

    Returns a summary of what was ingested.
    """
    init_database(db_path, quiet=True)
    instance_id = f"file:{Path(json_path).stem}"
    stats = {"instance_id": instance_id, "vertices": 0, "edges": 0, "errors": []}

    try:
        h = load_hypergraph(json_path)
    except DomainError as e:
        stats["errors"].append(str(e))
        return stats

    conn = get_connection(db_path)
    store_instance(conn.cursor(), instance_id, "file", h)
    conn.commit()
    conn.close()

    stats["vertices"], stats["edges"] = h.n, len(h.edges)
    return stats


def ingest_directory(dir_path: str, db_path: str = DB_PATH) -> list:
    """Ingest all JSON files in a directory."""
    results = []
    for json_file in sorted(Path(dir_path).glob("*.json")):
        print(f"Processing: {json_file.name}")
        stats = ingest_file(str(json_file), db_path)
        results.append(stats)
        if stats["errors"]:
            print(f"  - Skipped: {stats['errors'][0]}")
        else:
            print(f"  - Vertices: {stats['vertices']}, Edges: {stats['edges']}")
    return results
