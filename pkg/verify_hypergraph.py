#!/usr/bin/env python3
"""
Verify the hypergraph model, family generators, 2-colorability and the
colorability defect against brute-force oracles.

Usage:
    python verify_hypergraph.py

Exit codes:
    0 = all checks passed
    1 = one or more checks failed
"""
import itertools
import sys

import numpy as np

from hypergraph import (CapacityError, DomainError, Hypergraph, colorability_defect, complete_k_uniform,
                        hypergraph_from_edges, induced_subhypergraph, is_s_stable, is_two_colorable,
                        random_hypergraph, s_stable_k_uniform, schrijver_hypergraph)

SEED = 20130221

# (n, k) -> number of edges of K_n^k
EDGE_COUNTS = {(5, 2): 10, (6, 3): 20, (4, 1): 4, (7, 2): 21}

# (n, k, s) -> number of s-stable k-subsets of [n]
STABLE_COUNTS = {(6, 2, 2): 9, (8, 2, 2): 20, (8, 2, 4): 4, (7, 3, 2): 7, (5, 3, 2): 0}


def oracle_two_colorable(h: Hypergraph, alive=None) -> bool:
    alive = list(range(h.n)) if alive is None else alive
    edges = [e for e in h.edges if all(e >> v & 1 == 0 for v in range(h.n) if v not in alive)]
    for colors in itertools.product((0, 1), repeat=len(alive)):
        red = sum(1 << v for v, c in zip(alive, colors) if c == 0)
        if all(e & red and e & ~red for e in edges):
            return True
    return False


def oracle_cd(h: Hypergraph) -> int:
    for size in range(h.n + 1):
        for deleted in itertools.combinations(range(h.n), size):
            if oracle_two_colorable(h, [v for v in range(h.n) if v not in deleted]):
                return size
    return h.n


def check_constructors() -> list[str]:
    issues = []
    for (n, k), count in EDGE_COUNTS.items():
        got = len(complete_k_uniform(n, k).edges)
        if got != count:
            issues.append(f"K_{n}^{k} has {got} edges, expected {count}")
    for (n, k, s), count in STABLE_COUNTS.items():
        got = len(s_stable_k_uniform(n, k, s).edges)
        if got != count:
            issues.append(f"{s}-stable {k}-subsets of [{n}]: {got}, expected {count}")
    if schrijver_hypergraph(6, 2).edges != s_stable_k_uniform(6, 2, 2).edges:
        issues.append("schrijver_hypergraph differs from the 2-stable family")

    for label, build in [("n < k", lambda: complete_k_uniform(2, 3)),
                         ("k = 0", lambda: complete_k_uniform(3, 0)),
                         ("duplicate edge", lambda: hypergraph_from_edges("abc", [["a", "b"], ["b", "a"]])),
                         ("unknown vertex", lambda: hypergraph_from_edges("ab", [["a", "z"]])),
                         ("duplicate vertex", lambda: hypergraph_from_edges(["a", "a"], [])),
                         ("empty edge", lambda: Hypergraph(("a",), (0,)))]:
        try:
            build()
            issues.append(f"{label} accepted")
        except DomainError:
            pass
    try:
        Hypergraph(tuple(str(i) for i in range(65)), ())
        issues.append("65 vertices accepted")
    except CapacityError:
        pass
    return issues


def check_stability() -> list[str]:
    cases = [((1, 3), 6, 2, True), ((1, 6), 6, 2, False), ((1, 5), 8, 4, True),
             ((2, 6), 8, 4, True), ((1, 4), 8, 4, False), ((3,), 5, 9, True)]
    return [f"is_s_stable({m}, n={n}, s={s}) != {want}"
            for m, n, s, want in cases if is_s_stable(m, n, s) != want]


def check_induced() -> list[str]:
    h = complete_k_uniform(5, 2)
    sub = induced_subhypergraph(h, ["1", "3", "4"])
    issues = []
    if sub.vertices != ("1", "3", "4"):
        issues.append(f"induced vertices {sub.vertices}")
    if sorted(sub.edge_sets()) != [("1", "3"), ("1", "4"), ("3", "4")]:
        issues.append(f"induced edges {sub.edge_sets()}")
    if not h.contains_edge(h.mask_of(["2", "5"])) or h.contains_edge(h.mask_of(["2"])):
        issues.append("contains_edge wrong on K_5^2")
    return issues


def check_two_coloring() -> list[str]:
    issues = []
    fixed = [("triangle", complete_k_uniform(3, 2), False),
             ("K_4^3", complete_k_uniform(4, 3), True),
             ("singleton edge", hypergraph_from_edges("ab", [["a"]]), False),
             ("edgeless", hypergraph_from_edges("abc", []), True)]
    for label, h, want in fixed:
        got, coloring = is_two_colorable(h)
        if got != want:
            issues.append(f"{label}: 2-colorable = {got}, expected {want}")
        if got and any(len({coloring[v] for v in e}) < 2 for e in h.edge_sets()):
            issues.append(f"{label}: witness has a monochromatic edge")

    rng = np.random.default_rng(SEED)
    for i in range(150):
        h = random_hypergraph(rng, int(rng.integers(2, 8)), int(rng.integers(1, 9)))
        got, coloring = is_two_colorable(h)
        if got != oracle_two_colorable(h):
            issues.append(f"random #{i}: 2-colorability disagrees with oracle")
        elif got and any(len({coloring[v] for v in e}) < 2 for e in h.edge_sets()):
            issues.append(f"random #{i}: witness has a monochromatic edge")
    return issues


def check_defect() -> list[str]:
    issues = []
    # cd(K_n^k) = n - 2(k-1)
    for n, k in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)]:
        cd, deleted = colorability_defect(complete_k_uniform(n, k))
        if cd != n - 2 * (k - 1):
            issues.append(f"cd(K_{n}^{k}) = {cd}, expected {n - 2 * (k - 1)}")
        if len(deleted) != cd:
            issues.append(f"cd(K_{n}^{k}) deletion set {deleted} has the wrong size")

    rng = np.random.default_rng(SEED + 1)
    for i in range(80):
        h = random_hypergraph(rng, int(rng.integers(2, 7)), int(rng.integers(1, 8)))
        cd, deleted = colorability_defect(h)
        if cd != oracle_cd(h):
            issues.append(f"random #{i}: cd {cd} != oracle {oracle_cd(h)}")
        elif not oracle_two_colorable(h, [v for v in range(h.n) if h.vertices[v] not in deleted]):
            issues.append(f"random #{i}: deleting {deleted} does not leave a 2-colorable hypergraph")

    try:
        colorability_defect(complete_k_uniform(10, 2), cap=8)
        issues.append("cd above cap accepted")
    except CapacityError:
        pass
    return issues


def check_random_reproducible() -> list[str]:
    a = random_hypergraph(np.random.default_rng(7), 8, 10)
    b = random_hypergraph(np.random.default_rng(7), 8, 10)
    return [] if a == b else ["same seed gave different random hypergraphs"]


CHECKS = [
    ("constructors", check_constructors),
    ("s-stable predicate", check_stability),
    ("induced subhypergraph", check_induced),
    ("2-colorability vs oracle", check_two_coloring),
    ("colorability defect", check_defect),
    ("seeded generator", check_random_reproducible),
]


def main():
    print("=" * 50)
    print("HYPERGRAPH VERIFICATION")
    print("=" * 50)

    failures = 0
    print(f"\n{'Check':<28} {'Status'}")
    print("-" * 50)
    for name, check in CHECKS:
        issues = check()
        failures += bool(issues)
        print(f"{name:<28} {'PASS' if not issues else 'FAIL: ' + '; '.join(issues[:3])}")

    if failures:
        print(f"\nVERIFICATION FAILED: {failures} check(s)")
        sys.exit(1)
    print("\nVERIFICATION PASSED")
    sys.exit(0)


if __name__ == "__main__":
    main()
