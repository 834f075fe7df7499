#!/usr/bin/env python3
"""
Verify Kneser graph construction, exact chromatic numbers, homomorphism
search, multichromatic numbers and the bound report.

Usage:
    python verify_coloring.py

Exit codes:
    0 = all checks passed
    1 = one or more checks failed
"""
import itertools
import sys

import networkx as nx
import numpy as np

from coloring import (bound_report, chen_value, chromatic_number, complete_graph, homomorphism_exists,
                      kneser_family_graph, kneser_graph, kneser_representation, meunier_value,
                      multichromatic_number, petersen_graph, stahl_value, verify_coloring, verify_homomorphism)
from hypergraph import (CapacityError, DomainError, complete_k_uniform, hypergraph_from_edges,
                        s_stable_k_uniform, schrijver_hypergraph)

SEED = 20130221

# label -> (graph, chi)
CHI_REFERENCE = {
    "KG(5,2)": (kneser_family_graph(5, 2), 3),
    "K_4": (complete_graph(4), 4),
    "SG(6,2)": (kneser_graph(schrijver_hypergraph(6, 2)), 4),
    "KG(4,2)": (kneser_family_graph(4, 2), 2),
    "empty graph": (nx.Graph(), 0),
    "3 isolated vertices": (nx.empty_graph(3), 1),
    "C_5": (nx.cycle_graph(5), 3),
}

# label -> (hypergraph, chi, cd, alt_bound, salt_bound)
BOUND_REFERENCE = {
    "K_5^2": (complete_k_uniform(5, 2), 3, 3, 3, 3),
    "schrijver 6,2": (schrijver_hypergraph(6, 2), 4, None, None, 4),
    "sstable 8,2,2": (s_stable_k_uniform(8, 2, 2), 6, None, None, None),
    "kneser 4,2": (complete_k_uniform(4, 2), 2, 2, 2, None),
}


def oracle_chi(g: nx.Graph) -> int:
    nodes = list(g.nodes)
    for k in range(len(nodes) + 1):
        for colors in itertools.product(range(k), repeat=len(nodes)):
            c = dict(zip(nodes, colors))
            if all(c[u] != c[v] for u, v in g.edges):
                return k
    return len(nodes)


def random_graph(rng, n: int, p: float) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p)
    return g


def check_kneser_graphs() -> list[str]:
    issues = []
    kg52 = kneser_family_graph(5, 2)
    if (kg52.number_of_nodes(), kg52.number_of_edges()) != (10, 15) or not nx.is_isomorphic(kg52, petersen_graph()):
        issues.append("KG(5,2) is not the Petersen graph")
    kg42 = kneser_family_graph(4, 2)
    if (kg42.number_of_nodes(), kg42.number_of_edges()) != (6, 3):
        issues.append("KG(4,2) is not a perfect matching on 6 vertices")
    single = kneser_graph(hypergraph_from_edges("ab", [["a", "b"]]))
    if (single.number_of_nodes(), single.number_of_edges()) != (1, 0):
        issues.append("single-edge hypergraph does not give K_1")

    rng = np.random.default_rng(SEED)
    for label, g in [("petersen", petersen_graph()), ("C_5", nx.cycle_graph(5)),
                     ("random", random_graph(rng, 6, 0.5)), ("K_3", complete_graph(3))]:
        if not nx.is_isomorphic(kneser_graph(kneser_representation(g)), g):
            issues.append(f"KG of the Kneser representation of {label} is not isomorphic to it")
    return issues


def check_chromatic() -> list[str]:
    issues = []
    for label, (g, want) in CHI_REFERENCE.items():
        result = chromatic_number(g)
        if result.chi != want:
            issues.append(f"chi({label}) = {result.chi}, expected {want}")
        if verify_coloring(g, result.coloring):
            issues.append(f"chi({label}) witness rejected: {verify_coloring(g, result.coloring)[0]}")
        if len(set(result.coloring.values())) > result.chi:
            issues.append(f"chi({label}) witness uses more than chi colors")

    rng = np.random.default_rng(SEED + 1)
    for i in range(40):
        g = random_graph(rng, int(rng.integers(2, 7)), float(rng.uniform(0.2, 0.9)))
        chi = chromatic_number(g).chi
        if chi != oracle_chi(g):
            issues.append(f"random #{i}: chi {chi} != oracle {oracle_chi(g)}")
        non_edges = [e for e in itertools.combinations(g.nodes, 2) if not g.has_edge(*e)]
        if non_edges:
            bigger = g.copy()
            bigger.add_edge(*non_edges[0])
            if chromatic_number(bigger).chi < chi:
                issues.append(f"random #{i}: adding an edge lowered chi")

    try:
        chromatic_number(complete_graph(10), cap=8)
        issues.append("chromatic number above cap accepted")
    except CapacityError:
        pass
    return issues


def check_homomorphisms() -> list[str]:
    issues = []
    petersen = kneser_family_graph(5, 2)
    cases = [("Petersen -> KG(5,2)", petersen, kneser_family_graph(5, 2), True),
             ("Petersen -> KG(4,2)", petersen, kneser_family_graph(4, 2), False),
             ("K_2 -> K_1", complete_graph(2), complete_graph(1), False),
             ("C_5 -> K_3", nx.cycle_graph(5), complete_graph(3), True),
             ("C_5 -> K_2", nx.cycle_graph(5), complete_graph(2), False)]
    for label, g, t, want in cases:
        for symmetry in (None, "vertex", "arc"):
            found, f = homomorphism_exists(g, t, symmetry=symmetry)
            if found != want:
                issues.append(f"{label} (symmetry={symmetry}): {found}, expected {want}")
            if found and verify_homomorphism(g, t, f):
                issues.append(f"{label}: witness rejected: {verify_homomorphism(g, t, f)[0]}")

    # g -> K_k exactly when chi(g) <= k
    rng = np.random.default_rng(SEED + 2)
    for i in range(25):
        g = random_graph(rng, int(rng.integers(2, 8)), float(rng.uniform(0.2, 0.8)))
        chi = chromatic_number(g).chi
        for k in (chi - 1, chi):
            if k < 1:
                continue
            found, _ = homomorphism_exists(g, complete_graph(k), symmetry="arc")
            if found != (k >= chi):
                issues.append(f"random #{i}: g -> K_{k} is {found} with chi = {chi}")
    return issues


def check_multichromatic() -> list[str]:
    issues = []
    for label, (g, chi) in CHI_REFERENCE.items():
        if g.number_of_nodes() and multichromatic_number(g, 1, 8).value != chi:
            issues.append(f"chi_1({label}) != chi")
    result = multichromatic_number(kneser_family_graph(5, 2), 2, 8)
    if result.value != 5:
        issues.append(f"chi_2(KG(5,2)) = {result.value}, expected 5")
    if verify_homomorphism(kneser_family_graph(5, 2), kneser_family_graph(5, 2), result.homomorphism):
        issues.append("chi_2(KG(5,2)) witness rejected")
    sg = kneser_graph(s_stable_k_uniform(6, 2, 2))
    if multichromatic_number(sg, 1, 8).value != chen_value(6, 2, 2, 1):
        issues.append("chi_1(KG(6,2)_2) differs from n - sk + sm")
    try:
        multichromatic_number(kneser_family_graph(5, 2), 2, 4)
        issues.append("exhausted n_max did not raise")
    except CapacityError:
        pass
    try:
        multichromatic_number(complete_graph(2), 0, 4)
        issues.append("m = 0 accepted")
    except DomainError:
        pass
    return issues


def check_targets() -> list[str]:
    cases = [("stahl(5,2,2)", stahl_value(5, 2, 2), (5, "proven")),
             ("stahl(7,3,1)", stahl_value(7, 3, 1), (3, "proven")),
             ("stahl(9,4,2)", stahl_value(9, 4, 2), (5, "conjectural target")),
             ("chen(8,2,2,2)", chen_value(8, 2, 2, 2), 8),
             ("chen(9,2,2,2)", chen_value(9, 2, 2, 2), 9),
             ("meunier(8,2,2)", meunier_value(8, 2, 2), (6, "proven")),
             ("meunier(9,2,3)", meunier_value(9, 2, 3), (6, "conjectural target"))]
    issues = [f"{label} = {got}, expected {want}" for label, got, want in cases if got != want]
    try:
        chen_value(9, 2, 3, 1)
        issues.append("odd s accepted by chen_value")
    except DomainError:
        pass
    return issues


def check_bound_report() -> list[str]:
    issues = []
    for label, (h, chi, cd, alt_bound, salt_bound) in BOUND_REFERENCE.items():
        report = bound_report(h)
        for field, want in (("chi", chi), ("cd", cd), ("alt_bound", alt_bound), ("salt_bound", salt_bound)):
            if want is not None and getattr(report, field) != want:
                issues.append(f"{label}: {field} = {getattr(report, field)}, expected {want}")
        if report.violations():
            issues.append(f"{label}: {report.violations()}")
        if report.errors:
            issues.append(f"{label}: errors {report.errors}")

    edgeless = bound_report(hypergraph_from_edges("abc", []))
    if not edgeless.degenerate or edgeless.chi != 0 or edgeless.alt != 3 or edgeless.salt != 3:
        issues.append(f"edgeless report {edgeless.to_dict()}")

    broken = bound_report(complete_k_uniform(5, 2))
    broken.chi = 2
    if not broken.violations():
        issues.append("chi below the alternation bound not flagged")
    return issues


CHECKS = [
    ("Kneser graphs", check_kneser_graphs),
    ("chromatic number", check_chromatic),
    ("homomorphisms", check_homomorphisms),
    ("multichromatic number", check_multichromatic),
    ("closed-form targets", check_targets),
    ("bound report", check_bound_report),
]


def main():
    print("=" * 50)
    print("COLORING VERIFICATION")
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
