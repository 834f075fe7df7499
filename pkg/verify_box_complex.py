#!/usr/bin/env python3
"""
Verify box complex enumeration (f-vectors, B inside B0), the Z2 structure
checks and the maps induced by graph homomorphisms.

Usage:
    python verify_box_complex.py

Exit codes:
    0 = all checks passed
    1 = one or more checks failed
"""
import itertools
import sys

import networkx as nx

from box_complex import (BoxComplex, build_box_complex, check_z2_structure, common_neighbours, complex_to_dict,
                         f_vector, hom_induced_map, map_simplices)
from coloring import bit_rows, chromatic_number, complete_graph, kneser_family_graph
from hypergraph import CapacityError, DomainError

# label -> (graph, variant, f-vector)
F_VECTORS = {
    "B0(K_2)": (complete_graph(2), "b0", [4, 4]),
    "B(K_2)": (complete_graph(2), "b", [4, 2]),
    "B0(K_1)": (complete_graph(1), "b0", [2]),
    "B(K_1)": (complete_graph(1), "b", []),
    "B0(2 isolated)": (nx.empty_graph(2), "b0", [4, 2]),
    "B(2 isolated)": (nx.empty_graph(2), "b", []),
}


def check_f_vectors() -> list[str]:
    issues = []
    for label, (g, variant, want) in F_VECTORS.items():
        got = f_vector(build_box_complex(g, variant))
        if got != want:
            issues.append(f"{label} f-vector {got}, expected {want}")

    # B0(K_n) is every ordered pair of disjoint sets except (empty, empty)
    for n in range(1, 7):
        c = build_box_complex(complete_graph(n), "b0")
        if len(c.simplices) != 3 ** n - 1:
            issues.append(f"B0(K_{n}) has {len(c.simplices)} simplices, expected {3 ** n - 1}")
        if c.dimension != n - 1:
            issues.append(f"B0(K_{n}) has dimension {c.dimension}, expected {n - 1}")

    b0k2 = build_box_complex(complete_graph(2), "b0")
    if b0k2.maximal != [(0, 3), (1, 2), (2, 1), (3, 0)]:
        issues.append(f"B0(K_2) maximal simplices {b0k2.maximal}")
    exported = complex_to_dict(b0k2)
    if exported["simplex_count"] != 8 or len(exported["maximal_simplices"]) != 4 or not exported["z2"]["free"]:
        issues.append(f"B0(K_2) export {exported}")
    return issues


def check_definition() -> list[str]:
    """Simplices match the definition directly on C_5 and the Petersen graph; B lies inside B0."""
    issues = []
    for label, g in [("C_5", nx.cycle_graph(5)), ("Petersen", kneser_family_graph(5, 2))]:
        _, rows = bit_rows(g)
        n = len(rows)
        if common_neighbours(rows, 0) != (1 << n) - 1:
            issues.append(f"{label}: CN(empty) is not the whole vertex set")
        b0 = build_box_complex(g, "b0")
        b = build_box_complex(g, "b")
        if not b.simplices <= b0.simplices:
            issues.append(f"{label}: B is not a subcomplex of B0")
        for a, bb in b0.simplices:
            if a & bb:
                issues.append(f"{label}: simplex {(a, bb)} has overlapping sides")
                break
            if any(not rows[u] >> v & 1 for u, v in itertools.product(range(n), range(n))
                   if a >> u & 1 and bb >> v & 1):
                issues.append(f"{label}: simplex {(a, bb)} is not a complete bipartite pair")
                break
        for a, bb in b.simplices:
            if common_neighbours(rows, a) == 0 or common_neighbours(rows, bb) == 0:
                issues.append(f"{label}: B simplex {(a, bb)} has a side without common neighbours")
                break
    return issues


def check_z2() -> list[str]:
    issues = []
    for label, g in [("K_3", complete_graph(3)), ("C_5", nx.cycle_graph(5)), ("KG(4,2)", kneser_family_graph(4, 2))]:
        for variant in ("b", "b0"):
            check = check_z2_structure(build_box_complex(g, variant))
            if not check.ok:
                issues.append(f"{variant}({label}) failed the Z2 checks: {check.witnesses}")

    good = build_box_complex(complete_graph(2), "b0")
    broken = BoxComplex("b0", good.labels, good.simplices - {(1, 0)})
    check = check_z2_structure(broken)
    if check.hereditary or "hereditary" not in check.witnesses:
        issues.append("missing face (1, 0) not detected")
    if check.involution_closed:
        issues.append("missing swap image of (0, 1) not detected")
    if not check.free:
        issues.append("free action reported broken")
    return issues


def check_induced_maps() -> list[str]:
    issues = []
    k2, k3 = complete_graph(2), complete_graph(3)
    petersen = kneser_family_graph(5, 2)
    coloring = chromatic_number(petersen).coloring
    cases = [("identity on K_2", k2, k2, {0: 0, 1: 1}),
             ("K_2 -> K_3", k2, k3, {0: 0, 1: 2}),
             ("Petersen -> K_3", petersen, k3, coloring)]
    for label, g, h, f in cases:
        for variant in ("b", "b0"):
            ok, violation = hom_induced_map(g, h, f, variant)
            if not ok:
                issues.append(f"{label} ({variant}): {violation}")
    try:
        hom_induced_map(k3, k2, {0: 0, 1: 1, 2: 0})
        issues.append("non-homomorphism K_3 -> K_2 accepted")
    except DomainError:
        pass

    good = build_box_complex(k2, "b0")
    one_sided = BoxComplex("b0", good.labels, good.simplices - {(1, 0)})
    ok, violation = map_simplices(one_sided, one_sided, [0, 1])
    if ok or violation["simplex"] != {"first": [good.labels[0]], "second": []}:
        issues.append(f"map into a complex without the swap of (0, 1) accepted: {violation}")
    return issues


def check_limits() -> list[str]:
    issues = []
    try:
        build_box_complex(nx.empty_graph(17))
        issues.append("17 vertices accepted")
    except CapacityError:
        pass
    try:
        build_box_complex(complete_graph(2), "b1")
        issues.append("unknown variant accepted")
    except DomainError:
        pass
    return issues


CHECKS = [
    ("f-vectors", check_f_vectors),
    ("simplex definition", check_definition),
    ("Z2 structure", check_z2),
    ("induced maps", check_induced_maps),
    ("limits", check_limits),
]


def main():
    print("=" * 50)
    print("BOX COMPLEX VERIFICATION")
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
