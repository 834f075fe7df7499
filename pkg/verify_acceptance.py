#!/usr/bin/env python3
"""
Acceptance run: the chromatic, alternation, Gale, multichromatic and box
complex results the toolkit must reproduce exactly, each with its time
budget in seconds.

Usage:
    python verify_acceptance.py

Exit codes:
    0 = all criteria passed
    1 = one or more criteria failed
"""
import itertools
import sys
import tempfile
import time
from pathlib import Path

import networkx as nx
import numpy as np

from alternation import (alt_hypergraph, alt_of, alt_property, identity, property_p2, property_pnks, salt_hypergraph,
                         signed_image)
from box_complex import build_box_complex, check_z2_structure
from coloring import (chen_value, chromatic_number, complete_graph, kneser_family_graph, kneser_graph,
                      multichromatic_number)
from corpus import build_instances, evaluate_instance, load_corpus
from gale import corollary_configuration, verify_exact
from hypergraph import Hypergraph, complete_k_uniform, s_stable_k_uniform, schrijver_hypergraph

CHEN_CASES = [(6, 2, 2, 1), (8, 2, 2, 1), (8, 2, 2, 2), (9, 2, 2, 2)]
PNKS_CASES = [(8, 2, 2), (10, 2, 2), (9, 3, 2)]
RANDOM_SIGMAS = 3


def family_params(n_max: int):
    """(n, k) with 2k <= n <= n_max."""
    return [(n, k) for n in range(2, n_max + 1) for k in range(1, n // 2 + 1)]


def oracle_alt_hypergraph(h: Hypergraph, strong: bool) -> int:
    best = -1
    for x in itertools.product((1, -1, 0), repeat=h.n):
        pair = signed_image(x, identity(h.n))
        counts = [sum(1 for e in h.edges if e & ~side == 0) for side in (pair.plus, pair.minus)]
        if (min(counts) if strong else max(counts)) == 0:
            best = max(best, alt_of(x))
    return best


def criterion_kneser_chi() -> list[str]:
    return [f"chi(KG({n},{k})) = {chi}, expected {n - 2 * k + 2}"
            for n, k in family_params(7)
            if (chi := chromatic_number(kneser_family_graph(n, k)).chi) != n - 2 * k + 2]


def criterion_schrijver_chi() -> list[str]:
    return [f"chi(SG({n},{k})) = {chi}, expected {n - 2 * k + 2}"
            for n, k in family_params(7)
            if (chi := chromatic_number(kneser_graph(schrijver_hypergraph(n, k))).chi) != n - 2 * k + 2]


def criterion_alternation() -> list[str]:
    issues = []
    for n, k in family_params(8):
        h = complete_k_uniform(n, k)
        alt = alt_hypergraph(h)
        if alt != 2 * k - 2:
            issues.append(f"alt(K_{n}^{k}, I) = {alt}, expected {2 * k - 2}")
        elif alt != oracle_alt_hypergraph(h, strong=False):
            issues.append(f"alt(K_{n}^{k}, I) disagrees with the 3^n oracle")
        salt = salt_hypergraph(schrijver_hypergraph(n, k))
        if salt != 2 * k - 1:
            issues.append(f"salt(schrijver {n},{k}, I) = {salt}, expected {2 * k - 1}")
    return issues


def criterion_bound_chain() -> list[str]:
    """Corpus families plus 200 seeded random hypergraphs: no chain violation for any tested sigma."""
    config = load_corpus("corpus.yaml")
    if "error" in config:
        return [config["error"]]
    with tempfile.TemporaryDirectory() as tmp_dir:
        instances = build_instances(config, str(Path(tmp_dir) / "none.db"))
    if sum(1 for _, source, _ in instances if source == "random") < 200:
        return ["corpus holds fewer than 200 random hypergraphs"]

    issues = []
    rng = np.random.default_rng(config["seed"])
    for instance_id, _source, h in instances:
        row = evaluate_instance((instance_id, h, config["budget"], config["exact_max_dim"],
                                 config["trials"], config["seed"]))
        issues += [f"{instance_id}: {v}" for v in row["violations"]]
        chi = row["report"]["chi"]
        if chi is None or not h.edges:
            continue
        for _ in range(RANDOM_SIGMAS):
            sigma = tuple(int(v) for v in rng.permutation(h.n))
            if chi < h.n - alt_hypergraph(h, sigma) or chi < h.n - salt_hypergraph(h, sigma) + 1:
                issues.append(f"{instance_id}: chain violated at sigma {sigma}")
    return issues


def criterion_gale_exact() -> list[str]:
    issues = []
    for n, k in family_params(7):
        if n - 2 * k > 3:
            continue
        h = schrijver_hypergraph(n, k)
        z = corollary_configuration(h, mode="salt")
        if z.d != n - 2 * k:
            issues.append(f"schrijver {n},{k}: d = {z.d}, expected {n - 2 * k}")
            continue
        report = verify_exact(z, property_p2(h))
        if not report.ok:
            issues.append(f"schrijver {n},{k}: counterexample {report.counterexample}")
    return issues


def criterion_chen() -> list[str]:
    issues = []
    for n, k, s, m in CHEN_CASES:
        want = chen_value(n, k, s, m)
        got = multichromatic_number(kneser_graph(s_stable_k_uniform(n, k, s)), m, want + 1).value
        if got != want:
            issues.append(f"chi_{m}(KG({n},{k})_{s}) = {got}, expected {want}")
    return issues


def criterion_property_alternation() -> list[str]:
    issues = []
    for n, k, s in PNKS_CASES:
        prop = property_pnks(n, k, s)
        got = alt_property(prop).value
        oracle = -1
        for x in itertools.product((1, -1, 0), repeat=n):
            pair = signed_image(x, identity(n))
            if not prop(pair.plus, pair.minus):
                oracle = max(oracle, alt_of(x))
        if got != s * k - 1 or oracle != s * k - 1:
            issues.append(f"alt(P({n},{k},{s}), I) = {got} (oracle {oracle}), expected {s * k - 1}")
    return issues


def criterion_box_complex() -> list[str]:
    issues = []
    graphs = [(f"K_{n}", complete_graph(n)) for n in range(1, 7)]
    graphs += [("C_5", nx.cycle_graph(5)), ("Petersen", kneser_family_graph(5, 2))]
    for label, g in graphs:
        b0, b = build_box_complex(g, "b0"), build_box_complex(g, "b")
        if not b.simplices <= b0.simplices:
            issues.append(f"B({label}) is not inside B0({label})")
        for c in (b0, b):
            check = check_z2_structure(c)
            if not check.ok:
                issues.append(f"{c.variant}({label}) Z2 checks: {check.witnesses}")
        if label.startswith("K_"):
            n = g.number_of_nodes()
            if len(b0.simplices) != 3 ** n - 1:
                issues.append(f"B0({label}) has {len(b0.simplices)} simplices, expected {3 ** n - 1}")
    return issues


# (label, check, budget in seconds)
CRITERIA = [
    ("1 Kneser chi", criterion_kneser_chi, 60),
    ("2 Schrijver chi", criterion_schrijver_chi, 60),
    ("3 alt / salt values", criterion_alternation, 120),
    ("4 bound chain", criterion_bound_chain, None),
    ("5 Gale exact", criterion_gale_exact, 30),
    ("6 multichromatic", criterion_chen, 600),
    ("7 property alt", criterion_property_alternation, 300),
    ("8 box complex", criterion_box_complex, 10),
]


def main():
    print("=" * 50)
    print("ACCEPTANCE CRITERIA")
    print("=" * 50)

    failures = 0
    print(f"\n{'Criterion':<24} {'Seconds':>8}  {'Status'}")
    print("-" * 50)
    for name, check, budget in CRITERIA:
        start = time.perf_counter()
        issues = check()
        elapsed = time.perf_counter() - start
        if not issues and budget is not None and elapsed > budget:
            issues = [f"SLOW: over the {budget}s budget"]
        status = "PASS" if not issues else "FAIL: " + "; ".join(issues[:3])
        failures += bool(issues)
        print(f"{name:<24} {elapsed:>8.1f}  {status}")

    if failures:
        print(f"\nACCEPTANCE FAILED: {failures} criterion(s)")
        sys.exit(1)
    print("\nACCEPTANCE PASSED")
    sys.exit(0)


if __name__ == "__main__":
    main()
