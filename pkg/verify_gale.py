#!/usr/bin/env python3
"""
Verify the moment-curve configurations, hemisphere traces, exact covector
enumeration and the exact / sampled hemisphere verification.

Usage:
    python verify_gale.py

Exit codes:
    0 = all checks passed
    1 = one or more checks failed
"""
import math
import sys

import numpy as np

from alternation import SignedIncreasingProperty, property_p1, property_p2, property_pnks
from gale import (UNIT_TOLERANCE, build_configuration, chamber_count, check_general_position,
                  configuration_from_points, configuration_to_dict, corollary_configuration, enumerate_covectors,
                  hemisphere_trace, verify, verify_exact, verify_sampled)
from hypergraph import (CapacityError, DomainError, complete_k_uniform, hypergraph_from_edges, random_hypergraph,
                        schrijver_hypergraph)

SEED = 20130221

# n=5, d=1 points from the moment-curve formula
MOMENT_5_1 = [(-1 / math.sqrt(2), -1 / math.sqrt(2)), (1 / math.sqrt(5), 2 / math.sqrt(5)),
              (-1 / math.sqrt(10), -3 / math.sqrt(10)), (1 / math.sqrt(17), 4 / math.sqrt(17)),
              (-1 / math.sqrt(26), -5 / math.sqrt(26))]


def names(z, mask):
    return sorted(z.labels[v] for v in range(z.n) if mask >> v & 1)


def check_construction() -> list[str]:
    issues = []
    z = build_configuration(5, 1)
    if not np.allclose(z.points, MOMENT_5_1, atol=1e-12):
        issues.append(f"n=5, d=1 points {z.points.tolist()}")
    if build_configuration(2, 0).points.ravel().tolist() != [-1.0, 1.0]:
        issues.append("n=2, d=0 is not {-1, +1}")
    if build_configuration(3, 0).points.ravel().tolist() != [-1.0, 1.0, -1.0]:
        issues.append("n=3, d=0 is not the multiset {-1, +1, -1}")
    if np.any(np.abs(np.linalg.norm(build_configuration(8, 3).points, axis=1) - 1) > UNIT_TOLERANCE):
        issues.append("points are not unit vectors")
    for n, d in [(5, -1), (5, 5), (0, 0)]:
        try:
            build_configuration(n, d)
            issues.append(f"n={n}, d={d} accepted")
        except DomainError:
            pass
    exported = configuration_to_dict(build_configuration(3, 1, sigma=(2, 0, 1), labels="abc"))
    if exported["identification"] != ["c", "a", "b"] or exported["d"] != 1:
        issues.append(f"export {exported}")
    return issues


def check_traces() -> list[str]:
    issues = []
    z = build_configuration(5, 1)
    for x in [(0.0, 1.0), (1.0, 0.0)]:
        trace = hemisphere_trace(z, x)
        if names(z, trace.plus) != ["2", "4"] or names(z, trace.minus) != ["1", "3", "5"]:
            issues.append(f"x={x}: plus {names(z, trace.plus)}, minus {names(z, trace.minus)}")
    rng = np.random.default_rng(SEED)
    for _ in range(50):
        x = rng.standard_normal(2)
        x /= np.linalg.norm(x)
        a, b = hemisphere_trace(z, x), hemisphere_trace(z, -x)
        if (a.plus, a.minus, a.zero) != (b.minus, b.plus, b.zero):
            issues.append(f"antipodal traces disagree at {x.tolist()}")
            break
        if a.plus | a.minus | a.zero != (1 << z.n) - 1 or a.plus & a.minus:
            issues.append("trace does not partition the vertices")
            break
    try:
        hemisphere_trace(z, (1.0, 1.0))
        issues.append("non-unit direction accepted")
    except DomainError:
        pass
    return issues


def check_exact_arithmetic() -> list[str]:
    issues = []
    for n, d in [(4, 1), (6, 2), (7, 3), (8, 3)]:
        z = build_configuration(n, d)
        if check_general_position(z):
            issues.append(f"n={n}, d={d}: dependent (d+1)-subsets {check_general_position(z)[:2]}")
        covectors = enumerate_covectors(z.exact)
        full = [c for c in covectors if all(c)]
        if len(full) != chamber_count(n, d):
            issues.append(f"n={n}, d={d}: {len(full)} open cells, expected {chamber_count(n, d)}")
        for cov, witness in covectors.items():
            signs = tuple((v > 0) - (v < 0) for v in (sum(a * b for a, b in zip(p, witness)) for p in z.exact))
            if signs != cov:
                issues.append(f"n={n}, d={d}: witness {witness} realizes {signs}, not {cov}")
                break
        if (0,) * n in covectors:
            issues.append(f"n={n}, d={d}: zero covector on a full-rank configuration")
    # n lines through the origin of R^2: 2n sectors and 2n rays
    if len(enumerate_covectors(build_configuration(6, 1).exact)) != 24:
        issues.append("d=1 face count is not 4n")
    return issues


def check_verify_exact() -> list[str]:
    issues = []
    cases = [("schrijver 6,2 salt", build_configuration(6, 2), property_p2(schrijver_hypergraph(6, 2)), True),
             ("schrijver 5,2 salt", build_configuration(5, 1), property_p2(schrijver_hypergraph(5, 2)), True),
             ("K_5^2 alt", build_configuration(5, 2), property_p1(complete_k_uniform(5, 2)), True),
             ("empty property", build_configuration(4, 1), SignedIncreasingProperty("empty", 4, lambda a, b: False),
              False)]
    for label, z, prop, want in cases:
        report = verify_exact(z, prop)
        if report.ok != want:
            issues.append(f"{label}: ok = {report.ok}, expected {want}")
        if not want and report.counterexample is None:
            issues.append(f"{label}: failure without a counterexample")
        if report.to_dict().get("cells_checked") != report.checked:
            issues.append(f"{label}: report dict lacks cells_checked")
    try:
        verify_exact(build_configuration(6, 4), property_p1(complete_k_uniform(6, 1)))
        issues.append("exact mode accepted d = 4")
    except CapacityError:
        pass
    return issues


def check_verify_sampled() -> list[str]:
    issues = []
    report = verify_sampled(build_configuration(8, 4), property_pnks(8, 2, 2), trials=20_000, seed=7)
    if not report.ok:
        issues.append(f"P(8,2,2) on S^4: counterexample {report.counterexample}")
    again = verify_sampled(build_configuration(8, 4), property_pnks(8, 2, 2), trials=20_000, seed=7)
    if again.to_dict() != report.to_dict():
        issues.append("same seed gave a different sampled report")
    try:
        verify_sampled(build_configuration(4, 1), property_p1(complete_k_uniform(4, 2)), trials=0)
        issues.append("trials = 0 accepted")
    except DomainError:
        pass

    collapsed = configuration_from_points([[1, 0, 0]] * 5)
    prop = property_p2(complete_k_uniform(5, 2))
    if verify_sampled(collapsed, prop, trials=100).ok:
        issues.append("sampled mode missed the empty hemisphere of a collapsed configuration")
    exact = verify_exact(collapsed, prop)
    if exact.ok or exact.counterexample["plus"]:
        issues.append(f"exact mode on a collapsed configuration: {exact.to_dict()}")
    return issues


def check_corollary() -> list[str]:
    issues = []
    for n, k in [(4, 2), (5, 2), (6, 2), (7, 2), (6, 3), (7, 3)]:
        z = corollary_configuration(schrijver_hypergraph(n, k), mode="salt")
        if z.d != n - 2 * k:
            issues.append(f"schrijver {n},{k} salt: d = {z.d}, expected {n - 2 * k}")
    if corollary_configuration(complete_k_uniform(5, 2), mode="alt").d != 2:
        issues.append("K_5^2 alt: d != 2")
    try:
        corollary_configuration(hypergraph_from_edges("abc", []), mode="alt")
        issues.append("edgeless hypergraph accepted (d = -1)")
    except DomainError:
        pass
    return issues


def check_end_to_end() -> list[str]:
    """Every corollary configuration passes, and exact and sampled agree where both run."""
    issues = []
    rng = np.random.default_rng(SEED + 3)
    for i in range(40):
        h = random_hypergraph(rng, int(rng.integers(2, 8)), int(rng.integers(1, 9)))
        sigma = tuple(int(v) for v in rng.permutation(h.n))
        for mode, prop in (("alt", property_p1(h)), ("salt", property_p2(h))):
            try:
                z = corollary_configuration(h, sigma, mode)
            except DomainError:
                continue
            result = verify(z, prop, "auto", trials=1000, seed=SEED)
            if not result.ok:
                issues.append(f"random #{i} {mode} d={z.d}: counterexample {result.counterexample}")
            if z.d <= 3 and verify_sampled(z, prop, 500, SEED).ok != result.ok:
                issues.append(f"random #{i} {mode}: exact and sampled disagree")
    return issues


CHECKS = [
    ("construction", check_construction),
    ("hemisphere traces", check_traces),
    ("exact covectors", check_exact_arithmetic),
    ("verify_exact", check_verify_exact),
    ("verify_sampled", check_verify_sampled),
    ("corollary dimension", check_corollary),
    ("configuration end to end", check_end_to_end),
]


def main():
    print("=" * 50)
    print("GALE CONFIGURATION VERIFICATION")
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
