#!/usr/bin/env python3
"""
Verify sign-vector alternation, signed-increasing properties, alt/salt of
hypergraphs and the permutation minima against exhaustive oracles
(itertools.product over {+,-,0}^n, itertools.permutations).

Usage:
    python verify_alternation.py

Exit codes:
    0 = all checks passed
    1 = one or more checks failed
"""
import itertools
import sys

import numpy as np

from alternation import (ALL_IN_PROPERTY, SearchBudget, SignedIncreasingProperty, SignedPair, alt_hypergraph,
                         alt_min, alt_of, alt_property, build_property, check_superset_closed, identity,
                         property_alt_min, property_p1, property_p2, property_pnks, salt_hypergraph,
                         sign_vector, signed_image)
from hypergraph import (DomainError, Hypergraph, complete_k_uniform, hypergraph_from_edges, mask_from_indices,
                        random_hypergraph, schrijver_hypergraph)

SEED = 20130221

# sign vector -> alt
ALT_OF = {"000": 0, "+++": 1, "+-0+-": 4, "0+0-0+": 3, "-": 1, "": 0, "+-+-+-": 6}

# label -> (hypergraph, alt(H, I), salt(H, I))
REFERENCE = {
    "K_5^2":              (complete_k_uniform(5, 2), 2, 3),
    "schrijver 6,2":      (schrijver_hypergraph(6, 2), 3, 3),
    "edgeless on 4":      (hypergraph_from_edges("1234", []), 4, 4),
    "single edge {1,2,3}": (hypergraph_from_edges("123", [["1", "2", "3"]]), 3, 3),
}


def oracle_alt(prop: SignedIncreasingProperty, sigma) -> int:
    best = ALL_IN_PROPERTY
    for x in itertools.product((1, -1, 0), repeat=prop.n):
        pair = signed_image(x, sigma)
        if not prop(pair.plus, pair.minus):
            best = max(best, alt_of(x))
    return best


def oracle_alt_hypergraph(h: Hypergraph, sigma, strong: bool) -> int:
    """Direct definition: max alt(X) with max / min of the two edge counts zero."""
    best = -1
    for x in itertools.product((1, -1, 0), repeat=h.n):
        pair = signed_image(x, sigma)
        counts = [sum(1 for e in h.edges if e & ~side == 0) for side in (pair.plus, pair.minus)]
        if (min(counts) if strong else max(counts)) == 0:
            best = max(best, alt_of(x))
    return best


def oracle_min(prop: SignedIncreasingProperty) -> int:
    return min(oracle_alt(prop, sigma) for sigma in itertools.permutations(range(prop.n)))


def check_alt_of() -> list[str]:
    issues = [f"alt({text!r}) = {alt_of(text)}, expected {want}"
              for text, want in ALT_OF.items() if alt_of(text) != want]
    if sign_vector("+−0") != (1, -1, 0) or sign_vector([1, -1, 0]) != (1, -1, 0):
        issues.append("sign_vector does not normalize symbols")
    try:
        sign_vector("+x")
        issues.append("bad symbol accepted")
    except DomainError:
        pass
    for x in itertools.product((1, -1, 0), repeat=5):
        if alt_of(x) != alt_of(tuple(-s for s in x)):
            issues.append(f"alt not flip-invariant at {x}")
            break
        if alt_of(x) > sum(1 for s in x if s):
            issues.append(f"alt exceeds support at {x}")
            break
    return issues


def check_reference_values() -> list[str]:
    issues = []
    for label, (h, alt_want, salt_want) in REFERENCE.items():
        alt, salt = alt_hypergraph(h), salt_hypergraph(h)
        if alt != alt_want:
            issues.append(f"alt({label}, I) = {alt}, expected {alt_want}")
        if salt != salt_want:
            issues.append(f"salt({label}, I) = {salt}, expected {salt_want}")
        if alt != oracle_alt_hypergraph(h, identity(h.n), strong=False):
            issues.append(f"alt({label}, I) disagrees with the direct definition")
        if salt != oracle_alt_hypergraph(h, identity(h.n), strong=True):
            issues.append(f"salt({label}, I) disagrees with the direct definition")
    return issues


def check_random_equivalence() -> list[str]:
    """Generic alt_property with P1/P2 equals the direct definition for random sigma."""
    issues = []
    rng = np.random.default_rng(SEED)
    for i in range(60):
        h = random_hypergraph(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        sigma = tuple(int(v) for v in rng.permutation(h.n))
        alt, salt = alt_hypergraph(h, sigma), salt_hypergraph(h, sigma)
        if alt != oracle_alt_hypergraph(h, sigma, strong=False):
            issues.append(f"random #{i}: alt {alt} != oracle")
        if salt != oracle_alt_hypergraph(h, sigma, strong=True):
            issues.append(f"random #{i}: salt {salt} != oracle")
        if salt < alt:
            issues.append(f"random #{i}: salt {salt} < alt {alt}")
        witness = alt_property(property_p1(h), sigma).witness
        if witness is not None:
            pair = signed_image(witness, sigma)
            if property_p1(h)(pair.plus, pair.minus) or alt_of(witness) != alt:
                issues.append(f"random #{i}: alt witness {witness} is not a maximizer outside P1")
    return issues


def check_properties() -> list[str]:
    issues = []
    p8 = property_pnks(8, 2, 2)
    m = lambda *vs: mask_from_indices(v - 1 for v in vs)
    if not p8(m(1, 3), m(2, 5)):
        issues.append("P(8,2,2) rejects ({1,3},{2,5})")
    if p8(m(1), m(2, 5)):
        issues.append("P(8,2,2) accepts a side smaller than k")
    if not property_pnks(8, 2, 4)(m(1, 5, 2, 6), m(3, 7, 4, 8)):
        issues.append("P(8,2,4) rejects ({1,5,2,6},{3,7,4,8})")
    try:
        property_pnks(8, 2, 3)
        issues.append("odd s accepted")
    except DomainError:
        pass

    full_support = SignedIncreasingProperty("full", 3, lambda a, b: a | b == 0b111)
    cases = [("alt(P(8,2,2), I)", alt_property(p8).value, 3),
             ("full-support property on [3]", alt_property(full_support).value, 2),
             ("empty property on [4]", alt_property(build_property("empty:4")).value, 4),
             ("all pairs on [4]", alt_property(build_property("all:4")).value, ALL_IN_PROPERTY)]
    issues += [f"{label} = {got}, expected {want}" for label, got, want in cases if got != want]
    if not alt_property(build_property("all:4")).all_in_property:
        issues.append("all-in-property flag not set")
    if oracle_alt(full_support, identity(3)) != 2:
        issues.append("oracle disagrees on the full-support property")
    return issues


def check_closure() -> list[str]:
    issues = []
    h = complete_k_uniform(5, 2)
    for prop in (property_p1(h), property_p2(h), property_pnks(8, 2, 2)):
        if not check_superset_closed(prop, samples=400).ok:
            issues.append(f"{prop.name} reported as not superset-closed")
    singleton = SignedIncreasingProperty("|A|=1", 4, lambda a, b: a.bit_count() == 1)
    result = check_superset_closed(singleton, samples=400)
    if result.ok:
        issues.append("|A| = 1 property passed the closure check")
    elif not (result.counterexample[0].within(result.counterexample[1])
              and singleton.contains(result.counterexample[0])
              and not singleton.contains(result.counterexample[1])):
        issues.append(f"closure counterexample {result.counterexample} is not a violating chain")
    try:
        SignedPair(0b1, 0b1)
        issues.append("overlapping signed pair accepted")
    except DomainError:
        pass
    return issues


def check_alt_min() -> list[str]:
    issues = []
    result = alt_min(complete_k_uniform(5, 2), "alt")
    if (result.value, result.sigma, result.exact) != (2, identity(5), True):
        issues.append(f"alt(K_5^2) = {result}, expected 2 at the identity, exact")
    edgeless = hypergraph_from_edges("abc", [])
    if alt_min(edgeless, "salt").value != 3:
        issues.append("salt of an edgeless hypergraph is not n")

    rng = np.random.default_rng(SEED + 2)
    for i in range(12):
        h = random_hypergraph(rng, int(rng.integers(2, 6)), int(rng.integers(1, 6)))
        for mode, prop in (("alt", property_p1(h)), ("salt", property_p2(h))):
            got = alt_min(h, mode)
            want = oracle_min(prop)
            if got.value != want:
                issues.append(f"random #{i} {mode}: min {got.value} != oracle {want}")
            if oracle_alt(prop, got.sigma) != got.value:
                issues.append(f"random #{i} {mode}: sigma {got.sigma} does not attain {got.value}")
    return issues


def check_parallel_and_heuristic() -> list[str]:
    issues = []
    h = schrijver_hypergraph(6, 2)
    serial = alt_min(h, "salt", SearchBudget(workers=1))
    parallel = alt_min(h, "salt", SearchBudget(workers=3))
    if serial != parallel:
        issues.append(f"parallel result {parallel} differs from serial {serial}")

    h9 = complete_k_uniform(9, 2)
    heuristic = alt_min(h9, "alt", SearchBudget(exhaustive_max=8, anneal_steps=50))
    if heuristic.exact:
        issues.append("n = 9 above the exhaustive threshold reported exact")
    if heuristic.value > alt_hypergraph(h9):
        issues.append("annealing returned worse than the identity")
    if heuristic.value != alt_property(property_p1(h9), heuristic.sigma).value:
        issues.append("annealing value does not match its sigma")

    pnks = property_alt_min("pnks:6,2,2", budget=SearchBudget())
    if pnks.value != oracle_min(property_pnks(6, 2, 2)):
        issues.append(f"alt(P(6,2,2)) = {pnks.value} disagrees with the permutation oracle")
    return issues


CHECKS = [
    ("alt of sign vectors", check_alt_of),
    ("reference alt / salt", check_reference_values),
    ("P1/P2 vs direct definition", check_random_equivalence),
    ("named properties", check_properties),
    ("superset closure", check_closure),
    ("min over sigma vs oracle", check_alt_min),
    ("parallel and heuristic", check_parallel_and_heuristic),
]


def main():
    print("=" * 50)
    print("ALTERNATION VERIFICATION")
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
