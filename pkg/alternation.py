"""
Alternation numbers of sign vectors, signed-increasing properties and
hypergraphs.

Conventions:
  - a sign vector X in {+,-,0}^n is a tuple of ints in {1, -1, 0};
  - a signed pair (A, B) is a pair of disjoint vertex bitmasks;
  - a bijection sigma is a tuple where sigma[i] is the vertex index placed
    at position i (0-based), so X_sigma = (sigma(X+), sigma(X-)).
"""
from __future__ import annotations

import math
import multiprocessing as mp
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from hypergraph import DomainError, Hypergraph, bits, mask_from_indices, s_stable_k_uniform


DEFAULT_SEED = 20130221
EXHAUSTIVE_MAX = 8
ANNEAL_STEPS = 400
ALL_IN_PROPERTY = -1  # alt(P, sigma) when no sign vector lies outside P

_SYMBOLS = {"+": 1, "-": -1, "−": -1, "0": 0, 1: 1, -1: -1, 0: 0}


def sign_vector(entries: Iterable | str) -> tuple[int, ...]:
    """Normalize '+-0' text or a sequence of symbols/ints to a sign tuple."""
    out = []
    for entry in entries:
        if entry in (",", " "):
            continue
        if entry not in _SYMBOLS:
            raise DomainError(f"sign entry {entry!r} is not one of +, -, 0")
        out.append(_SYMBOLS[entry])
    return tuple(out)


def format_sign_vector(x: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in x)


def alt_of(x: Iterable | str) -> int:
    """Length of the longest alternating subsequence of nonzero entries."""
    signs = [s for s in sign_vector(x) if s]
    if not signs:
        return 0
    return 1 + sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ==================== DOMAIN TYPES ====================

@dataclass(frozen=True)
class SignedPair:
    """(A, B) in the signed power set: two disjoint vertex subsets."""
    plus: int
    minus: int

    def __post_init__(self):
        if self.plus & self.minus:
            raise DomainError("the two sides of a signed pair must be disjoint")

    def within(self, other: SignedPair) -> bool:
        """(A,B) ⊆ (C,D) componentwise."""
        return self.plus & ~other.plus == 0 and self.minus & ~other.minus == 0

    def swapped(self) -> SignedPair:
        return SignedPair(self.minus, self.plus)


@dataclass(frozen=True)
class SignedIncreasingProperty:
    """A superset-closed family of signed pairs, given by its membership test."""
    name: str
    n: int
    predicate: Callable[[int, int], bool]

    def __call__(self, plus: int, minus: int) -> bool:
        return self.predicate(plus, minus)

    def contains(self, pair: SignedPair) -> bool:
        return self.predicate(pair.plus, pair.minus)


@dataclass(frozen=True)
class AltResult:
    value: int
    witness: tuple[int, ...] | None

    @property
    def all_in_property(self) -> bool:
        return self.value == ALL_IN_PROPERTY


@dataclass(frozen=True)
class AltMinResult:
    value: int
    sigma: tuple[int, ...]
    exact: bool


@dataclass(frozen=True)
class SearchBudget:
    exhaustive_max: int = EXHAUSTIVE_MAX
    anneal_steps: int = ANNEAL_STEPS
    seed: int = DEFAULT_SEED
    workers: int = 1


@dataclass(frozen=True)
class ClosureCheck:
    ok: bool
    samples: int
    counterexample: tuple[SignedPair, SignedPair] | None = None


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def check_bijection(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(int(i) for i in sigma)
    if sorted(sigma) != list(range(n)):
        raise DomainError(f"sigma {sigma} is not a bijection onto {n} vertices")
    return sigma


def signed_image(x: Sequence[int], sigma: Sequence[int]) -> SignedPair:
    """X -> X_sigma = (sigma(X+), sigma(X-))."""
    plus = mask_from_indices(sigma[i] for i, s in enumerate(x) if s > 0)
    minus = mask_from_indices(sigma[i] for i, s in enumerate(x) if s < 0)
    return SignedPair(plus, minus)


# ==================== PROPERTIES ====================

def _edge_test(h: Hypergraph) -> Callable[[int], bool]:
    @lru_cache(maxsize=None)
    def contains_edge(mask: int) -> bool:
        return h.contains_edge(mask)
    return contains_edge


def property_p1(h: Hypergraph) -> SignedIncreasingProperty:
    """At least one of A and B contains some edge of H."""
    side = _edge_test(h)
    return SignedIncreasingProperty("p1", h.n, lambda a, b: side(a) or side(b))


def property_p2(h: Hypergraph) -> SignedIncreasingProperty:
    """Both A and B contain some edge of H."""
    side = _edge_test(h)
    return SignedIncreasingProperty("p2", h.n, lambda a, b: side(a) and side(b))


def _has_disjoint(candidates: list[int], need: int, used: int = 0, start: int = 0) -> bool:
    if need == 0:
        return True
    for i in range(start, len(candidates)):
        c = candidates[i]
        if c & used == 0 and _has_disjoint(candidates, need - 1, used | c, i + 1):
            return True
    return False


def property_pnks(n: int, k: int, s: int) -> SignedIncreasingProperty:
    """Each of A and B holds s/2 pairwise disjoint s-stable k-subsets of [n]."""
    if s < 1 or s % 2:
        raise DomainError(f"P(n,k,s) is defined for even s (got s={s})")
    stable = list(s_stable_k_uniform(n, k, s).edges)
    need = s // 2

    @lru_cache(maxsize=None)
    def side(mask: int) -> bool:
        return _has_disjoint([e for e in stable if e & ~mask == 0], need)

    return SignedIncreasingProperty(f"pnks:{n},{k},{s}", n, lambda a, b: side(a) and side(b))


def _parse_ints(text: str, count: int, spec: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise DomainError(f"malformed parameters in {spec!r}") from None
    if len(values) != count:
        raise DomainError(f"{spec!r} needs {count} comma-separated integers")
    return values


def build_property(spec: str, h: Hypergraph | None = None) -> SignedIncreasingProperty:
    """Registry of named properties: p1, p2 (need a hypergraph), pnks:n,k,s, empty, all."""
    name, _, params = spec.partition(":")
    if name in ("p1", "p2"):
        if h is None:
            raise DomainError(f"property {name} is derived from a hypergraph; none was given")
        return property_p1(h) if name == "p1" else property_p2(h)
    if name == "pnks":
        return property_pnks(*_parse_ints(params, 3, spec))
    if name == "empty":
        n = h.n if h is not None else _parse_ints(params, 1, spec)[0]
        return SignedIncreasingProperty("empty", n, lambda a, b: False)
    if name == "all":
        n = h.n if h is not None else _parse_ints(params, 1, spec)[0]
        return SignedIncreasingProperty("all", n, lambda a, b: True)
    raise DomainError(f"unknown property {spec!r} (expected p1, p2, pnks:n,k,s, empty, all)")


def property_for_mode(h: Hypergraph, mode: str) -> SignedIncreasingProperty:
    if mode not in ("alt", "salt"):
        raise DomainError(f"mode must be 'alt' or 'salt' (got {mode!r})")
    return property_p1(h) if mode == "alt" else property_p2(h)


def check_superset_closed(prop: SignedIncreasingProperty, samples: int = 1000,
                          seed: int = DEFAULT_SEED) -> ClosureCheck:
    """Spot-check monotonicity on random chains (A,B) ⊆ (C,D)."""
    rng = np.random.default_rng(seed)
    n = prop.n
    for _ in range(samples):
        x = rng.integers(-1, 2, size=n)
        y = x.copy()
        grow = (x == 0) & (rng.random(n) < 0.5)
        y[grow] = rng.choice((-1, 1), size=int(grow.sum()))
        small = SignedPair(mask_from_indices(np.flatnonzero(x > 0).tolist()),
                           mask_from_indices(np.flatnonzero(x < 0).tolist()))
        large = SignedPair(mask_from_indices(np.flatnonzero(y > 0).tolist()),
                           mask_from_indices(np.flatnonzero(y < 0).tolist()))
        if prop.contains(small) and not prop.contains(large):
            return ClosureCheck(False, samples, (small, large))
    return ClosureCheck(True, samples)


# ==================== ALT(P, SIGMA) ====================

def _max_alternation(prop: SignedIncreasingProperty, sigma: Sequence[int],
                     stop_at: int | None = None) -> tuple[int, tuple[int, ...] | None]:
    """Largest alt(X) with X_sigma outside prop, over X supported on len(sigma) positions.

    Depth-first over positions.  A partial vector already in prop ends its
    subtree, since every completion is a superset pair.  Repeating the last
    sign is never tried: the same vector with a 0 there has the same
    alternation and a smaller pair.  With stop_at, returns as soon as the
    best value reaches it.
    """
    length = len(sigma)
    best = ALL_IN_PROPERTY
    best_vec: tuple[int, ...] | None = None
    vec = [0] * length

    def visit(pos: int, plus: int, minus: int, alt: int, last: int) -> bool:
        nonlocal best, best_vec
        if prop(plus, minus):
            return False
        if alt > best:
            best, best_vec = alt, tuple(vec)
            if stop_at is not None and best >= stop_at:
                return True
        if pos == length or alt + (length - pos) <= best:
            return False
        bit = 1 << sigma[pos]
        for sign in ((-last,) if last else (1, -1)):
            vec[pos] = sign
            done = (visit(pos + 1, plus | bit, minus, alt + 1, 1) if sign > 0
                    else visit(pos + 1, plus, minus | bit, alt + 1, -1))
            vec[pos] = 0
            if done:
                return True
        return visit(pos + 1, plus, minus, alt, last)

    visit(0, 0, 0, 0, 0)
    return best, best_vec


def alt_property(prop: SignedIncreasingProperty, sigma: Sequence[int] | None = None) -> AltResult:
    """alt(P, sigma) = max{alt(X) : X_sigma not in P}, or ALL_IN_PROPERTY."""
    sigma = identity(prop.n) if sigma is None else check_bijection(sigma, prop.n)
    value, witness = _max_alternation(prop, sigma)
    if witness is not None:
        witness = witness + (0,) * (prop.n - len(witness))
    return AltResult(value, witness)


def alt_hypergraph(h: Hypergraph, sigma: Sequence[int] | None = None) -> int:
    """alt(H, sigma): neither sigma(X+) nor sigma(X-) contains an edge."""
    return alt_property(property_p1(h), sigma).value


def salt_hypergraph(h: Hypergraph, sigma: Sequence[int] | None = None) -> int:
    """salt(H, sigma): at least one of sigma(X+), sigma(X-) contains no edge."""
    return alt_property(property_p2(h), sigma).value


# ==================== MIN OVER SIGMA ====================

def _branch_and_bound(prop: SignedIncreasingProperty, first: Iterable[int],
                      incumbent: tuple[int, tuple[int, ...]]) -> tuple[int, tuple[int, ...]]:
    """Lexicographic search over permutations starting with a vertex in `first`.

    A prefix whose supported vectors already reach the incumbent value
    cannot lead to a strictly better sigma and is cut.
    """
    n = prop.n
    best_value, best_sigma = incumbent
    prefix: list[int] = []

    def extend(used: int) -> None:
        nonlocal best_value, best_sigma
        if len(prefix) == n:
            value, _ = _max_alternation(prop, prefix)
            if value < best_value:
                best_value, best_sigma = value, tuple(prefix)
            return
        reached, _ = _max_alternation(prop, prefix, stop_at=best_value)
        if reached >= best_value:
            return
        for v in range(n):
            if not used >> v & 1:
                prefix.append(v)
                extend(used | 1 << v)
                prefix.pop()

    for v in first:
        prefix.append(v)
        extend(1 << v)
        prefix.pop()
    return best_value, best_sigma


def _subtree_worker(args) -> tuple[int, tuple[int, ...]]:
    # properties hold closures, so each worker rebuilds its own from the spec
    spec, h, v, incumbent = args
    return _branch_and_bound(build_property(spec, h), [v], incumbent)


def _anneal(prop: SignedIncreasingProperty, budget: SearchBudget) -> tuple[int, tuple[int, ...]]:
    """Simulated annealing over adjacent transpositions, fixed seed."""
    rng = np.random.default_rng(budget.seed)
    n = prop.n
    if n < 2:
        return _max_alternation(prop, identity(n))[0], identity(n)
    seen: dict[tuple[int, ...], int] = {}

    def value_of(sigma: tuple[int, ...]) -> int:
        if sigma not in seen:
            seen[sigma] = _max_alternation(prop, sigma)[0]
        return seen[sigma]

    current = identity(n)
    current_value = value_of(current)
    best = (current_value, current)
    steps = max(budget.anneal_steps, 1)
    for step in range(steps):
        temperature = max(1.0 - step / steps, 1e-3)
        i = int(rng.integers(0, n - 1))
        candidate = list(current)
        candidate[i], candidate[i + 1] = candidate[i + 1], candidate[i]
        candidate = tuple(candidate)
        value = value_of(candidate)
        if value <= current_value or rng.random() < math.exp((current_value - value) / temperature):
            current, current_value = candidate, value
            best = min(best, (value, candidate))
    return best


def property_alt_min(spec: str, h: Hypergraph | None = None,
                     budget: SearchBudget | None = None) -> AltMinResult:
    """alt(P) = min over sigma of alt(P, sigma) for a registered property.

    Exact (all n! bijections, branch and bound) when n <= budget.exhaustive_max;
    otherwise the best sigma found by annealing, which is an upper bound.
    Ties go to the lexicographically smallest sigma.
    """
    budget = budget or SearchBudget()
    prop = build_property(spec, h)
    n = prop.n
    start = identity(n)
    if n == 0 or prop(0, 0):
        return AltMinResult(_max_alternation(prop, start)[0], start, True)
    if n > budget.exhaustive_max:
        value, sigma = _anneal(prop, budget)
        return AltMinResult(value, sigma, False)

    incumbent = (_max_alternation(prop, start)[0], start)
    if budget.workers > 1 and n > 1:
        tasks = [(spec, h, v, incumbent) for v in range(n)]
        with mp.Pool(min(budget.workers, n)) as pool:
            results = pool.map(_subtree_worker, tasks)
        value, sigma = min(results)
    else:
        value, sigma = _branch_and_bound(prop, range(n), incumbent)
    return AltMinResult(value, sigma, True)


def alt_min(h: Hypergraph, mode: str = "alt", budget: SearchBudget | None = None) -> AltMinResult:
    """alt(H) (mode 'alt') or salt(H) (mode 'salt') with a minimizing sigma."""
    if mode not in ("alt", "salt"):
        raise DomainError(f"mode must be 'alt' or 'salt' (got {mode!r})")
    return property_alt_min("p1" if mode == "alt" else "p2", h, budget=budget)


def sigma_names(h_vertices: Sequence[str], sigma: Sequence[int]) -> list[str]:
    """The vertex names in sigma order (position 1 first)."""
    return [h_vertices[i] for i in sigma]


def pair_names(vertices: Sequence[str], pair: SignedPair) -> dict[str, list[str]]:
    return {"plus": [vertices[i] for i in bits(pair.plus)],
            "minus": [vertices[i] for i in bits(pair.minus)]}
