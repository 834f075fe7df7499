"""
Hypergraph data model, Kneser-representation generators, 2-colorability
and colorability defect.

Vertices keep the order they were given in; vertex i is bit i of an int,
so every edge and every vertex subset is a bitmask and the set algebra
below is plain integer arithmetic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


MAX_VERTICES = 64
CD_VERTEX_CAP = 24  # colorability_defect is exponential in n


class DomainError(ValueError):
    """An input violates the precondition of the operation it was passed to."""


class CapacityError(RuntimeError):
    """An input is larger than an exact solver is willing to handle."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Hypergraph:
    """A finite vertex list plus a family of distinct nonempty edges.

    `edges` holds bitmasks over the positions of `vertices`.
    """
    vertices: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex bitset capacity")
        if len(set(self.vertices)) != n:
            raise DomainError("vertex identifiers must be pairwise distinct")
        full = (1 << n) - 1
        seen = set()
        for edge in self.edges:
            if edge <= 0 or edge & ~full:
                raise DomainError(f"edge mask {edge:#x} is empty or leaves the vertex set")
            if edge in seen:
                raise DomainError(f"duplicate edge {self.names_of(edge)}")
            seen.add(edge)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise DomainError(f"unknown vertex {name!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        return mask_from_indices(self.index(str(name)) for name in names)

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in bits(mask))

    def edge_sets(self) -> list[tuple[str, ...]]:
        return [self.names_of(e) for e in self.edges]

    def contains_edge(self, mask: int) -> bool:
        """True if some edge lies entirely inside the vertex subset `mask`."""
        return any(e & ~mask == 0 for e in self.edges)


def hypergraph_from_edges(vertices: Iterable, edges: Iterable[Iterable]) -> Hypergraph:
    """Build a hypergraph from vertex names and edges given as name collections."""
    names = tuple(str(v) for v in vertices)
    index = {name: i for i, name in enumerate(names)}
    masks = []
    for edge in edges:
        members = [str(v) for v in edge]
        missing = [v for v in members if v not in index]
        if missing:
            raise DomainError(f"edge {members} uses unknown vertices {missing}")
        masks.append(mask_from_indices(index[v] for v in members))
    return Hypergraph(names, tuple(masks))


def _compress(mask: int, keep: int) -> int:
    """Re-index the bits of mask (a subset of keep) onto 0..|keep|-1."""
    out = 0
    for j, i in enumerate(bits(keep)):
        if mask >> i & 1:
            out |= 1 << j
    return out


def induced_subhypergraph(h: Hypergraph, subset: Iterable[str]) -> Hypergraph:
    """H[U]: vertex set U and every edge of H contained in U."""
    keep = h.mask_of(subset)
    vertices = h.names_of(keep)
    edges = tuple(_compress(e, keep) for e in h.edges if e & ~keep == 0)
    return Hypergraph(vertices, edges)


# ==================== 2-COLORABILITY ====================

def _two_color(edges: list[int], free_vertices: int, red: int = 0, blue: int = 0) -> tuple[int, int] | None:
    """Extend the partial coloring (red, blue) to all of free_vertices.

    Edges reduced to a single uncolored vertex force that vertex to the
    color missing from the edge.  Returns the full (red, blue) or None.
    """
    while True:
        forced = False
        colored = red | blue
        for e in edges:
            free = e & ~colored
            if free == 0:
                if e & red == e or e & blue == e:
                    return None
                continue
            if free & (free - 1):
                continue
            has_red, has_blue = e & red, e & blue
            if has_red and has_blue:
                continue
            if not has_red and not has_blue:
                return None  # singleton edge
            if has_red:
                blue |= free
            else:
                red |= free
            colored |= free
            forced = True
        if not forced:
            break

    uncolored = free_vertices & ~(red | blue)
    if not uncolored:
        return red, blue
    v = uncolored & -uncolored
    # swapping the two colors is a symmetry, so the very first choice is fixed
    options = (True,) if not red | blue else (True, False)
    for paint_red in options:
        result = _two_color(edges, free_vertices,
                            red | v if paint_red else red,
                            blue if paint_red else blue | v)
        if result is not None:
            return result
    return None


def is_two_colorable(h: Hypergraph) -> tuple[bool, dict[str, int] | None]:
    """Decide whether H has a 2-coloring with no monochromatic edge.

    Returns (True, {vertex: 1 or 2}) or (False, None).
    """
    result = _two_color(list(h.edges), h.full_mask)
    if result is None:
        return False, None
    red, _blue = result
    return True, {name: 1 if red >> i & 1 else 2 for i, name in enumerate(h.vertices)}


def colorability_defect(h: Hypergraph, cap: int = CD_VERTEX_CAP) -> tuple[int, tuple[str, ...]]:
    """Minimum number of vertices whose removal leaves a 2-colorable hypergraph.

    Tries deletion sets of size 0, 1, 2, ... in lexicographic order, so the
    cost is exponential in n.  Returns (cd, deleted vertex names).
    """
    if h.n > cap:
        raise CapacityError(f"colorability defect is exhaustive; {h.n} vertices exceeds cap {cap}")
    for size in range(h.n + 1):
        for deleted in itertools.combinations(range(h.n), size):
            gone = mask_from_indices(deleted)
            remaining = [e for e in h.edges if e & gone == 0]
            if _two_color(remaining, h.full_mask & ~gone) is not None:
                return size, tuple(h.vertices[i] for i in deleted)
    raise AssertionError("deleting every vertex always leaves a 2-colorable hypergraph")


# ==================== KNESER-REPRESENTATION FAMILIES ====================

def is_s_stable(members: Iterable[int], n: int, s: int) -> bool:
    """s <= |i-j| <= n-s for every pair of distinct members of [n]."""
    ordered = sorted(members)
    return all(s <= b - a <= n - s for a, b in itertools.combinations(ordered, 2))


def _positions(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


def complete_k_uniform(n: int, k: int) -> Hypergraph:
    """K_n^k: vertex set [n], edges all k-subsets."""
    if k < 1 or n < k:
        raise DomainError(f"complete k-uniform hypergraph needs n >= k >= 1 (got n={n}, k={k})")
    edges = tuple(mask_from_indices(c) for c in itertools.combinations(range(n), k))
    return Hypergraph(_positions(n), edges)


def s_stable_k_uniform(n: int, k: int, s: int) -> Hypergraph:
    """Vertex set [n], edges the s-stable k-subsets (possibly none when n < sk)."""
    if n < 1 or k < 1 or s < 1:
        raise DomainError(f"s-stable family needs positive n, k, s (got {n}, {k}, {s})")
    edges = tuple(
        mask_from_indices(c)
        for c in itertools.combinations(range(n), k)
        if is_s_stable((i + 1 for i in c), n, s)
    )
    return Hypergraph(_positions(n), edges)


def schrijver_hypergraph(n: int, k: int) -> Hypergraph:
    """The 2-stable k-subsets of [n]; its Kneser graph is SG(n,k)."""
    return s_stable_k_uniform(n, k, 2)


def random_hypergraph(rng: np.random.Generator, n: int, edge_count: int) -> Hypergraph:
    """A seeded random hypergraph on [n] with up to edge_count distinct edges."""
    edges: list[int] = []
    attempts = 0
    while len(edges) < edge_count and attempts < 20 * edge_count:
        attempts += 1
        size = int(rng.integers(1, n + 1))
        members = rng.choice(n, size=size, replace=False)
        mask = mask_from_indices(int(i) for i in members)
        if mask not in edges:
            edges.append(mask)
    return Hypergraph(_positions(n), tuple(edges))
