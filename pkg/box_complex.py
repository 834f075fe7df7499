"""
Box complexes B(G) and B0(G) of small graphs.

A simplex A+B is stored as the bitpair (A, B) over the sorted nodes of G:
A holds the first copy of V(G), B the second.  The Z2 action swaps them.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import networkx as nx

from coloring import bit_rows, label_of, verify_homomorphism
from hypergraph import CapacityError, DomainError, bits


BOX_VERTEX_CAP = 16
VARIANTS = ("b", "b0")


@dataclass(frozen=True)
class BoxComplex:
    variant: str
    labels: tuple[str, ...]
    simplices: frozenset[tuple[int, int]]

    @property
    def maximal(self) -> list[tuple[int, int]]:
        out = []
        for a, b in self.simplices:
            free = ((1 << len(self.labels)) - 1) & ~(a | b)
            if not any((a | 1 << v, b) in self.simplices or (a, b | 1 << v) in self.simplices
                       for v in bits(free)):
                out.append((a, b))
        return sorted(out)

    @property
    def dimension(self) -> int:
        return max(((a | b).bit_count() - 1 for a, b in self.simplices), default=-1)


@dataclass
class Z2Check:
    hereditary: bool
    involution_closed: bool
    free: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.hereditary and self.involution_closed and self.free


def common_neighbours(rows: list[int], a: int) -> int:
    """CN(A); CN(empty set) is the whole vertex set."""
    out = (1 << len(rows)) - 1
    for v in bits(a):
        out &= rows[v]
    return out


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def build_box_complex(g: nx.Graph, variant: str = "b0", cap: int = BOX_VERTEX_CAP) -> BoxComplex:
    """All nonempty A+B with A, B disjoint and G[A,B] complete; variant "b" also needs CN(A), CN(B) nonempty."""
    variant = variant.lower()
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS} (got {variant!r})")
    if g.number_of_nodes() > cap:
        raise CapacityError(f"box complex enumeration refused: {g.number_of_nodes()} vertices exceeds cap {cap}")
    nodes, rows = bit_rows(g)
    n = len(nodes)
    full = (1 << n) - 1
    cn = [common_neighbours(rows, a) for a in range(1 << n)]

    simplices = set()
    for a in range(1 << n):
        if variant == "b" and cn[a] == 0:
            continue
        # B inside CN(A) is exactly "G[A,B] complete"; no loops makes it disjoint from A
        for b in _submasks(cn[a] & ~a if a else full):
            if a == 0 and b == 0:
                continue
            if variant == "b" and cn[b] == 0:
                continue
            simplices.add((a, b))
    return BoxComplex(variant, tuple(label_of(g, v) for v in nodes), frozenset(simplices))


def f_vector(c: BoxComplex) -> list[int]:
    """Simplex counts by dimension 0..dim."""
    counts = Counter((a | b).bit_count() - 1 for a, b in c.simplices)
    return [counts[i] for i in range(c.dimension + 1)]


def check_z2_structure(c: BoxComplex) -> Z2Check:
    check = Z2Check(True, True, True)
    for a, b in sorted(c.simplices):
        if check.hereditary:
            for v in bits(a | b):
                face = (a & ~(1 << v), b & ~(1 << v))
                if face != (0, 0) and face not in c.simplices:
                    check.hereditary = False
                    check.witnesses["hereditary"] = {"simplex": _pair_dict(c, a, b),
                                                     "missing_face": _pair_dict(c, *face)}
                    break
        if check.involution_closed and (b, a) not in c.simplices:
            check.involution_closed = False
            check.witnesses["involution_closed"] = _pair_dict(c, a, b)
        if check.free and (a, b) == (b, a):
            check.free = False
            check.witnesses["free"] = _pair_dict(c, a, b)
    return check


def hom_induced_map(g: nx.Graph, h: nx.Graph, f: dict, variant: str = "b0") -> tuple[bool, dict | None]:
    """Check that (v,i) -> (f(v),i) maps variant(G) simplicially into variant(H) and commutes with the swap."""
    issues = verify_homomorphism(g, h, f)
    if issues:
        raise DomainError(f"not a graph homomorphism: {issues[0]}")
    source = build_box_complex(g, variant)
    target = build_box_complex(h, variant)
    g_nodes, _ = bit_rows(g)
    h_pos = {v: i for i, v in enumerate(sorted(h.nodes))}
    return map_simplices(source, target, [h_pos[f[v]] for v in g_nodes])


def map_simplices(source: BoxComplex, target: BoxComplex, image: list[int]) -> tuple[bool, dict | None]:
    """Push every simplex of source through the vertex map `image`.

    Both (A, B) and its swap (B, A) must land on simplices of target.
    Returns (True, None) or (False, first offending simplex and its image).
    """
    def push(mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= 1 << image[v]
        return out

    for a, b in sorted(source.simplices):
        for pair in ((a, b), (b, a)):
            mapped = (push(pair[0]), push(pair[1]))
            if mapped not in target.simplices:
                return False, {"simplex": _pair_dict(source, *pair), "image": _pair_dict(target, *mapped)}
    return True, None


def _pair_dict(c: BoxComplex, a: int, b: int) -> dict:
    return {"first": [c.labels[v] for v in bits(a)], "second": [c.labels[v] for v in bits(b)]}


def complex_to_dict(c: BoxComplex) -> dict:
    z2 = check_z2_structure(c)
    return {"variant": c.variant,
            "vertices": list(c.labels),
            "f_vector": f_vector(c),
            "dimension": c.dimension,
            "simplex_count": len(c.simplices),
            "maximal_simplices": [_pair_dict(c, a, b) for a, b in c.maximal],
            "z2": {"hereditary": z2.hereditary, "involution_closed": z2.involution_closed,
                   "free": z2.free, "witnesses": z2.witnesses}}
