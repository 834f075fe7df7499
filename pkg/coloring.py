"""
Kneser graphs, exact chromatic and multichromatic numbers, and the bound
report comparing chi(KG(H)) with cd(H), |V|-alt(H) and |V|-salt(H)+1.

Graphs are networkx.Graph objects whose nodes carry a "label" attribute.
The exact solvers work on bit rows: node position i in sorted node order
is bit i.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field

import networkx as nx

from alternation import SearchBudget, alt_min
from hypergraph import (CapacityError, DomainError, Hypergraph, bits, colorability_defect,
                        complete_k_uniform, hypergraph_from_edges)


CHI_VERTEX_CAP = 120
HOM_VERTEX_CAP = 120


# ==================== GRAPH CONSTRUCTION ====================

def label_of(g: nx.Graph, v) -> str:
    return str(g.nodes[v].get("label", v))


def kneser_graph(h: Hypergraph) -> nx.Graph:
    """KG(H): one node per edge of H, adjacent when the edges are disjoint."""
    g = nx.Graph()
    for i, edge in enumerate(h.edges):
        g.add_node(i, label="{" + ",".join(h.names_of(edge)) + "}")
    for i, j in itertools.combinations(range(len(h.edges)), 2):
        if h.edges[i] & h.edges[j] == 0:
            g.add_edge(i, j)
    return g


def kneser_family_graph(n: int, k: int) -> nx.Graph:
    """KG(n,k)."""
    return kneser_graph(complete_k_uniform(n, k))


def complete_graph(n: int) -> nx.Graph:
    g = nx.complete_graph(n)
    nx.set_node_attributes(g, {v: str(v + 1) for v in g}, "label")
    return g


def petersen_graph() -> nx.Graph:
    g = nx.petersen_graph()
    nx.set_node_attributes(g, {v: str(v) for v in g}, "label")
    return g


def kneser_representation(g: nx.Graph) -> Hypergraph:
    """A hypergraph H with KG(H) isomorphic to g.

    Ground set: the vertices of g plus one element "u~v" per non-edge.
    The edge of v is {v} together with every non-edge at v, so two edges
    meet exactly when their vertices are non-adjacent.
    """
    nodes = sorted(g.nodes)
    names = [label_of(g, v) for v in nodes]
    non_edges = [(u, v) for u, v in itertools.combinations(nodes, 2) if not g.has_edge(u, v)]
    ground = names + [f"{label_of(g, u)}~{label_of(g, v)}" for u, v in non_edges]
    edges = []
    for v, name in zip(nodes, names):
        edges.append([name] + [f"{label_of(g, a)}~{label_of(g, b)}" for a, b in non_edges if v in (a, b)])
    return hypergraph_from_edges(ground, edges)


def bit_rows(g: nx.Graph) -> tuple[list, list[int]]:
    nodes = sorted(g.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    rows = [0] * len(nodes)
    for u, v in g.edges:
        if u == v:
            raise DomainError(f"graph has a loop at {label_of(g, u)}")
        rows[pos[u]] |= 1 << pos[v]
        rows[pos[v]] |= 1 << pos[u]
    return nodes, rows


# ==================== WITNESS CHECKERS ====================

def verify_coloring(g: nx.Graph, coloring: dict) -> list[str]:
    """Issues with a proper-coloring witness (empty list when valid)."""
    issues = [f"{label_of(g, v)} is uncolored" for v in g.nodes if v not in coloring]
    for u, v in g.edges:
        if u in coloring and v in coloring and coloring[u] == coloring[v]:
            issues.append(f"edge {label_of(g, u)}-{label_of(g, v)} is monochromatic ({coloring[u]})")
    return issues


def verify_homomorphism(g: nx.Graph, t: nx.Graph, f: dict) -> list[str]:
    """Issues with a homomorphism witness g -> t (empty list when valid)."""
    issues = [f"{label_of(g, v)} is unmapped" for v in g.nodes if v not in f]
    issues += [f"{label_of(g, v)} maps outside the target" for v in g.nodes if v in f and f[v] not in t]
    for u, v in g.edges:
        if u in f and v in f and f[u] in t and f[v] in t and not t.has_edge(f[u], f[v]):
            issues.append(f"edge {label_of(g, u)}-{label_of(g, v)} maps to non-edge "
                          f"{label_of(t, f[u])}-{label_of(t, f[v])}")
    return issues


# ==================== CHROMATIC NUMBER ====================

def greedy_clique(rows: list[int]) -> list[int]:
    """Largest clique among the greedy cliques grown from every vertex."""
    best: list[int] = []
    for start in range(len(rows)):
        clique, cand = [start], rows[start]
        while cand:
            u = max(bits(cand), key=lambda w: ((rows[w] & cand).bit_count(), -w))
            clique.append(u)
            cand &= rows[u]
        if len(clique) > len(best):
            best = clique
    return best


def _k_colorable(rows: list[int], k: int, clique: list[int]) -> list[int] | None:
    """Backtracking k-coloring with the clique pre-colored 0..|clique|-1."""
    n = len(rows)
    color = [-1] * n
    counts = [[0] * k for _ in range(n)]
    forbidden = [0] * n
    full = (1 << k) - 1

    def paint(v: int, c: int) -> bool:
        color[v] = c
        ok = True
        for u in bits(rows[v]):
            counts[u][c] += 1
            forbidden[u] |= 1 << c
            if color[u] < 0 and forbidden[u] == full:
                ok = False
        return ok

    def erase(v: int):
        c = color[v]
        color[v] = -1
        for u in bits(rows[v]):
            counts[u][c] -= 1
            if counts[u][c] == 0:
                forbidden[u] &= ~(1 << c)

    for c, v in enumerate(clique):
        if not paint(v, c):
            return None

    def search(remaining: int, top: int) -> bool:
        if remaining == 0:
            return True
        # DSATUR: most saturated, then most uncolored neighbours
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (forbidden[u].bit_count(),
                               sum(1 for w in bits(rows[u]) if color[w] < 0), -u))
        # colors above top are interchangeable, so try only top+1 among them
        for c in range(min(k, top + 2)):
            if forbidden[v] >> c & 1:
                continue
            if paint(v, c) and search(remaining - 1, max(top, c)):
                return True
            erase(v)
        return False

    if search(n - len(clique), len(clique) - 1):
        return color
    return None


@dataclass
class ColoringResult:
    chi: int
    coloring: dict
    clique: list


def chromatic_number(g: nx.Graph, cap: int = CHI_VERTEX_CAP) -> ColoringResult:
    """Exact chi(g) with an optimal coloring (colors 0..chi-1)."""
    if g.number_of_nodes() > cap:
        raise CapacityError(f"exact chromatic number refused: {g.number_of_nodes()} vertices exceeds cap {cap}")
    if g.number_of_nodes() == 0:
        return ColoringResult(0, {}, [])
    if g.number_of_edges() == 0:
        return ColoringResult(1, {v: 0 for v in g.nodes}, [min(g.nodes)])

    nodes, rows = bit_rows(g)
    clique = greedy_clique(rows)
    dsatur = nx.coloring.greedy_color(g, strategy="DSATUR")
    upper = max(dsatur.values()) + 1
    for k in range(len(clique), upper):
        color = _k_colorable(rows, k, clique)
        if color is not None:
            return ColoringResult(k, {nodes[i]: c for i, c in enumerate(color)}, [nodes[i] for i in clique])
    return ColoringResult(upper, dict(dsatur), [nodes[i] for i in clique])


# ==================== HOMOMORPHISMS ====================

def homomorphism_exists(g: nx.Graph, t: nx.Graph, cap: int = HOM_VERTEX_CAP,
                        symmetry: str | None = None) -> tuple[bool, dict | None]:
    """Decide g -> t, returning (True, witness map) or (False, None).

    symmetry="vertex" fixes one vertex of each component to target node 0,
    "arc" also fixes one of its neighbours to the first neighbour of target
    node 0.  Both are only sound when t is vertex- resp. arc-transitive, as
    Kneser graphs are.
    """
    if g.number_of_nodes() > cap or t.number_of_nodes() > cap:
        raise CapacityError(f"homomorphism search refused: graphs above {cap} vertices")
    if symmetry not in (None, "vertex", "arc"):
        raise DomainError(f"unknown symmetry mode {symmetry!r}")
    if g.number_of_nodes() == 0:
        return True, {}
    if t.number_of_nodes() == 0:
        return False, None

    g_nodes, g_rows = bit_rows(g)
    t_nodes, t_rows = bit_rows(t)
    n = len(g_nodes)
    full = (1 << len(t_nodes)) - 1
    non_isolated = sum(1 << i for i, row in enumerate(t_rows) if row)

    order = list(nx.coloring.strategy_smallest_last(g, {}))
    pos = {v: i for i, v in enumerate(g_nodes)}
    rank = [0] * n
    for r, v in enumerate(order):
        rank[pos[v]] = r

    domains = [non_isolated if row else full for row in g_rows]
    if any(d == 0 for d in domains):
        return False, None

    assignment = [-1] * n

    def search(doms: list[int], todo: int) -> bool:
        if not todo:
            return True
        v = min(bits(todo), key=lambda u: (doms[u].bit_count(), rank[u], u))
        for target in bits(doms[v]):
            narrowed = list(doms)
            narrowed[v] = 1 << target
            dead = False
            for u in bits(g_rows[v] & todo):
                narrowed[u] &= t_rows[target]
                if not narrowed[u]:
                    dead = True
                    break
            if dead:
                continue
            assignment[v] = target
            if search(narrowed, todo & ~(1 << v)):
                return True
            assignment[v] = -1
        return False

    for component in sorted(nx.connected_components(g), key=lambda c: min(pos[v] for v in c)):
        members = [pos[v] for v in component]
        todo = sum(1 << i for i in members)
        doms = list(domains)
        if symmetry is not None:
            seed = max(members, key=lambda u: (g_rows[u].bit_count(), -u))
            doms[seed] &= 1
            if symmetry == "arc" and g_rows[seed]:
                if not t_rows[0]:
                    return False, None
                neighbour = (g_rows[seed] & -g_rows[seed]).bit_length() - 1
                doms[neighbour] &= t_rows[0] & -t_rows[0]
            if any(doms[u] == 0 for u in members):
                return False, None
        if not search(doms, todo):
            return False, None

    return True, {g_nodes[i]: t_nodes[assignment[i]] for i in range(n)}


@dataclass
class MultiChiResult:
    m: int
    value: int
    homomorphism: dict


def multichromatic_number(g: nx.Graph, m: int, n_max: int, cap: int = HOM_VERTEX_CAP) -> MultiChiResult:
    """chi_m(g) = min{n : g -> KG(n, m)}, searched for n <= n_max."""
    if m < 1 or n_max < m:
        raise DomainError(f"need m >= 1 and n_max >= m (got m={m}, n_max={n_max})")
    clique = greedy_clique(bit_rows(g)[1]) if g.number_of_nodes() else []
    # a q-clique needs q pairwise disjoint m-sets
    start = max(m, m * len(clique))
    for n in range(start, n_max + 1):
        target = kneser_family_graph(n, m)
        found, f = homomorphism_exists(g, target, cap, symmetry="arc")
        if found:
            return MultiChiResult(m, n, f)
    raise CapacityError(f"chi_{m} not found below cap n_max={n_max}")


# ==================== CLOSED-FORM TARGETS ====================

def stahl_value(n: int, k: int, m: int) -> tuple[int, str]:
    """ceil(m/k)(n-2k)+2m, the conjectured chi_m(KG(n,k)); proven for k <= 3."""
    if k < 1 or m < 1 or n < 2 * k:
        raise DomainError(f"Stahl formula needs n >= 2k, k >= 1, m >= 1 (got n={n}, k={k}, m={m})")
    value = math.ceil(m / k) * (n - 2 * k) + 2 * m
    return value, "proven" if k <= 3 else "conjectural target"


def chen_value(n: int, k: int, s: int, m: int) -> int:
    """chi_m(KG(n,k)_s) = n - sk + sm for even s, n >= sk and m <= k."""
    if s % 2 or n < s * k or not 1 <= m <= k:
        raise DomainError(f"formula holds for even s, n >= sk, 1 <= m <= k (got n={n}, k={k}, s={s}, m={m})")
    return n - s * k + s * m


def meunier_value(n: int, k: int, s: int) -> tuple[int, str]:
    """n - s(k-1), the conjectured chi(KG(n,k)_s); proven when s is even."""
    if n < s * k:
        raise DomainError(f"need n >= sk (got n={n}, k={k}, s={s})")
    return n - s * (k - 1), "proven" if s % 2 == 0 else "conjectural target"


# ==================== BOUND REPORT ====================

@dataclass
class BoundReport:
    vertices: int
    edges: int
    chi: int | None = None
    cd: int | None = None
    alt: int | None = None
    salt: int | None = None
    alt_bound: int | None = None
    salt_bound: int | None = None
    dim_lb: int | None = None
    sdim_lb: int | None = None
    alt_sigma: list | None = None
    salt_sigma: list | None = None
    exact: dict = field(default_factory=dict)
    degenerate: bool = False
    errors: list = field(default_factory=list)

    def violations(self) -> list[str]:
        """Inequalities every correct run satisfies; any entry here is a bug."""
        if self.degenerate:
            return []
        out = []
        checks = [("chi >= alt_bound", self.chi, self.alt_bound),
                  ("chi >= salt_bound", self.chi, self.salt_bound),
                  ("chi >= cd", self.chi, self.cd),
                  ("alt_bound >= cd", self.alt_bound, self.cd)]
        for name, big, small in checks:
            if big is not None and small is not None and big < small:
                out.append(f"{name} violated ({big} < {small})")
        return out

    def to_dict(self) -> dict:
        out = asdict(self)
        out["violations"] = self.violations()
        return out


def bound_report(h: Hypergraph, budget: SearchBudget | None = None,
                 chi_cap: int = CHI_VERTEX_CAP) -> BoundReport:
    """Every field that can be computed; failures land in report.errors."""
    budget = budget or SearchBudget()
    report = BoundReport(vertices=h.n, edges=len(h.edges), degenerate=not h.edges)

    try:
        report.chi = chromatic_number(kneser_graph(h), chi_cap).chi
        report.exact["chi"] = True
    except (CapacityError, DomainError) as e:
        report.errors.append(f"chi: {e}")

    try:
        report.cd, _ = colorability_defect(h)
        report.exact["cd"] = True
    except (CapacityError, DomainError) as e:
        report.errors.append(f"cd: {e}")

    try:
        result = alt_min(h, "alt", budget)
        report.alt, report.alt_sigma = result.value, [h.vertices[i] for i in result.sigma]
        report.alt_bound, report.dim_lb = h.n - result.value, h.n - result.value - 1
        report.exact["alt"] = result.exact
    except (CapacityError, DomainError) as e:
        report.errors.append(f"alt: {e}")

    try:
        result = alt_min(h, "salt", budget)
        report.salt, report.salt_sigma = result.value, [h.vertices[i] for i in result.sigma]
        report.salt_bound, report.sdim_lb = h.n - result.value + 1, h.n - result.value - 1
        report.exact["salt"] = result.exact
    except (CapacityError, DomainError) as e:
        report.errors.append(f"salt: {e}")

    return report
