"""
Point configurations on S^d built from the moment curve, and verification
that every open-hemisphere trace lies in a signed-increasing property.

Point i (1-based) is z_i = (-1)^i w_i / ||w_i|| with w_i = (1, i, ..., i^d).
Sign decisions in exact mode use the integer vectors (-1)^i w_i; dividing
by the norm never changes the sign of <x, z_i>.

Exact verification enumerates every covector (sign vector of <x, z_i> over
all nonzero x) of the central arrangement {z_i^perp}.  Cocircuits come
from d of the points at a time as integer generalized cross products; every
other covector is a composition of cocircuits, and each composition keeps
an integer direction realizing it.  Open cells and all boundary strata are
therefore decided with integer arithmetic only.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from alternation import (DEFAULT_SEED, SignedIncreasingProperty, alt_hypergraph,
                         check_bijection, identity, salt_hypergraph)
from hypergraph import CapacityError, DomainError, Hypergraph


EXACT_MAX_DIM = 3
ZERO_BAND = 1e-9
UNIT_TOLERANCE = 1e-12
DIRECTION_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class GaleConfiguration:
    """n labeled unit vectors in R^(d+1); points[i] is identified with vertex identification[i]."""
    d: int
    points: np.ndarray
    identification: tuple[int, ...]
    labels: tuple[str, ...]
    exact: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.points.ndim != 2 or self.points.shape[1] != self.d + 1:
            raise DomainError(f"points must be an n x {self.d + 1} array")
        norms = np.linalg.norm(self.points, axis=1)
        if np.any(np.abs(norms - 1.0) > UNIT_TOLERANCE):
            raise DomainError("every configuration point must have unit norm")
        check_bijection(self.identification, len(self.points))

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class HemisphereTrace:
    direction: tuple[float, ...]
    plus: int
    minus: int
    zero: int


@dataclass
class VerificationReport:
    ok: bool
    method: str
    checked: int
    counterexample: dict | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        key = "cells_checked" if self.method == "exact" else "trials"
        return {"ok": self.ok, "method": self.method, key: self.checked,
                "counterexample": self.counterexample, **self.extra}


# ==================== CONSTRUCTION ====================

def moment_vector(i: int, d: int) -> tuple[int, ...]:
    """(-1)^i (1, i, i^2, ..., i^d)."""
    sign = -1 if i % 2 else 1
    return tuple(sign * i ** j for j in range(d + 1))


def build_configuration(n: int, d: int, sigma: Sequence[int] | None = None,
                        labels: Sequence[str] | None = None) -> GaleConfiguration:
    """The moment-curve configuration of n points on S^d, point i identified with sigma(i)."""
    if d < 0:
        raise DomainError(f"d = {d}: the construction exists only for d != -1, i.e. d >= 0")
    if n < 1 or d > n - 1:
        raise DomainError(f"need 0 <= d <= n-1 (got n={n}, d={d})")
    sigma = identity(n) if sigma is None else check_bijection(sigma, n)
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(1, n + 1))
    exact = tuple(moment_vector(i, d) for i in range(1, n + 1))
    raw = np.array(exact, dtype=float)
    points = raw / np.linalg.norm(raw, axis=1, keepdims=True)
    return GaleConfiguration(d, points, sigma, labels, exact)


def configuration_from_points(points: Sequence[Sequence[float]], sigma: Sequence[int] | None = None,
                              labels: Sequence[str] | None = None) -> GaleConfiguration:
    """Normalize arbitrary points; integer inputs keep exact coordinates."""
    raw = np.array(points, dtype=float)
    if raw.ndim != 2 or raw.shape[0] == 0:
        raise DomainError("points must be a nonempty list of equal-length vectors")
    norms = np.linalg.norm(raw, axis=1, keepdims=True)
    if np.any(norms == 0):
        raise DomainError("the zero vector has no direction")
    n = raw.shape[0]
    exact = None
    if all(float(c).is_integer() for row in points for c in row):
        exact = tuple(tuple(int(c) for c in row) for row in points)
    sigma = identity(n) if sigma is None else check_bijection(sigma, n)
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(1, n + 1))
    return GaleConfiguration(raw.shape[1] - 1, raw / norms, sigma, labels, exact)


def corollary_configuration(h: Hypergraph, sigma: Sequence[int] | None = None,
                            mode: str = "alt") -> GaleConfiguration:
    """Configuration on S^d with d = |V| - alt(H,sigma) - 1 (mode alt) or |V| - salt(H,sigma) - 1 (mode salt).

    Verify it with p1 for mode alt, p2 for mode salt.
    """
    if mode not in ("alt", "salt"):
        raise DomainError(f"mode must be 'alt' or 'salt' (got {mode!r})")
    sigma = identity(h.n) if sigma is None else check_bijection(sigma, h.n)
    value = alt_hypergraph(h, sigma) if mode == "alt" else salt_hypergraph(h, sigma)
    if value == h.n:
        raise DomainError(f"{mode}(H, sigma) = |V| = {h.n}, so d = -1 and no configuration exists")
    return build_configuration(h.n, h.n - value - 1, sigma, h.vertices)


def configuration_to_dict(z: GaleConfiguration) -> dict:
    return {"d": z.d,
            "points": [[float(c) for c in p] for p in z.points],
            "identification": [z.labels[v] for v in z.identification]}


# ==================== TRACES ====================

def _pair_from_signs(z: GaleConfiguration, signs: Sequence[int]) -> tuple[int, int, int]:
    plus = minus = zero = 0
    for i, s in enumerate(signs):
        bit = 1 << z.identification[i]
        if s > 0:
            plus |= bit
        elif s < 0:
            minus |= bit
        else:
            zero |= bit
    return plus, minus, zero


def hemisphere_trace(z: GaleConfiguration, x: Sequence[float]) -> HemisphereTrace:
    """Split the vertices by the sign of <x, z_i>, with a zero band of ZERO_BAND."""
    x = np.asarray(x, dtype=float)
    if x.shape != (z.d + 1,):
        raise DomainError(f"direction must have {z.d + 1} coordinates")
    if abs(np.linalg.norm(x) - 1.0) > DIRECTION_TOLERANCE:
        raise DomainError("direction must be a unit vector")
    dots = z.points @ x
    signs = np.where(dots > ZERO_BAND, 1, np.where(dots < -ZERO_BAND, -1, 0))
    plus, minus, zero = _pair_from_signs(z, signs.tolist())
    return HemisphereTrace(tuple(float(c) for c in x), plus, minus, zero)


def _names(z: GaleConfiguration, mask: int) -> list[str]:
    return [z.labels[v] for v in range(len(z.labels)) if mask >> v & 1]


def _counterexample(z: GaleConfiguration, direction: Sequence[float], plus: int, minus: int,
                    zero: int, covector: str | None = None) -> dict:
    out = {"direction": [float(c) for c in direction],
           "plus": _names(z, plus), "minus": _names(z, minus), "zero": _names(z, zero)}
    if covector is not None:
        out["covector"] = covector
    return out


# ==================== EXACT ARITHMETIC ====================

def _det(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def _cross(rows: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """Generalized cross product of dim-1 integer vectors in Z^dim (zero iff dependent)."""
    return tuple((-1) ** j * _det([r[:j] + r[j + 1:] for r in rows]) for j in range(dim))


def _rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(c) for c in r] for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                factor = m[r][c] / m[rank][c]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _signs(points: Sequence[Sequence[int]], x: Sequence[int]) -> tuple[int, ...]:
    return tuple((v > 0) - (v < 0) for v in (_dot(p, x) for p in points))


def _null_direction(points: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """An integer vector orthogonal to every point of a rank-deficient configuration."""
    basis = []
    for p in points:
        if _rank(basis + [list(p)]) > len(basis):
            basis.append(list(p))
    # pad with unit vectors until dim-1 independent rows, then cross
    for j in range(dim):
        if len(basis) == dim - 1:
            break
        unit = [1 if c == j else 0 for c in range(dim)]
        if _rank(basis + [unit]) > len(basis):
            basis.append(unit)
    return _cross(basis, dim)


def check_general_position(z: GaleConfiguration) -> list[tuple[int, ...]]:
    """Every d+1 of the exact points are linearly independent; returns offending index sets."""
    if z.exact is None:
        raise DomainError("configuration has no exact coordinates")
    return [combo for combo in itertools.combinations(range(z.n), z.d + 1)
            if _det([z.exact[i] for i in combo]) == 0]


def enumerate_covectors(exact: Sequence[Sequence[int]]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """All realizable sign vectors (sign<x, p_i>)_i for x != 0, each with an integer witness x."""
    dim = len(exact[0])
    if _rank(exact) < dim:
        # only the projection onto span(points) matters; work in Gram coordinates of a basis
        basis: list[list[int]] = []
        for p in exact:
            if _rank(basis + [list(p)]) > len(basis):
                basis.append(list(p))
        gram = [[_dot(p, b) for b in basis] for p in exact]
        covectors = {cov: tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(dim))
                     for cov, coeffs in enumerate_covectors(gram).items()}
        x = _null_direction(exact, dim)
        covectors[_signs(exact, x)] = x
        return covectors

    cocircuits: dict[tuple[int, ...], tuple[int, ...]] = {}
    for combo in itertools.combinations(range(len(exact)), dim - 1):
        x = _cross([list(exact[i]) for i in combo], dim)
        if not any(x):
            continue
        for w in (x, tuple(-c for c in x)):
            cocircuits.setdefault(_signs(exact, w), w)

    covectors = dict(cocircuits)
    frontier = list(cocircuits)
    while frontier:
        grown = []
        for cov in frontier:
            wx = covectors[cov]
            for coc, wy in cocircuits.items():
                composed = tuple(a if a else b for a, b in zip(cov, coc))
                if composed in covectors:
                    continue
                # M*wx + wy keeps every nonzero sign of wx and takes wy's sign elsewhere
                scale = 1 + max(abs(_dot(p, wy)) for p in exact)
                covectors[composed] = tuple(scale * a + b for a, b in zip(wx, wy))
                grown.append(composed)
        frontier = grown
    return covectors


# ==================== VERIFICATION ====================

def verify_exact(z: GaleConfiguration, prop: SignedIncreasingProperty) -> VerificationReport:
    """Check Z_x in P for every x in S^d by enumerating every face of the arrangement."""
    if z.d > EXACT_MAX_DIM:
        raise CapacityError(f"exact mode handles d <= {EXACT_MAX_DIM} (got d={z.d}); use verify_sampled")
    if z.exact is None:
        raise DomainError("configuration has no exact coordinates; use verify_sampled")
    covectors = enumerate_covectors(z.exact)
    for cov in sorted(covectors):
        plus, minus, zero = _pair_from_signs(z, cov)
        if not prop(plus, minus):
            witness = np.array(covectors[cov], dtype=float)
            direction = witness / np.linalg.norm(witness)
            text = "".join("+" if s > 0 else "-" if s < 0 else "0" for s in cov)
            return VerificationReport(False, "exact", len(covectors),
                                      _counterexample(z, direction, plus, minus, zero, text))
    return VerificationReport(True, "exact", len(covectors))


def verify_sampled(z: GaleConfiguration, prop: SignedIncreasingProperty, trials: int,
                   seed: int = DEFAULT_SEED) -> VerificationReport:
    """Monte-Carlo check on random unit directions; any failure is a genuine counterexample."""
    if trials < 1:
        raise DomainError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    directions = rng.standard_normal((trials, z.d + 1))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    dots = directions @ z.points.T
    # redraw the few directions that land in the zero band
    for _ in range(100):
        bad = np.any(np.abs(dots) <= ZERO_BAND, axis=1)
        if not bad.any():
            break
        fresh = rng.standard_normal((int(bad.sum()), z.d + 1))
        directions[bad] = fresh / np.linalg.norm(fresh, axis=1, keepdims=True)
        dots = directions @ z.points.T
    signs = np.where(dots > ZERO_BAND, 1, np.where(dots < -ZERO_BAND, -1, 0)).astype(np.int8)
    patterns, first = np.unique(signs, axis=0, return_index=True)
    failing = []
    for pattern, row in zip(patterns, first):
        plus, minus, zero = _pair_from_signs(z, pattern.tolist())
        if not prop(plus, minus):
            failing.append((int(row), plus, minus, zero))
    checked = len(directions)
    if failing:
        row, plus, minus, zero = min(failing)
        return VerificationReport(False, "sampled", checked,
                                  _counterexample(z, directions[row], plus, minus, zero),
                                  {"distinct_traces": len(patterns)})
    return VerificationReport(True, "sampled", checked, None, {"distinct_traces": len(patterns)})


def verify(z: GaleConfiguration, prop: SignedIncreasingProperty, method: str = "auto",
           trials: int = 10_000, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Exact when possible (method 'auto' picks exact for d <= EXACT_MAX_DIM)."""
    if method == "auto":
        method = "exact" if z.d <= EXACT_MAX_DIM and z.exact is not None else "sampled"
    if method == "exact":
        return verify_exact(z, prop)
    if method == "sampled":
        return verify_sampled(z, prop, trials, seed)
    raise DomainError(f"unknown verification method {method!r}")


def chamber_count(n: int, d: int) -> int:
    """Open cells of n central hyperplanes in general position in R^(d+1)."""
    return 2 * sum(math.comb(n - 1, j) for j in range(d + 1))
