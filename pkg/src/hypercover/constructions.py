"""Deterministic generators for the extremal graph families.

Every generator returns the graph together with a Manifest of claimed
properties; the claims are exact values checkable against measurements by
the metric modules.  Identical parameters and seed always reproduce the
same edge list byte-for-byte.

Where a family calls for an "arbitrary" d-regular bipartite graph, the
realisation is the circulant joining left vertex i to right vertices
i, i+1, ..., i+d-1 (mod m), optionally composed with a seeded permutation
of the right side.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from . import rgraph
from .cover import clique_degree, independence_number
from .formulas import f_n_d, tau_upper
from .rgraph import RGraph, HypergraphError


class ConstructionError(HypergraphError):
    """A generator precondition was violated; message names the constraint."""


@dataclass(frozen=True)
class Manifest:
    construction: str
    params: dict
    parts: tuple[tuple[int, int], ...]  # half-open vertex ranges
    claims: dict

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return f"{v.numerator}/{v.denominator}"
            if isinstance(v, (tuple, list)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            return v

        return {
            "construction": self.construction,
            "params": enc(self.params),
            "parts": [list(p) for p in self.parts],
            "claims": enc(self.claims),
        }


def _bipartite_circulant(
    left: Sequence[int], right: Sequence[int], d: int, seed: Optional[int]
) -> list[tuple[int, int]]:
    m = len(left)
    if len(right) != m:
        raise ConstructionError("circulant needs equal part sizes")
    if not 0 <= d <= m:
        raise ConstructionError(f"regularity d={d} must be in 0..{m}")
    targets = list(right)
    if seed is not None:
        random.Random(seed).shuffle(targets)
    return [(left[i], targets[(i + j) % m]) for i in range(m) for j in range(d)]


# ---------------------------------------------------------------------------
# covering family for the 4-vertex 3-edge motif
# ---------------------------------------------------------------------------


def k4minus_link_graph(n: int, d: int, seed: Optional[int] = None) -> RGraph:
    """The d-regular bipartite 2-graph on n-1 vertices used as the star link."""
    if n < 5 or n % 2 == 0:
        raise ConstructionError(f"n must be odd and at least 5, got {n}")
    m = (n - 1) // 2
    if not 1 <= d <= m:
        raise ConstructionError(f"d must be in 1..{m}, got {d}")
    pairs = _bipartite_circulant(range(m), range(m, 2 * m), d, seed)
    return rgraph.from_edge_list(2, n - 1, pairs)


def k4minus_lower(
    n: int, d: int, seed: Optional[int] = None
) -> tuple[RGraph, Manifest]:
    """Star vertex over a d-regular bipartite link; all other triples of the
    base span at most one link edge.  No copy of the 3-edge motif touches
    the star, the star degree is (n-1)d/2, every other degree is f_n(d).
    """
    G = k4minus_link_graph(n, d, seed)
    m = (n - 1) // 2
    star = n - 1
    adj = G.adjacency_bits
    edges = [(x, y, star) for x, y in G.edges]
    for t in itertools.combinations(range(n - 1), 3):
        induced = (
            (adj[t[0]] >> t[1] & 1) + (adj[t[0]] >> t[2] & 1) + (adj[t[1]] >> t[2] & 1)
        )
        if induced <= 1:
            edges.append(t)
    H = rgraph.from_edge_list(3, n, edges)
    star_deg = m * d
    other = f_n_d(n, d)
    assert other.denominator == 1
    manifest = Manifest(
        construction="k4m-lower",
        params={"n": n, "d": d, "seed": seed},
        parts=((0, m), (m, 2 * m), (star, n)),
        claims={
            "star_vertex": star,
            "star_degree": star_deg,
            "nonstar_degree": int(other),
            "min_degree": min(star_deg, int(other)),
            "uncovered_motif": "k4-",
            "uncovered_contains": [star],
        },
    )
    return H, manifest


# ---------------------------------------------------------------------------
# triangle-degree-regular link graph for the tetrahedron threshold
# ---------------------------------------------------------------------------


def k4_lower_linkgraph(n: int, seed: Optional[int] = None) -> tuple[RGraph, Manifest]:
    """Complete tripartite graph plus an n/27-regular bipartite graph inside
    each part: 19n/27-regular with every triangle-degree 4n^2/27."""
    if n % 54 != 0:
        raise ConstructionError(f"n must be a multiple of 54, got {n}")
    p = n // 3
    h = n // 6
    din = n // 27
    edges: list[tuple[int, int]] = []
    for i in range(3):
        lo = i * p
        for j in range(i + 1, 3):
            lo2 = j * p
            edges.extend((u, v) for u in range(lo, lo + p) for v in range(lo2, lo2 + p))
        inner_seed = None if seed is None else seed * 3 + i
        edges.extend(
            _bipartite_circulant(
                range(lo, lo + h), range(lo + h, lo + p), din, inner_seed
            )
        )
    G = rgraph.from_edge_list(2, n, edges)
    deg = 19 * n // 27
    tdeg = 4 * n * n // 27
    manifest = Manifest(
        construction="k4-link",
        params={"n": n, "seed": seed},
        parts=tuple((i * p, (i + 1) * p) for i in range(3)),
        claims={
            "regular_degree": deg,
            "t_max": tdeg,
            "triangle_degree_regular": True,
            "t_minus_deg": tdeg - deg,
        },
    )
    return G, manifest


# ---------------------------------------------------------------------------
# lifting a link graph to a covering-free star
# ---------------------------------------------------------------------------


def lift_link(G: RGraph) -> tuple[RGraph, Manifest]:
    """Lift an (r-1)-graph to an r-graph on one more vertex.

    The new vertex's link is exactly G; every r-set of the old vertices is
    an edge unless it induces a complete (r-1)-graph in G.  Consequently
    deg(star) = e(G), deg(x) = C(n-1, r-1) - t(x) + deg(x), and no complete
    r-graph on r+1 vertices covers the star.
    """
    r = G.r + 1
    star = G.n
    edge_set = G.edge_set
    edges = [e + (star,) for e in G.edges]
    for s in itertools.combinations(range(G.n), r):
        if not all(sub in edge_set for sub in itertools.combinations(s, r - 1)):
            edges.append(s)
    H = rgraph.from_edge_list(r, G.n + 1, edges)
    degs = G.vertex_degrees
    nonstar = [
        comb(G.n - 1, r - 1) - clique_degree(G, x, r) + degs[x] for x in range(G.n)
    ]
    manifest = Manifest(
        construction="lift",
        params={"r": r, "n": G.n + 1},
        parts=((0, G.n), (star, star + 1)),
        claims={
            "star_vertex": star,
            "star_degree": len(G.edges),
            "min_degree": min([len(G.edges)] + nonstar),
            "uncovered_motif": f"clique{r + 1}",
            "uncovered_contains": [star],
        },
    )
    return H, manifest


def extract_link(H: RGraph, v: int) -> tuple[RGraph, tuple[int, ...], bool]:
    """Link of v plus a flag: does every complete (r-1)-clique of the link
    avoid being an edge of H (equivalently, is v uncovered for the complete
    r-graph on r+1 vertices)?"""
    G, labels = rgraph.link(H, (v,))
    edge_set = G.edge_set
    valid = True
    for s in itertools.combinations(range(G.n), H.r):
        if all(sub in edge_set for sub in itertools.combinations(s, H.r - 1)):
            original = tuple(sorted(labels[i] for i in s))
            if original in H.edge_set:
                valid = False
                break
    return G, labels, valid


# ---------------------------------------------------------------------------
# tight-cycle covering family
# ---------------------------------------------------------------------------


def c5_lower(n: int) -> tuple[RGraph, Manifest]:
    """Two cliques in the star link over an unbalanced bipartition; all
    mixed triples of the base are edges.  The star degree C(n,2) + C(2n,2)
    equals (5/9)C(3n,2) - 2n/3 and is the minimum degree."""
    if n < 2:
        raise ConstructionError(f"n must be at least 2, got {n}")
    a, b, star = n, 2 * n, 3 * n
    edges: list[tuple[int, ...]] = []
    for p in itertools.combinations(range(a), 2):
        edges.append(p + (star,))
    for p in itertools.combinations(range(a, a + b), 2):
        edges.append(p + (star,))
    for t in itertools.combinations(range(3 * n), 3):
        in_a = sum(1 for v in t if v < a)
        if in_a in (1, 2):
            edges.append(t)
    H = rgraph.from_edge_list(3, 3 * n + 1, edges)
    star_deg = comb(n, 2) + comb(2 * n, 2)
    formula = Fraction(5, 9) * comb(3 * n, 2) - Fraction(2 * n, 3)
    assert formula == star_deg
    nonstar_min = (2 * n - 1) * (n + 1) + comb(n, 2)  # attained on the large side
    manifest = Manifest(
        construction="c5-lower",
        params={"n": n},
        parts=((0, a), (a, a + b), (star, star + 1)),
        claims={
            "star_vertex": star,
            "star_degree": star_deg,
            "min_degree": star_deg,
            "nonstar_min_degree": nonstar_min,
            "uncovered_motif": "c5",
            "uncovered_contains": [star],
        },
    )
    return H, manifest


# ---------------------------------------------------------------------------
# bipartition family free of the complete 3-graph on 5 vertices
# ---------------------------------------------------------------------------


def k5_lower(n: int) -> tuple[RGraph, Manifest]:
    """All triples meeting both halves of a balanced bipartition.  Any five
    vertices put three into one half, whose triple is missing, so no vertex
    is covered by a complete 3-graph on 5 vertices."""
    if n < 2:
        raise ConstructionError(f"n must be at least 2, got {n}")
    edges = [
        t
        for t in itertools.combinations(range(2 * n), 3)
        if any(v < n for v in t) and any(v >= n for v in t)
    ]
    H = rgraph.from_edge_list(3, 2 * n, edges)
    deg = comb(2 * n - 1, 2) - comb(n - 1, 2)
    manifest = Manifest(
        construction="k5-lower",
        params={"n": n},
        parts=((0, n), (n, 2 * n)),
        claims={
            "regular_degree": deg,
            "min_degree": deg,
            "uncovered_motif": "k5",
            "uncovered_exact": list(range(2 * n)),
        },
    )
    return H, manifest


# ---------------------------------------------------------------------------
# blow-up of a small 3-graph into a covering-free star construction
# ---------------------------------------------------------------------------


def blowup_sts(H: RGraph, n: int, alpha_limit: int = 24) -> tuple[RGraph, Manifest]:
    """Blow each vertex of H into an n-set; the star link is the complete
    multipartite graph, and a base triple is an edge unless its parts form
    an edge of H.  When every (alpha+1)-set of H spans an edge, the star is
    uncovered for the complete 3-graph on alpha+3 vertices.
    """
    if H.r != 3:
        raise ConstructionError(f"pattern must be 3-uniform, got r={H.r}")
    if n < 1:
        raise ConstructionError(f"blow-up factor must be at least 1, got {n}")
    N = H.n
    star = N * n
    part = lambda v: v // n
    edge_set = H.edge_set
    edges: list[tuple[int, ...]] = []
    for x, y in itertools.combinations(range(star), 2):
        if part(x) != part(y):
            edges.append((x, y, star))
    for t in itertools.combinations(range(star), 3):
        ps = (part(t[0]), part(t[1]), part(t[2]))
        if len(set(ps)) == 3 and ps in edge_set:
            continue
        edges.append(t)
    G = rgraph.from_edge_list(3, star + 1, edges)
    degs = H.vertex_degrees
    star_deg = comb(N * n, 2) - N * comb(n, 2)
    part_deg = [
        n * (N - 1) + comb(N * n - 1, 2) - degs[i] * n * n for i in range(N)
    ]
    claims = {
        "star_vertex": star,
        "star_degree": star_deg,
        "per_part_degree": part_deg,
        "min_degree": min([star_deg] + part_deg),
    }
    if N <= alpha_limit:
        alpha, _ = independence_number(H)
        claims["pattern_alpha"] = alpha
        claims["uncovered_motif"] = f"k{alpha + 2}"
        claims["uncovered_contains"] = [star]
    manifest = Manifest(
        construction="sts-blowup",
        params={"N": N, "n": n},
        parts=tuple((i * n, (i + 1) * n) for i in range(N)) + ((star, star + 1),),
        claims=claims,
    )
    return G, manifest


# ---------------------------------------------------------------------------
# triangle-degree families at a prescribed edge density
# ---------------------------------------------------------------------------


def _check_rho(rho: Fraction, lo: Fraction, hi: Fraction) -> None:
    if not lo <= rho <= hi:
        raise ConstructionError(f"rho must be in [{lo}, {hi}], got {rho}")


def tau_lower_interval(
    n: int, rho, r: int, seed: Optional[int] = None
) -> tuple[RGraph, Manifest]:
    """Balanced complete r-partite graph plus a d-regular bipartite graph
    inside each part, d = floor((rho - (r-1)/r) n); floor(rho n)-regular and
    triangle-degree regular with exactly

        t(x) = (r-1)(r-2)/2 (n/r)^2 + (3/2) ((r-1)/r) n d.
    """
    rho = Fraction(rho)
    if r < 2:
        raise ConstructionError(f"r must be at least 2, got {r}")
    if n % (2 * r) != 0:
        raise ConstructionError(f"n must be divisible by 2r={2 * r}, got {n}")
    _check_rho(
        rho,
        Fraction(r - 1, r),
        Fraction(r, r + 1) - Fraction(1, 3 * r * (r + 1)),
    )
    d = int((rho - Fraction(r - 1, r)) * n)  # floor: value is nonnegative
    p, h = n // r, n // (2 * r)
    if d > h:
        raise ConstructionError(f"d={d} exceeds the half-part size {h}")
    edges: list[tuple[int, int]] = []
    for i in range(r):
        lo = i * p
        for j in range(i + 1, r):
            lo2 = j * p
            edges.extend((u, v) for u in range(lo, lo + p) for v in range(lo2, lo2 + p))
        inner_seed = None if seed is None else seed * r + i
        edges.extend(
            _bipartite_circulant(range(lo, lo + h), range(lo + h, lo + p), d, inner_seed)
        )
    G = rgraph.from_edge_list(2, n, edges)
    tmax_exact = (r - 1) * (r - 2) * p * p // 2 + 3 * (r - 1) * n * d // (2 * r)
    branch = tau_upper(rho) * n * n / 2
    manifest = Manifest(
        construction="tau-lower",
        params={"n": n, "rho": rho, "r": r, "d": d, "seed": seed},
        parts=tuple((i * p, (i + 1) * p) for i in range(r)),
        claims={
            "regular_degree": int(rho * n),  # floor
            "t_max": tmax_exact,
            "triangle_degree_regular": True,
            "t_max_branch_value": branch,
            "t_max_slack_bound": 3 * n,
        },
    )
    return G, manifest


def _ceil(x: Fraction) -> int:
    return -int((-x) // 1)


def default_phi(r: int) -> tuple[int, ...]:
    """Cyclic shift on r+1 part indices; the simplest fixed-point-free map."""
    return tuple((i + 1) % (r + 1) for i in range(r + 1))


def tau_upper_interval(
    n: int, rho, r: int, phi: Optional[Sequence[int]] = None, seed: Optional[int] = None
) -> tuple[RGraph, Manifest]:
    """Balanced complete (r+1)-partite graph with each block between the
    first half of part i and the second half of part phi(i) thinned to a
    d-regular bipartite graph, d = ceil((rho - r/(r+1) + 1/(2(r+1))) n);
    ceil(rho n)-regular and triangle-degree regular with exactly

        t(x) = r(r-1)/2 (n/(r+1))^2 - (3/2) ((r-1)/(r+1)) n (h - d).
    """
    rho = Fraction(rho)
    if r < 2:
        raise ConstructionError(f"r must be at least 2, got {r}")
    if n % (2 * (r + 1)) != 0:
        raise ConstructionError(f"n must be divisible by 2(r+1)={2 * (r + 1)}, got {n}")
    _check_rho(
        rho,
        Fraction(r, r + 1) - Fraction(1, 3 * r * (r + 1)),
        Fraction(r, r + 1),
    )
    if phi is None:
        phi = default_phi(r)
    phi = tuple(phi)
    if sorted(phi) != list(range(r + 1)) or any(phi[i] == i for i in range(r + 1)):
        raise ConstructionError(f"phi must be a fixed-point-free permutation, got {phi}")
    d = _ceil((rho - Fraction(r, r + 1) + Fraction(1, 2 * (r + 1))) * n)
    p, h = n // (r + 1), n // (2 * (r + 1))
    if not 0 <= d <= h:
        raise ConstructionError(f"d={d} outside 0..{h}")
    edges: set[tuple[int, int]] = set()
    for i in range(r + 1):
        lo = i * p
        for j in range(i + 1, r + 1):
            lo2 = j * p
            edges.update(
                (u, v) for u in range(lo, lo + p) for v in range(lo2, lo2 + p)
            )
    for i in range(r + 1):
        j = phi[i]
        left = [i * p + x for x in range(h)]
        right = [j * p + h + x for x in range(h)]
        for u in left:
            for v in right:
                edges.discard((min(u, v), max(u, v)))
        inner_seed = None if seed is None else seed * (r + 1) + i
        edges.update(
            (min(u, v), max(u, v))
            for u, v in _bipartite_circulant(left, right, d, inner_seed)
        )
    G = rgraph.from_edge_list(2, n, edges)
    lost = h - d
    tmax_exact = r * (r - 1) * p * p // 2 - 3 * (r - 1) * n * lost // (2 * (r + 1))
    branch = tau_upper(rho) * n * n / 2
    manifest = Manifest(
        construction="tau-upper",
        params={"n": n, "rho": rho, "r": r, "phi": list(phi), "d": d, "seed": seed},
        parts=tuple((i * p, (i + 1) * p) for i in range(r + 1)),
        claims={
            "regular_degree": _ceil(rho * n),
            "t_max": tmax_exact,
            "triangle_degree_regular": True,
            "t_max_branch_value": branch,
            "t_max_slack_bound": 3 * n,
        },
    )
    return G, manifest


# ---------------------------------------------------------------------------
# coordinate graphs with small book number
# ---------------------------------------------------------------------------


def efg_graph(factors: Sequence[int], t: int) -> tuple[RGraph, Manifest]:
    """Vertices are coordinate vectors; adjacency means differing in every
    one of the first k coordinates.  prod((r_i-1)/r_i) n - regular with book
    number prod((r_i-2)/r_i) n."""
    factors = tuple(int(r) for r in factors)
    if not factors or any(r < 3 for r in factors):
        raise ConstructionError(f"factors must all be at least 3, got {factors}")
    for prev, cur in zip(factors, factors[1:]):
        if prev > cur:
            raise ConstructionError(f"factors must be ascending, got {factors}")
        if (prev - 1) ** 2 >= cur:
            raise ConstructionError(
                f"need ({prev}-1)^2 < {cur} for consecutive factors"
            )
    if t < 1:
        raise ConstructionError(f"t must be at least 1, got {t}")
    coords = list(itertools.product(*(range(r) for r in factors), range(t)))
    n = len(coords)
    k = len(factors)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if all(coords[i][c] != coords[j][c] for c in range(k))
    ]
    G = rgraph.from_edge_list(2, n, edges)
    deg = t
    bk = t
    for r in factors:
        deg *= r - 1
        bk *= r - 2
    manifest = Manifest(
        construction="efg",
        params={"factors": list(factors), "t": t},
        parts=((0, n),),
        claims={"regular_degree": deg, "book_number": bk},
    )
    return G, manifest
