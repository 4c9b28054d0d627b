"""Motif embedding, covering reports, and triangle/book/independence metrics.

A copy of a motif F in a host H is an injective vertex map sending edges of
F's pattern to edges of H (subgraph, not induced).  A vertex is covered when
some copy contains it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .rgraph import RGraph, HypergraphError, complete, from_edge_list


@dataclass(frozen=True)
class Motif:
    """A named small pattern; `name` is its canonical CLI spelling."""

    name: str
    pattern: RGraph


def k4() -> Motif:
    return Motif("k4", complete(3, 4))


def k4_minus() -> Motif:
    # the unique 3-graph with 4 vertices and 3 edges
    return Motif("k4-", from_edge_list(3, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]))


def c5() -> Motif:
    # tight 5-cycle: every 3 consecutive vertices under the cyclic order
    return Motif(
        "c5",
        from_edge_list(3, 5, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 0), (4, 0, 1)]),
    )


def k_t(t: int) -> Motif:
    if t < 4:
        raise HypergraphError(f"complete 3-graph motif needs t >= 4, got {t}")
    return Motif(f"k{t}", complete(3, t))


def clique(r: int) -> Motif:
    """K_r on r vertices at uniformity r-1 (the clique whose lift matters)."""
    if r < 3:
        raise HypergraphError(f"clique motif needs r >= 3, got {r}")
    return Motif(f"clique{r}", complete(r - 1, r))


_MOTIF_RE = re.compile(r"^(k(?P<t>\d+)-?|c5|clique(?P<r>\d+))$")


def parse_motif(name: str) -> Motif:
    """Resolve a canonical CLI name: k4, k4-, c5, k{t}, clique{r}."""
    m = _MOTIF_RE.match(name.strip().lower())
    if not m:
        raise HypergraphError(f"unknown motif name {name!r}")
    if name == "k4-":
        return k4_minus()
    if name == "c5":
        return c5()
    if m.group("t") is not None:
        return k_t(int(m.group("t")))
    return clique(int(m.group("r")))


@dataclass(frozen=True)
class CoverReport:
    motif: Motif
    uncovered: tuple[int, ...]
    witness_per_vertex: dict[int, tuple[int, ...]]


def _pattern_constraints(F: Motif) -> list[list[tuple[int, ...]]]:
    """For each pattern vertex k: pattern edges fully assigned once 0..k are."""
    byindex: list[list[tuple[int, ...]]] = [[] for _ in range(F.pattern.n)]
    for e in F.pattern.edges:
        byindex[max(e)].append(e)
    return byindex


def cover_witness(H: RGraph, F: Motif, v: int) -> Optional[tuple[int, ...]]:
    """First embedding (in search order) whose image contains v, else None.

    Pattern vertices are assigned in index order, hosts tried ascending, the
    anchored pattern position for v tried ascending; the returned witness is
    therefore the minimum over that fixed search order.
    """
    P = F.pattern
    if H.r != P.r:
        raise HypergraphError(f"uniformity mismatch: host {H.r}, motif {P.r}")
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} outside 0..{H.n - 1}")
    if P.n > H.n:
        return None
    constraints = _pattern_constraints(F)
    pdeg = P.vertex_degrees
    hdeg = H.vertex_degrees
    edge_set = H.edge_set
    assignment: list[int] = []
    used = [False] * H.n

    def consistent(k: int) -> bool:
        for e in constraints[k]:
            if tuple(sorted(assignment[i] for i in e)) not in edge_set:
                return False
        return True

    def extend(k: int, anchor_pos: int) -> Optional[tuple[int, ...]]:
        if k == P.n:
            return tuple(assignment)
        if k == anchor_pos:
            candidates: Sequence[int] = (v,)
        else:
            candidates = range(H.n)
        for h in candidates:
            if used[h] or (h == v and k != anchor_pos):
                continue
            if hdeg[h] < pdeg[k]:
                continue
            used[h] = True
            assignment.append(h)
            if consistent(k):
                out = extend(k + 1, anchor_pos)
                if out is not None:
                    return out
            assignment.pop()
            used[h] = False
        return None

    for pos in range(P.n):
        out = extend(0, pos)
        if out is not None:
            return out
    return None


def covers(H: RGraph, F: Motif, v: int) -> bool:
    return cover_witness(H, F, v) is not None


def uncovered_vertices(H: RGraph, F: Motif) -> CoverReport:
    uncovered = []
    witnesses: dict[int, tuple[int, ...]] = {}
    for v in range(H.n):
        w = cover_witness(H, F, v)
        if w is None:
            uncovered.append(v)
        else:
            witnesses[v] = w
    return CoverReport(F, tuple(uncovered), witnesses)


def clique_degree(G: RGraph, x: int, target: int) -> int:
    """Count target-sets through x whose (target-1)-subsets are all edges.

    For 2-graphs with target 3 this is the triangle-degree of x.
    """
    if G.r != target - 1:
        raise HypergraphError(
            f"clique degree with target {target} needs uniformity {target - 1}, got {G.r}"
        )
    if not 0 <= x < G.n:
        raise HypergraphError(f"vertex {x} outside 0..{G.n - 1}")
    if G.r == 2 and target == 3:
        adj = G.adjacency_bits
        row = adj[x]
        total = 0
        y = row
        while y:
            lsb = y & -y
            total += (row & adj[lsb.bit_length() - 1]).bit_count()
            y ^= lsb
        return total // 2
    edge_set = G.edge_set
    count = 0
    for rest in itertools.combinations((u for u in range(G.n) if u != x), target - 1):
        s = tuple(sorted(rest + (x,)))
        if all(sub in edge_set for sub in itertools.combinations(s, target - 1)):
            count += 1
    return count


def triangle_count(G: RGraph) -> int:
    if G.r != 2:
        raise HypergraphError("triangle count is defined for 2-graphs")
    return sum(clique_degree(G, x, 3) for x in range(G.n)) // 3


def t_max(G: RGraph) -> tuple[int, int]:
    """Maximum triangle-degree and its lexicographically least argmax."""
    if G.r != 2:
        raise HypergraphError("t_max is defined for 2-graphs")
    if not G.edges:
        return 0, 0
    best, arg = -1, 0
    for x in range(G.n):
        t = clique_degree(G, x, 3)
        if t > best:
            best, arg = t, x
    return best, arg


def book_size(G: RGraph, edge: Sequence[int]) -> int:
    """Common neighbourhood size of an edge (number of triangles on it)."""
    if G.r != 2:
        raise HypergraphError("book size is defined for 2-graphs")
    e = tuple(sorted(edge))
    if e not in G.edge_set:
        raise HypergraphError(f"{tuple(edge)} is not an edge")
    adj = G.adjacency_bits
    return (adj[e[0]] & adj[e[1]]).bit_count()


def book_number(G: RGraph) -> tuple[int, Optional[tuple[int, int]]]:
    """Max book size over edges; (0, None) for an edgeless graph."""
    if G.r != 2:
        raise HypergraphError("book number is defined for 2-graphs")
    adj = G.adjacency_bits
    best, arg = 0, None
    for e in G.edges:
        b = (adj[e[0]] & adj[e[1]]).bit_count()
        if arg is None or b > best:
            best, arg = b, (e[0], e[1])
    return best, arg


DEFAULT_EXACT_LIMIT = 24


def bipartite_edit_distance(
    G: RGraph, exact_limit: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Fewest edges inside parts over all bipartitions, exactly.

    Branch and bound over side assignments in vertex order (vertex 0 pinned
    to the first side); the reported bipartition is the first optimum in
    that order, hence canonical.
    """
    if G.r != 2:
        raise HypergraphError("bipartite edit distance is defined for 2-graphs")
    if G.n > exact_limit:
        raise HypergraphError(
            f"n={G.n} exceeds the exact enumeration limit {exact_limit}"
        )
    if G.n == 0:
        return 0, ((), ())
    adj = G.adjacency_bits
    best = len(G.edges) + 1
    best_sides: Optional[tuple[int, int]] = None
    n = G.n

    def walk(k: int, side_a: int, side_b: int, cost: int) -> None:
        nonlocal best, best_sides
        if cost >= best:
            return
        if k == n:
            best, best_sides = cost, (side_a, side_b)
            return
        bit = 1 << k
        walk(k + 1, side_a | bit, side_b, cost + (adj[k] & side_a).bit_count())
        walk(k + 1, side_a, side_b | bit, cost + (adj[k] & side_b).bit_count())

    walk(1, 1, 0, 0)
    assert best_sides is not None
    a, b = best_sides
    part_a = tuple(v for v in range(n) if a >> v & 1)
    part_b = tuple(v for v in range(n) if b >> v & 1)
    return best, (part_a, part_b)


def bipartite_edit_distance_upper(G: RGraph, seed: int = 0) -> int:
    """Greedy + single-flip local search; an upper bound only."""
    import random

    if G.r != 2:
        raise HypergraphError("bipartite edit distance is defined for 2-graphs")
    rng = random.Random(seed)
    adj = G.adjacency_bits
    side = [rng.randrange(2) for _ in range(G.n)]

    def cost() -> int:
        return sum(1 for u, v in G.edges if side[u] == side[v])

    improved = True
    while improved:
        improved = False
        for v in range(G.n):
            same = sum(1 for u, w in G.edges if v in (u, w) and side[u] == side[w])
            side[v] ^= 1
            new_same = sum(1 for u, w in G.edges if v in (u, w) and side[u] == side[w])
            if new_same < same:
                improved = True
            else:
                side[v] ^= 1
    return cost()


def independence_number(
    H: RGraph, exact_limit: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, tuple[int, ...]]:
    """Largest vertex set spanning no edge, with lexicographically least witness.

    Include-first DFS in vertex order visits complete sets in ascending
    tuple order, so tracking strict improvements yields the least maximum set.
    """
    if H.n > exact_limit:
        raise HypergraphError(
            f"n={H.n} exceeds the exact enumeration limit {exact_limit}"
        )
    edges_at: list[list[tuple[int, ...]]] = [[] for _ in range(H.n)]
    for e in H.edges:
        edges_at[max(e)].append(e)
    best = -1
    best_set: tuple[int, ...] = ()
    chosen: list[int] = []
    in_set = [False] * H.n

    def dfs(v: int) -> None:
        nonlocal best, best_set
        if len(chosen) + (H.n - v) <= best:
            return
        if v == H.n:
            if len(chosen) > best:
                best, best_set = len(chosen), tuple(chosen)
            return
        blocked = any(
            all(in_set[u] for u in e if u != v) for e in edges_at[v]
        )
        if not blocked:
            chosen.append(v)
            in_set[v] = True
            dfs(v + 1)
            chosen.pop()
            in_set[v] = False
        dfs(v + 1)

    dfs(0)
    return best, best_set
