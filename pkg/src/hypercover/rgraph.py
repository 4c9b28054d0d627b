"""Exact labelled r-uniform hypergraphs.

Vertices are the integers 0..n-1.  Edges are strictly ascending r-tuples,
stored in lexicographic order.  Graphs are immutable after construction;
every derived quantity (degree, density) is an exact integer or rational,
never a float.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, NamedTuple, Optional, Sequence


class HypergraphError(ValueError):
    """Malformed graph data or out-of-contract query arguments."""


class ParseError(HypergraphError):
    """Text-format parse failure; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class RGraph:
    """An r-uniform hypergraph on n labelled vertices."""

    r: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        """Hashed membership structure; O(1) amortised edge queries."""
        return frozenset(self.edges)

    def has_edge(self, edge: Sequence[int]) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex (2-graphs only).

        Python integers are arbitrary precision, so the bitset path has no
        vertex-count cap; it is the generic path.
        """
        if self.r != 2:
            raise HypergraphError("adjacency bitmasks are defined for 2-graphs only")
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def vertex_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def __repr__(self) -> str:  # concise; edge lists can be huge
        return f"RGraph(r={self.r}, n={self.n}, m={len(self.edges)})"


class DegreeProfile(NamedTuple):
    per_vertex: tuple[int, ...]
    min_degree: int
    max_degree: int


class MinDegree(NamedTuple):
    value: int
    witness: tuple[int, ...]


class LinkResult(NamedTuple):
    graph: RGraph
    original_labels: tuple[int, ...]  # original_labels[new_index] = old label


def _normalize_edge(r: int, n: int, edge: Sequence[int]) -> tuple[int, ...]:
    t = tuple(sorted(edge))
    if len(t) != r or len(set(t)) != r:
        raise HypergraphError(f"edge {tuple(edge)} does not have {r} distinct vertices")
    if t[0] < 0 or t[-1] >= n:
        raise HypergraphError(f"edge {tuple(edge)} has a vertex outside 0..{n - 1}")
    return t


def from_edge_list(r: int, n: int, edges: Iterable[Sequence[int]]) -> RGraph:
    """Build an RGraph, sorting each edge and deduplicating."""
    if r < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {r}")
    if n < r:
        raise HypergraphError(f"need at least r={r} vertices, got n={n}")
    seen = {_normalize_edge(r, n, e) for e in edges}
    return RGraph(r, n, tuple(sorted(seen)))


def empty(r: int, n: int) -> RGraph:
    return from_edge_list(r, n, ())


def complete(r: int, n: int) -> RGraph:
    return RGraph(r, n, tuple(itertools.combinations(range(n), r)))


def _check_vertex_set(G: RGraph, S: Sequence[int]) -> tuple[int, ...]:
    t = tuple(sorted(S))
    if len(set(t)) != len(t):
        raise HypergraphError(f"vertex set {tuple(S)} has repeats")
    if t and (t[0] < 0 or t[-1] >= G.n):
        raise HypergraphError(f"vertex set {tuple(S)} outside 0..{G.n - 1}")
    return t


def degree(G: RGraph, S: Sequence[int]) -> int:
    """Number of (r-|S|)-sets completing S to an edge of G."""
    t = _check_vertex_set(G, S)
    if len(t) > G.r:
        raise HypergraphError(f"|S|={len(t)} exceeds uniformity {G.r}")
    if len(t) == 1:
        return G.vertex_degrees[t[0]]
    ts = set(t)
    return sum(1 for e in G.edges if ts.issubset(e))


def degree_profile(G: RGraph) -> DegreeProfile:
    deg = G.vertex_degrees
    return DegreeProfile(deg, min(deg), max(deg))


def min_i_degree(G: RGraph, i: int) -> MinDegree:
    """Minimum degree over all i-sets, with the lexicographically least witness."""
    if not 1 <= i <= G.r - 1:
        raise HypergraphError(f"i must be in 1..{G.r - 1}, got {i}")
    counts: dict[tuple[int, ...], int] = {}
    for e in G.edges:
        for sub in itertools.combinations(e, i):
            counts[sub] = counts.get(sub, 0) + 1
    best: Optional[MinDegree] = None
    for S in itertools.combinations(range(G.n), i):
        d = counts.get(S, 0)
        if best is None or d < best.value:
            best = MinDegree(d, S)
            if d == 0:
                break
    assert best is not None
    return best


def link(G: RGraph, S: Sequence[int]) -> LinkResult:
    """Link graph of S, with vertices re-indexed order-preservingly.

    The returned labels translate new indices back to labels of G, so
    witnesses found in the link can be reported in original terms.
    """
    t = _check_vertex_set(G, S)
    if not 0 < len(t) < G.r:
        raise HypergraphError(f"|S| must be in 1..{G.r - 1}, got {len(t)}")
    ts = set(t)
    labels = tuple(v for v in range(G.n) if v not in ts)
    new_index = {old: new for new, old in enumerate(labels)}
    link_edges = []
    for e in G.edges:
        if ts.issubset(e):
            link_edges.append(tuple(new_index[v] for v in e if v not in ts))
    return LinkResult(
        RGraph(G.r - len(t), G.n - len(t), tuple(sorted(link_edges))), labels
    )


def edge_density(G: RGraph) -> Fraction:
    """|E| / C(n, r), exact."""
    return Fraction(len(G.edges), comb(G.n, G.r))


# ---------------------------------------------------------------------------
# Text format: first non-comment line "r n", then one edge per line as r
# ascending 0-based indices separated by single spaces.  '#' starts a comment
# line.  Writers sort edges lexicographically and end with a newline.
# ---------------------------------------------------------------------------


def to_text(G: RGraph) -> str:
    lines = [f"{G.r} {G.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in G.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> RGraph:
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parts = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(parts) != 2:
                raise ParseError("header must be 'r n'", lineno)
            header = (parts[0], parts[1])
            continue
        if len(parts) != header[0]:
            raise ParseError(
                f"expected {header[0]} vertices per edge, got {len(parts)}", lineno
            )
        if any(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            raise ParseError("edge vertices must be strictly ascending", lineno)
        edges.append(tuple(parts))
    if header is None:
        raise ParseError("missing 'r n' header", 1)
    try:
        return from_edge_list(header[0], header[1], edges)
    except HypergraphError as exc:
        raise ParseError(str(exc), 1) from None


def save(G: RGraph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_text(G))


def load(path) -> RGraph:
    with open(path, "r", encoding="ascii") as fh:
        return from_text(fh.read())
