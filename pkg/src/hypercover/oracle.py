"""Exhaustive search over all small graphs for exact extremal values.

Enumeration contract: the C(n, r) possible edges are ranked in lexicographic
order and edge subsets are identified with integer bitmasks (bit i = edge of
rank i).  Scans visit masks in ascending order, so the reported witness is
the smallest mask attaining the optimum; results, including witnesses, are
therefore independent of the worker count.  Work is partitioned into
fixed-size mask ranges merged by (better value, then smaller witness), an
order-independent reduction.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional, Sequence

import numpy as np

from . import rgraph
from .cover import Motif, book_number, covers, t_max
from .rgraph import RGraph, min_i_degree

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)

#: full scans without a budget are allowed up to this many candidate edges
MAX_SCAN_BITS = 22
#: absolute ceiling for budgeted subset scans
MAX_SUBSET_BITS = 28

_CHUNK = 1 << 18


class OracleLimitError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


def _popcount(a: np.ndarray) -> np.ndarray:
    r = _POP16[a & 0xFFFF] + _POP16[(a >> 16) & 0xFFFF]
    if a.itemsize == 8:
        r = r + _POP16[(a >> 32) & 0xFFFF] + _POP16[(a >> 48) & 0xFFFF]
    return r


def _resolve_workers(workers: int) -> int:
    return (os.cpu_count() or 1) if workers == 0 else max(1, workers)


def _run_chunks(fn: Callable, chunks: list, workers: int) -> list:
    workers = _resolve_workers(workers)
    if workers == 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))


def _ranges(total: int, chunk: int = _CHUNK) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


@dataclass(frozen=True)
class SearchResult:
    objective: str
    params: dict
    value: int
    witness: RGraph
    graphs_scanned: int
    wall_time: float
    witness_verified: bool

    def to_json(self) -> dict:
        return {
            "result": {
                "objective": self.objective,
                "params": self.params,
                "value": self.value,
                "witness_r": self.witness.r,
                "witness_n": self.witness.n,
                "witness_edges": [list(e) for e in self.witness.edges],
                "graphs_scanned": self.graphs_scanned,
                "witness_verified": self.witness_verified,
            },
            "run": {"wall_time_s": self.wall_time},
        }


def _mask_to_graph(mask: int, r: int, n: int, slots: Sequence[tuple[int, ...]]) -> RGraph:
    return rgraph.from_edge_list(
        r, n, [slots[i] for i in range(len(slots)) if mask >> i & 1]
    )


# ---------------------------------------------------------------------------
# maximum minimum-degree among graphs leaving vertex 0 uncovered
# ---------------------------------------------------------------------------


def _dense_cover_spec(F: Motif) -> Optional[tuple[int, int]]:
    """(motif order, edge threshold) when 'some v(F)-set spanning >= threshold
    edges' is equivalent to containing a copy of F.

    Holds for complete patterns and for the 4-vertex 3-edge pattern, where
    any 3 of the 4 triples form a copy.
    """
    P = F.pattern
    full = comb(P.n, P.r)
    if len(P.edges) == full:
        return P.n, full
    if (P.n, P.r, len(P.edges)) == (4, 3, 3):
        return 4, 3
    return None


def max_delta1_no_cover(
    n: int,
    F: Motif,
    workers: int = 1,
    budget: Optional[float] = None,
) -> SearchResult:
    """Exact max of delta_1 over n-vertex graphs where vertex 0 is uncovered.

    Fixing vertex 0 as the uncovered candidate is valid by relabelling.
    Beyond the full-scan limit a pruned depth-first search runs against the
    given time budget and raises BudgetExceededError when it runs out.
    """
    r = F.pattern.r
    if n < r:
        raise OracleLimitError(f"need n >= {r}, got {n}")
    start = time.perf_counter()
    slots = list(itertools.combinations(range(n), r))
    if len(slots) > MAX_SCAN_BITS:
        if budget is None:
            raise OracleLimitError(
                f"{len(slots)} candidate edges exceeds the full-scan limit "
                f"{MAX_SCAN_BITS}; pass a time budget for the best-effort search"
            )
        value, mask, scanned = _pruned_max_delta1(n, F, slots, start, budget)
    else:
        value, mask, scanned = _scan_max_delta1(n, F, slots, workers)
    witness = _mask_to_graph(mask, r, n, slots)
    ok = min_i_degree(witness, 1).value == value and not covers(witness, F, 0)
    return SearchResult(
        objective="max-delta1",
        params={"n": n, "motif": F.name},
        value=value,
        witness=witness,
        graphs_scanned=scanned,
        wall_time=time.perf_counter() - start,
        witness_verified=ok,
    )


def _scan_max_delta1(
    n: int, F: Motif, slots: Sequence[tuple[int, ...]], workers: int
) -> tuple[int, int, int]:
    M = len(slots)
    total = 1 << M
    vmask = np.zeros(n, dtype=np.int64)
    for i, e in enumerate(slots):
        for v in e:
            vmask[v] |= 1 << i
    dense = _dense_cover_spec(F)
    quads: list[int] = []
    threshold = 0
    if dense is not None:
        size, threshold = dense
        rank = {e: i for i, e in enumerate(slots)}
        for q in itertools.combinations(range(n), size):
            if 0 in q:
                bits = 0
                for e in itertools.combinations(q, F.pattern.r):
                    bits |= 1 << rank[e]
                quads.append(bits)

    def scan_chunk(bounds: tuple[int, int]) -> tuple[int, int]:
        lo, hi = bounds
        masks = np.arange(lo, hi, dtype=np.int64)
        delta1 = _popcount(masks & vmask[0])
        for v in range(1, n):
            np.minimum(delta1, _popcount(masks & vmask[v]), out=delta1)
        if dense is not None:
            eligible = np.ones(len(masks), dtype=bool)
            for qb in quads:
                np.logical_and(eligible, _popcount(masks & qb) < threshold, out=eligible)
            if not eligible.any():
                return -1, -1
            dsub = np.where(eligible, delta1, -1)
            best = int(dsub.max())
            return best, lo + int(np.argmax(dsub == best))
        # generic motif: descending-value sweep with embedding checks; ties
        # are visited in ascending mask order (stable sort)
        best_here, mask_here = -1, -1
        order = np.argsort(-delta1, kind="stable")
        for idx in order:
            d = int(delta1[idx])
            if d <= best_here:
                break
            g = _mask_to_graph(lo + int(idx), F.pattern.r, n, slots)
            if not covers(g, F, 0):
                best_here, mask_here = d, lo + int(idx)
        return best_here, mask_here

    best, mask = -1, -1
    for value, m in _run_chunks(scan_chunk, _ranges(total), workers):
        if value < 0:
            continue
        if value > best or (value == best and m < mask):
            best, mask = value, m
    if mask < 0:
        raise OracleLimitError("no graph leaves vertex 0 uncovered")
    return best, mask, total


def _pruned_max_delta1(
    n: int,
    F: Motif,
    slots: Sequence[tuple[int, ...]],
    start: float,
    budget: float,
) -> tuple[int, int, int]:
    """Two-phase best-effort search: an include-first DFS finds the optimum
    (dense graphs early give strong incumbents), then an exclude-first DFS
    finds the smallest witness mask attaining it."""
    M = len(slots)
    r = F.pattern.r
    deadline = start + budget
    contains0 = [0 in e for e in slots]
    ticks = [0]
    leaves = [0]

    def check_budget() -> None:
        ticks[0] += 1
        if ticks[0] % 2048 == 0 and time.perf_counter() > deadline:
            raise BudgetExceededError(f"budget of {budget}s exhausted")

    deg = [0] * n
    rem = [sum(1 for e in slots if v in e) for v in range(n)]
    chosen: list[int] = []

    def bound() -> int:
        return min(deg[v] + rem[v] for v in range(n))

    def step(i: int, take: bool) -> None:
        for v in slots[i]:
            rem[v] -= 1
            if take:
                deg[v] += 1

    def unstep(i: int, take: bool) -> None:
        for v in slots[i]:
            rem[v] += 1
            if take:
                deg[v] -= 1

    def covered_now(i: int) -> bool:
        if not contains0[i]:
            return False
        g = rgraph.from_edge_list(r, n, [slots[j] for j in chosen])
        return covers(g, F, 0)

    best = [-1]

    def dfs_value(i: int, cutoff: int) -> None:
        check_budget()
        if bound() <= best[0]:
            return
        if i == M:
            leaves[0] += 1
            if min(deg) > best[0]:
                best[0] = min(deg)
            return
        step(i, True)
        chosen.append(i)
        if not covered_now(i):
            dfs_value(i + 1, cutoff)
        chosen.pop()
        unstep(i, True)
        step(i, False)
        dfs_value(i + 1, cutoff)
        unstep(i, False)

    dfs_value(0, -1)
    if best[0] < 0:
        raise OracleLimitError("no graph leaves vertex 0 uncovered")
    target = best[0]

    found = [-1]

    def dfs_witness(i: int, mask: int) -> bool:
        check_budget()
        if bound() < target:
            return False
        if i == M:
            leaves[0] += 1
            if min(deg) == target:
                found[0] = mask
                return True
            return False
        step(i, False)
        done = dfs_witness(i + 1, mask)
        unstep(i, False)
        if done:
            return True
        step(i, True)
        chosen.append(i)
        done = not covered_now(i) and dfs_witness(i + 1, mask | (1 << i))
        chosen.pop()
        unstep(i, True)
        return done

    dfs_witness(0, 0)
    return target, found[0], leaves[0]


# ---------------------------------------------------------------------------
# minimum of max triangle-degree / book number over (n, m) graphs
# ---------------------------------------------------------------------------


def _triangle_stats(n: int, combos: np.ndarray, want: str) -> np.ndarray:
    """Per-graph maximum triangle-degree ('tmax') or book number ('book')."""
    pairs = list(itertools.combinations(range(n), 2))
    rank = {p: i for i, p in enumerate(pairs)}
    if want == "tmax":
        acc = np.zeros((n, len(combos)), dtype=np.int64)
    else:
        acc = np.zeros((len(pairs), len(combos)), dtype=np.int64)
    for tri in itertools.combinations(range(n), 3):
        bits = 0
        for p in itertools.combinations(tri, 2):
            bits |= 1 << rank[p]
        present = (combos & bits) == bits
        if want == "tmax":
            for v in tri:
                acc[v] += present
        else:
            for p in itertools.combinations(tri, 2):
                acc[rank[p]] += present
    if want == "tmax":
        return acc.max(axis=0)
    for i in range(len(pairs)):
        acc[i][(combos >> i & 1) == 0] = -1  # only edges of the graph count
    return np.maximum(acc.max(axis=0), 0)  # edgeless graphs report 0


def _min_scan(
    n: int, m: int, want: str, workers: int, budget: Optional[float]
) -> tuple[int, int, int]:
    M = comb(n, 2)
    if m > M:
        raise OracleLimitError(f"m={m} exceeds C({n},2)={M}")
    if M > MAX_SUBSET_BITS:
        raise OracleLimitError(f"{M} candidate edges exceeds the ceiling {MAX_SUBSET_BITS}")
    if M > MAX_SCAN_BITS and budget is None:
        raise OracleLimitError(
            f"{M} candidate edges exceeds the full-scan limit {MAX_SCAN_BITS}; "
            "pass a time budget for the chunked scan"
        )
    start = time.perf_counter()
    scanned = 0
    value, mask = None, None

    def scan_chunk(bounds: tuple[int, int]):
        lo, hi = bounds
        masks = np.arange(lo, hi, dtype=np.int64)
        combos = masks[_popcount(masks) == m]
        if len(combos) == 0:
            return None
        vals = _triangle_stats(n, combos, want)
        i = int(np.argmin(vals))
        return int(vals[i]), int(combos[i]), len(combos)

    chunk_list = _ranges(1 << M, 1 << 21)
    for group_start in range(0, len(chunk_list), 8):
        if budget is not None and time.perf_counter() - start > budget:
            raise BudgetExceededError(f"budget of {budget}s exhausted")
        group = chunk_list[group_start : group_start + 8]
        for out in _run_chunks(scan_chunk, group, workers):
            if out is None:
                continue
            v, mk, cnt = out
            scanned += cnt
            if value is None or v < value or (v == value and mk < mask):
                value, mask = v, mk
    return value, mask, scanned


def min_tmax(
    n: int, m: int, workers: int = 1, budget: Optional[float] = None
) -> SearchResult:
    """Exact minimum of the maximum triangle-degree over n-vertex m-edge graphs."""
    start = time.perf_counter()
    value, mask, scanned = _min_scan(n, m, "tmax", workers, budget)
    slots = list(itertools.combinations(range(n), 2))
    witness = _mask_to_graph(mask, 2, n, slots)
    ok = t_max(witness)[0] == value and len(witness.edges) == m
    return SearchResult(
        "min-tmax", {"n": n, "m": m}, value, witness, scanned,
        time.perf_counter() - start, ok,
    )


def min_book(
    n: int, m: int, workers: int = 1, budget: Optional[float] = None
) -> SearchResult:
    """Exact minimum of the book number over n-vertex m-edge graphs."""
    start = time.perf_counter()
    value, mask, scanned = _min_scan(n, m, "book", workers, budget)
    slots = list(itertools.combinations(range(n), 2))
    witness = _mask_to_graph(mask, 2, n, slots)
    ok = book_number(witness)[0] == value and len(witness.edges) == m
    return SearchResult(
        "min-book", {"n": n, "m": m}, value, witness, scanned,
        time.perf_counter() - start, ok,
    )
