"""Steiner triple systems: generation, validation, independence data.

Orders t = 3 (mod 6) use the Bose construction over the idempotent
commutative quasigroup x*y = (x+y)(k+1) mod (2k+1); orders t = 1 (mod 6)
use the Skolem construction over a half-idempotent commutative quasigroup
of order 2k.  Orders 7 and 9 ship as canned data (Fano plane from the
difference set {i, i+1, i+3} mod 7, and the affine plane of order 3).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from . import rgraph
from .cover import independence_number
from .rgraph import RGraph, HypergraphError

#: smallest possible independence number over all systems of a given order
MIN_ALPHA = {3: 2, 7: 4, 9: 4, 13: 6, 15: 6, 19: 7}


@dataclass(frozen=True)
class STS:
    order: int
    triples: RGraph
    provenance: str  # BOSE | SKOLEM | CANNED(name) | EXTERNAL(file)
    alpha: Optional[int] = None
    meets_min_alpha: Optional[bool] = None


def verify_sts(H: RGraph) -> tuple[bool, Optional[tuple[int, int]]]:
    """True iff every vertex pair lies in exactly one triple.

    On failure, returns the lexicographically first violating pair.
    """
    if H.r != 3:
        return False, None
    counts: dict[tuple[int, int], int] = {}
    for e in H.edges:
        for p in itertools.combinations(e, 2):
            counts[p] = counts.get(p, 0) + 1
    for p in itertools.combinations(range(H.n), 2):
        if counts.get(p, 0) != 1:
            return False, p
    return True, None


def _canned(name: str) -> RGraph:
    text = resources.files("hypercover.data").joinpath(name).read_text()
    return rgraph.from_text(text)


def _bose(t: int) -> RGraph:
    m = t // 3
    k = (m - 1) // 2

    def mul(x: int, y: int) -> int:
        return ((x + y) * (k + 1)) % m

    def pt(x: int, j: int) -> int:
        return j * m + x

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(m)]
    for x in range(m):
        for y in range(x + 1, m):
            for j in range(3):
                blocks.append((pt(x, j), pt(y, j), pt(mul(x, y), (j + 1) % 3)))
    return rgraph.from_edge_list(3, t, blocks)


def _skolem(t: int) -> RGraph:
    k = (t - 1) // 6
    q = 2 * k
    inf = t - 1

    def mul(x: int, y: int) -> int:
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else k + (s - 1) // 2

    def pt(x: int, j: int) -> int:
        return j * q + x

    blocks = [(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(k)]
    for i in range(k):
        for j in range(3):
            blocks.append((inf, pt(k + i, j), pt(i, (j + 1) % 3)))
    for x in range(q):
        for y in range(x + 1, q):
            for j in range(3):
                blocks.append((pt(x, j), pt(y, j), pt(mul(x, y), (j + 1) % 3)))
    return rgraph.from_edge_list(3, t, blocks)


def sts(t: int) -> STS:
    """A Steiner triple system of order t (t = 1 or 3 mod 6, t >= 3)."""
    if t < 3 or t % 6 not in (1, 3):
        raise HypergraphError(f"no Steiner triple system of order {t}")
    if t == 3:
        return STS(3, rgraph.from_edge_list(3, 3, [(0, 1, 2)]), "CANNED(trivial)")
    if t == 7:
        return STS(7, _canned("fano.txt"), "CANNED(fano)")
    if t == 9:
        return STS(9, _canned("ag23.txt"), "CANNED(ag23)")
    if t % 6 == 3:
        return STS(t, _bose(t), "BOSE")
    return STS(t, _skolem(t), "SKOLEM")


def measure_alpha(system: STS, exact_limit: int = 24) -> STS:
    """Return a copy with the independence number (and minimum flag) filled in."""
    a, _ = independence_number(system.triples, exact_limit=exact_limit)
    meets = MIN_ALPHA[system.order] == a if system.order in MIN_ALPHA else None
    return STS(system.order, system.triples, system.provenance, a, meets)


def load_sts(path, exact_limit: int = 24) -> STS:
    """Load and validate a system from the hypergraph text format.

    The system must pass verify_sts.  Its independence number is measured;
    for orders with known minimum values a flag records whether the loaded
    system attains it (exceeding the minimum is a warning, not an error).
    """
    H = rgraph.load(path)
    ok, pair = verify_sts(H)
    if not ok:
        raise HypergraphError(f"not a Steiner triple system: pair {pair} violates")
    return measure_alpha(STS(H.n, H, f"EXTERNAL({path})"), exact_limit=exact_limit)
