"""The embedding relation ``H -> K`` between graphs and CRGs.

A map ``phi: V(H) -> V(K)`` (not necessarily injective) is an embedding when
every edge of ``H`` lands on a black vertex or a black/gray edge, and every
non-edge lands on a white vertex or a white/gray edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from edl.config import EMBED_MAX_H, CapExceeded, check_k
from edl.crg import BLACK, CRG, GRAY, VBLACK, VWHITE, WHITE
from edl.graphs import Graph


@dataclass(frozen=True)
class EmbedWitness:
    assignment: tuple  # assignment[h] = vertex of K

    def preimages(self, k):
        return [tuple(h for h, a in enumerate(self.assignment) if a == v) for v in range(k)]


def _compat_masks(K: CRG):
    """``masks[a][e]``: K-vertices ``c`` such that two H-vertices with adjacency ``e`` may go to ``a`` and ``c``."""
    k = K.k
    masks = []
    for a in range(k):
        edge_ok, non_ok = 0, 0
        for c in range(k):
            if c == a:
                if K.vcolors[a] == VBLACK:
                    edge_ok |= 1 << c
                else:
                    non_ok |= 1 << c
                continue
            col = K.edge(a, c)
            if col in (BLACK, GRAY):
                edge_ok |= 1 << c
            if col in (WHITE, GRAY):
                non_ok |= 1 << c
        masks.append((non_ok, edge_ok))
    return masks


def check_witness(H: Graph, K: CRG, assignment) -> bool:
    if len(assignment) != H.n:
        return False
    for u in range(H.n):
        for v in range(u + 1, H.n):
            a, c = assignment[u], assignment[v]
            e = H.has_edge(u, v)
            if a == c:
                if K.vcolors[a] != (VBLACK if e else VWHITE):
                    return False
            else:
                col = K.edge(a, c)
                if col != GRAY and col != (BLACK if e else WHITE):
                    return False
    return True


def embeds(H: Graph, K: CRG, max_h: int = EMBED_MAX_H) -> Optional[EmbedWitness]:
    """An embedding of ``H`` into ``K``, or ``None``.

    Backtracking over the vertices of ``H`` in order of decreasing degree,
    with forward checking of every unplaced vertex's admissible targets.
    """
    if H.n > max_h:
        raise CapExceeded(f"graph has {H.n} vertices, embedding bound is {max_h}")
    check_k(K.k)
    masks = _compat_masks(K)
    n = H.n
    order = sorted(range(n), key=lambda v: (-H.degree(v), v))
    assignment = [-1] * n
    full = (1 << K.k) - 1

    def search(t, domains):
        if t == n:
            return True
        h = order[t]
        dom = domains[h]
        while dom:
            low = dom & -dom
            a = low.bit_length() - 1
            dom ^= low
            non_ok, edge_ok = masks[a]
            nxt = list(domains)
            dead = False
            for u in order[t + 1:]:
                nxt[u] &= edge_ok if H.adj[h] >> u & 1 else non_ok
                if not nxt[u]:
                    dead = True
                    break
            if dead:
                continue
            assignment[h] = a
            if search(t + 1, nxt):
                return True
        assignment[h] = -1
        return False

    if not search(0, [full] * n):
        return None
    return EmbedWitness(tuple(assignment))


@dataclass(frozen=True)
class ForbFamily:
    graphs: tuple

    def __post_init__(self):
        if not self.graphs:
            raise ValueError("a forbidden family needs at least one graph")

    @classmethod
    def of(cls, *graphs):
        return cls(tuple(graphs))


def in_family(K: CRG, F: ForbFamily) -> bool:
    """True iff no graph of ``F`` embeds into ``K``."""
    return all(embeds(H, K) is None for H in F.graphs)
