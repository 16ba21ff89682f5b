"""Small simple graphs as bitsets, their exact invariants, and named families.

Vertices are ``0..n-1``; ``adj[v]`` is the bitmask of neighbours of ``v``.
Every invariant is computed exactly by exhaustive search, so the routines
refuse graphs larger than ``bound`` (default :data:`edl.config.GRAPH_MAX_N`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from edl.config import GRAPH_MAX_N, CapExceeded


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table has the wrong length")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    @property
    def vertices(self):
        return range(self.n)

    @property
    def full(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def num_edges(self):
        return sum(bin(nb).count("1") for nb in self.adj) // 2

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def degrees(self):
        return tuple(self.degree(v) for v in range(self.n))

    def neighbours(self, v):
        return list(_bits(self.adj[v]))

    def is_clique(self, mask):
        return all(mask & ~self.adj[v] & ~(1 << v) == 0 for v in _bits(mask))

    def is_independent(self, mask):
        return all(self.adj[v] & mask == 0 for v in _bits(mask))

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def to_text(self):
        return f"{self.n}:" + ",".join(f"{u}-{v}" for u, v in self.edges())

    def __repr__(self):
        return f"Graph({self.to_text()})"


def graph_from_edges(n: int, edges: Iterable) -> Graph:
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(G: Graph) -> Graph:
    full = G.full
    return Graph(G.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(G.adj)))


def induced(G: Graph, S) -> Graph:
    """Induced subgraph on ``S``, relabelled ``0..|S|-1`` in increasing order of the old labels."""
    verts = sorted(set(S))
    if not verts:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= G.n:
        raise ValueError("vertex subset not contained in the graph")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in combinations(verts, 2) if G.has_edge(u, v)]
    return graph_from_edges(len(verts), edges)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force isomorphism test with degree-sequence pruning (small graphs only)."""
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    n = G.n
    image = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            return True
        for w in range(n):
            if used[w] or G.degree(v) != H.degree(w):
                continue
            if all(G.has_edge(u, v) == H.has_edge(image[u], w) for u in range(v)):
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


def is_automorphism(G: Graph, perm) -> bool:
    return all(G.has_edge(perm[u], perm[v]) for u, v in G.edges()) and len(set(perm)) == G.n


def _check_bound(G, bound):
    if G.n > bound:
        raise CapExceeded(f"graph has {G.n} vertices, exhaustive bound is {bound}")


# --- cliques, independent sets, colourings ---------------------------------


def _max_clique(adj, cand):
    """Size of a largest clique inside ``cand`` (branch and bound on bitsets)."""
    best = 0

    def expand(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        # pivot: branch only on candidates outside the neighbourhood of a high-degree pivot
        pivot = max(_bits(cand), key=lambda u: bin(adj[u] & cand).count("1"))
        for v in _bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)
            if size + bin(cand).count("1") <= best:
                return

    expand(0, cand)
    return best


def clique_number(G: Graph, bound: int = GRAPH_MAX_N) -> int:
    _check_bound(G, bound)
    return _max_clique(G.adj, G.full)


def independence_number(G: Graph, bound: int = GRAPH_MAX_N) -> int:
    _check_bound(G, bound)
    return _max_clique(complement(G).adj, G.full)


def maximum_cliques(G: Graph, size: Optional[int] = None):
    """All cliques of the given size (default: the clique number), as sorted tuples."""
    if size is None:
        size = clique_number(G)
    return [S for S in combinations(range(G.n), size)
            if all(G.has_edge(u, v) for u, v in combinations(S, 2))]


def independent_sets(G: Graph, size: int):
    return [S for S in combinations(range(G.n), size)
            if not any(G.has_edge(u, v) for u, v in combinations(S, 2))]


def chromatic_number(G: Graph, bound: int = GRAPH_MAX_N) -> int:
    """Exact chromatic number by memoised recursion over vertex subsets.

    The colour class of the lowest remaining vertex can be taken maximal
    among independent sets of what is left, so only those are branched on.
    """
    _check_bound(G, bound)
    adj = G.adj

    def maximal_independent(cand, chosen, excluded):
        # maximal independent sets of the subgraph on cand|chosen that contain chosen
        if not cand:
            if not excluded:
                yield chosen
            return
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        yield from maximal_independent(cand & ~adj[v] & ~bit, chosen | bit, excluded & ~adj[v])
        yield from maximal_independent(cand & ~bit, chosen, excluded | bit)

    @lru_cache(maxsize=None)
    def chi(S):
        if not S:
            return 0
        v = (S & -S).bit_length() - 1
        bit = 1 << v
        best = bin(S).count("1")
        rest = S & ~adj[v] & ~bit
        for I in maximal_independent(rest, bit, 0):
            best = min(best, 1 + chi(S & ~I))
        return best

    return chi(G.full)


def clique_cover_number(G: Graph, bound: int = GRAPH_MAX_N) -> int:
    return chromatic_number(complement(G), bound)


def cocoloring(G: Graph, w: int, b: int, bound: int = GRAPH_MAX_N):
    """Partition ``V(G)`` into ``w`` independent sets and ``b`` cliques, or return ``None``.

    Parts may be empty. The witness is ``(independent_sets, cliques)``, each a
    list of sorted vertex tuples.
    """
    if w < 0 or b < 0:
        raise ValueError("w and b must be nonnegative")
    _check_bound(G, bound)
    adj = G.adj
    ind = [0] * w
    cli = [0] * b

    def place(v):
        if v == G.n:
            return True
        bit = 1 << v
        opened = False
        for i in range(w):
            if ind[i] == 0:
                # empty parts are interchangeable, so try only the first one
                if opened:
                    continue
                opened = True
            if ind[i] & adj[v] == 0:
                ind[i] |= bit
                if place(v + 1):
                    return True
                ind[i] &= ~bit
        opened = False
        for j in range(b):
            if cli[j] == 0:
                if opened:
                    continue
                opened = True
            if cli[j] & ~adj[v] == 0:
                cli[j] |= bit
                if place(v + 1):
                    return True
                cli[j] &= ~bit
        return False

    if not place(0):
        return None
    as_tuple = lambda m: tuple(_bits(m))
    return [as_tuple(m) for m in ind], [as_tuple(m) for m in cli]


def cocoloring_exists(G: Graph, w: int, b: int, bound: int = GRAPH_MAX_N) -> bool:
    return cocoloring(G, w, b, bound) is not None


def binary_chromatic_number(G: Graph, bound: int = GRAPH_MAX_N) -> int:
    """One more than the largest ``w + b`` for which no ``(w, b)``-cocolouring exists."""
    _check_bound(G, bound)
    chi = chromatic_number(G, bound)
    worst = -1
    b = clique_cover_number(G, bound)
    for w in range(chi + 1):
        # cocolouring existence is monotone, so the smallest b only shrinks as w grows
        while b > 0 and cocoloring_exists(G, w, b - 1, bound):
            b -= 1
        if b > 0:
            worst = max(worst, w + b - 1)
    return worst + 1


# --- split graphs and clique-stars ----------------------------------------


def is_split(G: Graph, bound: int = GRAPH_MAX_N):
    """A ``(clique, independent set)`` partition of ``V(G)``, or ``None``."""
    _check_bound(G, bound)
    full = G.full
    # try clique parts in order of decreasing size so the witness uses a maximum clique
    for size in range(G.n, -1, -1):
        for C in combinations(range(G.n), size):
            mask = sum(1 << v for v in C)
            if G.is_clique(mask) and G.is_independent(full & ~mask):
                return C, tuple(_bits(full & ~mask))
    return None


@dataclass(frozen=True)
class CliqueStarParams:
    omega: int
    a: tuple  # (a_0, a_1, ..., a_omega); a_1 >= ... >= a_omega

    def __post_init__(self):
        if self.omega < 2:
            raise ValueError("a clique-star needs a clique of size at least 2")
        if len(self.a) != self.omega + 1 or any(x < 0 for x in self.a):
            raise ValueError("need omega+1 nonnegative entries (a_0, ..., a_omega)")

    @property
    def alpha(self):
        return self.omega + sum(self.a)

    @property
    def h(self):
        return self.a[0] + sum(x + 1 for x in self.a[1:]) + self.omega

    def __str__(self):
        return f"({self.omega}; " + ", ".join(map(str, self.a)) + ")"


def clique_star_params(G: Graph, bound: int = GRAPH_MAX_N) -> Optional[CliqueStarParams]:
    """Parameters of ``G`` as a clique-star, trying every clique/independent partition."""
    _check_bound(G, bound)
    full = G.full
    for size in range(G.n, 1, -1):
        for W in combinations(range(G.n), size):
            wmask = sum(1 << v for v in W)
            A = full & ~wmask
            if not (G.is_clique(wmask) and G.is_independent(A)):
                continue
            leaves = [G.adj[w] & A for w in W]
            if any(m == 0 for m in leaves):
                continue
            union = 0
            ok = True
            for m in leaves:
                if union & m:
                    ok = False
                    break
                union |= m
            if not ok:
                continue
            a0 = bin(A & ~union).count("1")
            rest = sorted((bin(m).count("1") - 1 for m in leaves), reverse=True)
            return CliqueStarParams(size, (a0, *rest))
    return None


# --- named graphs ------------------------------------------------------------

H9_EDGES = ((0, 1), (0, 2), (0, 3), (0, 6), (0, 7), (0, 8), (1, 2), (1, 3), (1, 8), (2, 3), (2, 4),
            (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8))


def h9() -> Graph:
    return graph_from_edges(9, H9_EDGES)


def complete(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return graph_from_edges(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def clique_plus_isolated(a: int, b: int) -> Graph:
    """``K_a + E_b``: an ``a``-clique together with ``b`` isolated vertices."""
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need a, b >= 0 and a + b >= 1")
    return graph_from_edges(a + b, combinations(range(a), 2))


def star(h: int) -> Graph:
    """``K_{1,h-1}`` with centre 0."""
    if h < 2:
        raise ValueError("a star needs at least 2 vertices")
    return graph_from_edges(h, [(0, i) for i in range(1, h)])


def clique_star(params: CliqueStarParams) -> Graph:
    """Clique on ``0..omega-1``; centre ``i`` gets ``a_i + 1`` leaves; then ``a_0`` isolated vertices."""
    omega = params.omega
    edges = list(combinations(range(omega), 2))
    nxt = omega
    for i, ai in enumerate(params.a[1:]):
        for _ in range(ai + 1):
            edges.append((i, nxt))
            nxt += 1
    return graph_from_edges(nxt + params.a[0], edges)


def double_star(h: int, a1: int, a2: int) -> Graph:
    """Adjacent centres with ``a1 + 1`` and ``a2 + 1`` leaves; ``h = a1 + a2 + 4``."""
    if h != a1 + a2 + 4:
        raise ValueError(f"double_star({h}, {a1}, {a2}) needs h = a1 + a2 + 4")
    return clique_star(CliqueStarParams(2, (0, a1, a2)))


def c6_short_diag() -> Graph:
    return graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2)])


def c6_long_diag() -> Graph:
    return graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


_PRESET_RE = re.compile(r"^\s*([A-Za-z_+0-9]+?)\s*(?:\(([^)]*)\))?\s*$")


def preset(name: str, *args) -> Graph:
    """Named graph. ``name`` may carry its arguments, e.g. ``"star(4)"`` or ``"K_a+E_b(2,1)"``."""
    m = _PRESET_RE.match(name)
    if not m:
        raise ValueError(f"unknown preset {name!r}")
    key = m.group(1)
    if m.group(2) is not None:
        if args:
            raise ValueError("pass preset arguments either inline or positionally, not both")
        args = tuple(int(t) for t in m.group(2).replace(";", ",").split(",") if t.strip())
    key_l = key.lower()
    try:
        if key_l in ("h9", "h_9"):
            return h9()
        if key_l in ("k_a+e_b", "kaeb", "k+e"):
            return clique_plus_isolated(*args)
        if key_l == "star":
            return star(*args)
        if key_l == "double_star":
            return double_star(*args)
        if key_l == "clique_star":
            return clique_star(CliqueStarParams(args[0], tuple(args[1:])))
        if key_l == "c6_short_diag":
            return c6_short_diag()
        if key_l == "c6_long_diag":
            return c6_long_diag()
        if key_l in ("k", "complete"):
            return complete(*args)
        if key_l in ("e", "empty"):
            return empty(*args)
        if key_l in ("c", "cycle"):
            return cycle(*args)
    except TypeError as exc:
        raise ValueError(f"bad parameters for preset {name!r}: {exc}") from None
    raise ValueError(f"unknown preset {name!r}")
