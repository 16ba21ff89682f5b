"""Colored regularity graphs and their ``f``/``g`` functions.

A CRG on ``k`` vertices stores a colour per vertex (``"W"`` or ``"B"``) and a
colour per unordered pair (``"w"``, ``"b"`` or ``"g"``). Its text form is
``<vertex colours>;<pair colours>`` with pairs in row-major upper-triangle
order, e.g. ``"WWWWW;bgggbggggg"``.

``g_K(p)`` is the minimum of ``x^T M_K(p) x`` over the simplex, where ``M``
has ``p`` on white positions, ``1 - p`` on black ones and ``0`` on gray edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional, Sequence

from edl.config import check_k
from edl.qp import simplex_qp_int

WHITE, BLACK, GRAY = "w", "b", "g"
VWHITE, VBLACK = "W", "B"


def as_fraction(p) -> Fraction:
    if isinstance(p, float):
        raise TypeError("p must be exact (Fraction, int or 'a/b' string), not float")
    return Fraction(p)


@dataclass(frozen=True)
class CRG:
    vcolors: str
    ecolors: str

    def __post_init__(self):
        k = len(self.vcolors)
        if k < 1:
            raise ValueError("a CRG needs at least one vertex")
        if set(self.vcolors) - {VWHITE, VBLACK}:
            raise ValueError(f"vertex colours must be W/B, got {self.vcolors!r}")
        if len(self.ecolors) != k * (k - 1) // 2:
            raise ValueError(f"{k} vertices need {k * (k - 1) // 2} edge colours, got {len(self.ecolors)}")
        if set(self.ecolors) - {WHITE, BLACK, GRAY}:
            raise ValueError(f"edge colours must be w/b/g, got {self.ecolors!r}")

    @property
    def k(self):
        return len(self.vcolors)

    def edge(self, i, j):
        if i == j:
            raise ValueError("a vertex has no edge to itself")
        if i > j:
            i, j = j, i
        k = self.k
        return self.ecolors[i * (2 * k - i - 1) // 2 + (j - i - 1)]

    def color_at(self, i, j):
        """Colour of the diagonal/off-diagonal position ``(i, j)``, lower-cased."""
        return self.vcolors[i].lower() if i == j else self.edge(i, j)

    @property
    def white_vertices(self):
        return [v for v, c in enumerate(self.vcolors) if c == VWHITE]

    @property
    def black_vertices(self):
        return [v for v, c in enumerate(self.vcolors) if c == VBLACK]

    def edges_of(self, color):
        return [(i, j) for (i, j), c in zip(combinations(range(self.k), 2), self.ecolors) if c == color]

    def sub(self, S) -> "CRG":
        """Sub-CRG induced on ``S`` (kept in increasing label order)."""
        S = sorted(S)
        if not S:
            raise ValueError("sub-CRG needs a nonempty vertex set")
        return CRG("".join(self.vcolors[v] for v in S),
                   "".join(self.edge(i, j) for i, j in combinations(S, 2)))

    def relabel(self, perm) -> "CRG":
        """CRG whose vertex ``perm[v]`` is the old vertex ``v``."""
        inv = [0] * self.k
        for v, t in enumerate(perm):
            inv[t] = v
        return CRG("".join(self.vcolors[inv[t]] for t in range(self.k)),
                   "".join(self.edge(inv[i], inv[j]) for i, j in combinations(range(self.k), 2)))

    def to_text(self):
        return f"{self.vcolors};{self.ecolors}"

    def __str__(self):
        return self.to_text()


def crg(vcolors, ecolors) -> CRG:
    """Build a CRG from colour strings or from a per-pair mapping ``{(i, j): colour}``."""
    vcolors = "".join(vcolors).upper()
    k = len(vcolors)
    if isinstance(ecolors, dict):
        table = {}
        for (i, j), c in ecolors.items():
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise ValueError(f"bad pair ({i}, {j})")
            key = (min(i, j), max(i, j))
            if key in table and table[key] != c:
                raise ValueError(f"pair {key} given two colours")
            table[key] = c
        missing = [pr for pr in combinations(range(k), 2) if pr not in table]
        if missing:
            raise ValueError(f"pairs without a colour: {missing}")
        ecolors = "".join(table[pr] for pr in combinations(range(k), 2))
    return CRG(vcolors, "".join(ecolors).lower())


def parse_crg(text: str) -> CRG:
    if ";" not in text:
        raise ValueError(f"CRG text needs a ';' separator: {text!r}")
    v, e = text.strip().split(";", 1)
    return crg(v.strip(), e.strip())


def k_wb(w: int, b: int) -> CRG:
    """All-gray CRG with ``w`` white and ``b`` black vertices."""
    if w < 0 or b < 0 or w + b < 1:
        raise ValueError("need w, b >= 0 and w + b >= 1")
    k = w + b
    return CRG(VWHITE * w + VBLACK * b, GRAY * (k * (k - 1) // 2))


def black_clique(k: int) -> CRG:
    """Black vertices joined by white edges."""
    return CRG(VBLACK * k, WHITE * (k * (k - 1) // 2))


# CRGs used in the H9 analysis and the C6* example
K1_H9 = k_wb(3, 0)
K2_H9 = CRG("WWWW", "bggggg")
K3_H9 = CRG("WWWWW", "bggggggbgg")
K4_H9 = k_wb(0, 2)
C6STAR_CRG = CRG("BBW", "wgg")

NAMED_CRGS = {"K1": K1_H9, "K2": K2_H9, "K3": K3_H9, "K4": K4_H9, "C6*": C6STAR_CRG}


def complement_crg(K: CRG) -> CRG:
    """Swap black and white on vertices and edges, keeping gray."""
    swap_v = str.maketrans("WB", "BW")
    swap_e = str.maketrans("wb", "bw")
    return CRG(K.vcolors.translate(swap_v), K.ecolors.translate(swap_e))


# --- the matrix, f and g ---------------------------------------------------


def _entry(color, p):
    if color == WHITE:
        return p
    if color == BLACK:
        return 1 - p
    return Fraction(0)


def m_matrix(K: CRG, p) -> list:
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return [[_entry(K.color_at(i, j), p) for j in range(K.k)] for i in range(K.k)]


def f_value(K: CRG, p) -> Fraction:
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    vw, vb = K.vcolors.count(VWHITE), K.vcolors.count(VBLACK)
    ew, eb = K.ecolors.count(WHITE), K.ecolors.count(BLACK)
    return (p * (vw + 2 * ew) + (1 - p) * (vb + 2 * eb)) / K.k ** 2


@dataclass(frozen=True)
class GResult:
    g: Fraction
    x: tuple
    support: tuple


def g_value(K: CRG, p) -> GResult:
    """Exact ``g_K(p)`` with an optimal weight vector (see :func:`edl.qp.simplex_qp`)."""
    check_k(K.k)
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    # M scaled by the denominator of p is an integer matrix
    a, d = p.numerator, p.denominator
    ints = {WHITE: a, BLACK: d - a, GRAY: 0}
    Mi = [[ints[K.color_at(i, j)] for j in range(K.k)] for i in range(K.k)]
    res = simplex_qp_int(Mi, d)
    return GResult(res.value, res.x, res.support)


def g(K: CRG, p) -> Fraction:
    return g_value(K, p).g


# --- structure -------------------------------------------------------------


def components(K: CRG) -> list:
    """Components of ``K``: classes of the non-gray edge relation, as sub-CRGs.

    Ordered by smallest vertex label.
    """
    return [K.sub(vs) for vs in component_vertex_sets(K)]


def component_vertex_sets(K: CRG) -> list:
    k = K.k
    seen = [False] * k
    out = []
    for s in range(k):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(k):
                if u != v and not seen[u] and K.edge(u, v) != GRAY:
                    seen[u] = True
                    stack.append(u)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class DegreeSums:
    dG: Fraction
    dW: Fraction
    dB: Fraction


def degree_sums(K: CRG, x: Sequence, v: int) -> DegreeSums:
    """Weighted gray/white/black degrees of ``v``; ``v`` itself counts in its own colour."""
    if not 0 <= v < K.k:
        raise IndexError(f"vertex {v} out of range for a CRG on {K.k} vertices")
    if len(x) != K.k:
        raise ValueError("weight vector has the wrong length")
    sums = {WHITE: Fraction(0), BLACK: Fraction(0), GRAY: Fraction(0)}
    for u in range(K.k):
        sums[K.color_at(v, u)] += Fraction(x[u])
    return DegreeSums(sums[GRAY], sums[WHITE], sums[BLACK])


def sub_crgs(K: CRG) -> Iterator[CRG]:
    """Every sub-CRG on a nonempty proper vertex subset, by increasing size."""
    for s in range(1, K.k):
        for S in combinations(range(K.k), s):
            yield K.sub(S)


def _open_unit(p):
    p = as_fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie strictly between 0 and 1, got {p}")
    return p


def is_p_core(K: CRG, p, gK: Optional[Fraction] = None) -> bool:
    """``g_K(p)`` strictly below ``g`` of every proper nonempty sub-CRG.

    ``g`` never increases when vertices are added, so it is enough to compare
    against the sub-CRGs missing a single vertex.
    """
    p = _open_unit(p)
    if K.k == 1:
        return True
    if gK is None:
        gK = g(K, p)
    return all(gK < g(K.sub([u for u in range(K.k) if u != v]), p) for v in range(K.k))


def localization_quantities(K: CRG, p, res: Optional[GResult] = None) -> list:
    """Per-vertex ``(x(v), DegreeSums)`` at the optimum of ``g_K(p)``; needs ``0 < p < 1``."""
    p = _open_unit(p)
    if res is None:
        res = g_value(K, p)
    return [(res.x[v], degree_sums(K, res.x, v)) for v in range(K.k)]


def closed_form_gray(w: int, b: int) -> Callable[[Fraction], Fraction]:
    """``g`` of ``K(w, b)`` as a function of ``p``: ``(w/p + b/(1-p))^-1``.

    Written as ``p(1-p) / (w(1-p) + b p)`` so the endpoints evaluate cleanly.
    """
    if w < 0 or b < 0 or w + b < 1:
        raise ValueError("need w, b >= 0 and w + b >= 1")

    def gray_g(p):
        p = as_fraction(p)
        if w == 0:
            return (1 - p) / b
        if b == 0:
            return p / w
        return p * (1 - p) / (w * (1 - p) + b * p)

    gray_g.w, gray_g.b = w, b
    return gray_g


def black_clique_g(k: int, p) -> Fraction:
    """``g`` of :func:`black_clique` for ``0 < p < 1/2``: ``p + (1 - 2p)/k``."""
    p = as_fraction(p)
    if not 0 < p < Fraction(1, 2):
        raise ValueError("closed form holds for 0 < p < 1/2")
    return p + (1 - 2 * p) / k


# --- canonical form --------------------------------------------------------


def canonical_form(K: CRG) -> str:
    """Colour-isomorphism invariant text encoding.

    White vertices come first; among relabellings that keep that order the
    lexicographically smallest pair-colour string is kept.
    """
    check_k(K.k)
    whites, blacks = K.white_vertices, K.black_vertices
    nw = len(whites)
    pairs = list(combinations(range(K.k), 2))
    best = None
    for pw in permutations(whites):
        for pb in permutations(blacks):
            order = pw + pb  # order[t] = old vertex at new position t
            s = "".join(K.edge(order[i], order[j]) for i, j in pairs)
            if best is None or s < best:
                best = s
    return f"{VWHITE * nw}{VBLACK * (K.k - nw)};{best}"


def canonical_crg(K: CRG) -> CRG:
    return parse_crg(canonical_form(K))
