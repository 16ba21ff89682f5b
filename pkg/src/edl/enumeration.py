"""Isomorphism-free enumeration of CRGs and bounded searches over ``K(F)``.

CRGs are generated one vertex-colour signature at a time (``w`` white then
``b`` black vertices). Within a signature every admissible pair colouring is
encoded as a base-3 integer whose digits follow the alphabetical order
``b < g < w``, so integer order is the order of the pair-colour strings.
A colouring is kept iff its code is minimal over all colour-preserving
relabellings, which makes the kept text exactly :func:`edl.crg.canonical_form`.

Passing ``p`` restricts pair colours to the structure every ``p``-core must
have: for ``p < 1/2`` no black edges and white edges only between black
vertices; for ``p > 1/2`` the colour-swapped statement; at ``p = 1/2`` only
gray edges. The minimum of ``g`` over a hereditary ``K(F)`` is always attained
on a ``p``-core, and a sub-CRG of a member is again a member, so the
restriction never changes minima of ``g`` at that ``p``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

import numpy as np

from edl.config import CapExceeded, check_k
from edl.crg import CRG, as_fraction, canonical_form, g as g_of, parse_crg
from edl.embedding import ForbFamily, embeds

DIGITS = "bgw"
_MAX_WORK = 2_000_000_000
_CHUNK = 1 << 15


def side(p) -> Optional[int]:
    """-1, 0, +1 for ``p`` below, at, above 1/2; ``None`` for no restriction."""
    if p is None:
        return None
    p = as_fraction(p)
    half = Fraction(1, 2)
    return (p > half) - (p < half)


def _allowed(vcolors, pairs, restrict):
    out = []
    for i, j in pairs:
        if restrict is None:
            out.append((0, 1, 2))
        elif restrict < 0:
            out.append((1, 2) if vcolors[i] == "B" and vcolors[j] == "B" else (1,))
        elif restrict > 0:
            out.append((0, 1) if vcolors[i] == "W" and vcolors[j] == "W" else (1,))
        else:
            out.append((1,))
    return out


def signature_crgs(w: int, b: int, restrict: Optional[int] = None) -> list:
    """Canonical CRGs with ``w`` white and ``b`` black vertices, in canonical-encoding order."""
    k = w + b
    check_k(k)
    vcolors = "W" * w + "B" * b
    pairs = list(combinations(range(k), 2))
    m = len(pairs)
    if m == 0:
        return [CRG(vcolors, "")]
    allowed = _allowed(vcolors, pairs, restrict)
    total = math.prod(len(a) for a in allowed)
    perms = [pw + pb for pw in permutations(range(w)) for pb in permutations(range(w, k))]
    if total * len(perms) > _MAX_WORK:
        raise CapExceeded(
            f"signature {vcolors} needs {total} colourings x {len(perms)} relabellings; "
            "restrict the enumeration with p")
    pos = {pr: t for t, pr in enumerate(pairs)}
    weights = np.array([3 ** (m - 1 - t) for t in range(m)], dtype=np.int64)
    # pair t moves to position newpos[t] under the relabelling
    moved = []
    for perm in perms:
        newpos = [pos[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
        if newpos != list(range(m)):
            moved.append(weights[newpos])
    codes = []
    grids = [np.array(a, dtype=np.int64) for a in allowed]
    radices = [len(a) for a in allowed]
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        digits = np.empty((idx.size, m), dtype=np.int64)
        rem = idx.copy()
        for t in range(m - 1, -1, -1):
            digits[:, t] = grids[t][rem % radices[t]]
            rem //= radices[t]
        code = digits @ weights
        keep = np.ones(idx.size, dtype=bool)
        for wv in moved:
            keep &= code <= digits @ wv
        codes.extend(int(c) for c in code[keep])
    out = []
    for c in sorted(codes):
        chars = []
        for _ in range(m):
            c, d = divmod(c, 3)
            chars.append(DIGITS[d])
        out.append(CRG(vcolors, "".join(reversed(chars))))
    return out


def signatures(max_k: int):
    """Vertex-colour signatures ``(w, b)`` ordered by ``k`` then by colour string."""
    return [(w, k - w) for k in range(1, max_k + 1) for w in range(0, k + 1)]


def enumerate_crgs(max_k: int, p=None) -> Iterator[CRG]:
    """All CRGs with at most ``max_k`` vertices up to colour-isomorphism.

    With ``p`` given, only CRGs with the ``p``-core edge structure are produced
    (see the module docstring).
    """
    check_k(max_k)
    restrict = side(p)
    for w, b in signatures(max_k):
        yield from signature_crgs(w, b, restrict)


# --- family membership with memoised heredity ------------------------------


class FamilyOracle:
    """Membership in ``K(F)`` with a cache keyed on canonical form.

    A CRG containing a non-member sub-CRG is itself a non-member, so the
    single-vertex deletions are checked first.
    """

    def __init__(self, F: ForbFamily):
        self.F = F
        self.cache = {}

    def __call__(self, K: CRG) -> bool:
        key = canonical_form(K)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        member = True
        if K.k > 1:
            for v in range(K.k):
                if not self(K.sub([u for u in range(K.k) if u != v])):
                    member = False
                    break
        if member:
            member = all(embeds(H, K) is None for H in self.F.graphs)
        self.cache[key] = member
        return member


def _family_trivial(F: ForbFamily):
    return any(H.n == 1 for H in F.graphs)


def family_members(F: ForbFamily, max_k: int, p=None) -> list:
    oracle = FamilyOracle(F)
    return [K for K in enumerate_crgs(max_k, p) if oracle(K)]


# --- parallel minimum of g over a family ----------------------------------


def _signature_task(args):
    F, w, b, restrict, grid, part, nparts = args
    oracle = FamilyOracle(F)
    best = [None] * len(grid)
    for K in signature_crgs(w, b, restrict)[part::nparts]:
        if not oracle(K):
            continue
        enc = K.to_text()
        for i, p in enumerate(grid):
            key = (g_of(K, p), enc)
            if best[i] is None or key < best[i]:
                best[i] = key
    return best


def _run(tasks, workers):
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_signature_task, tasks))
    return [_signature_task(t) for t in tasks]


def family_grid_minima(F: ForbFamily, max_k: int, grid: Sequence, restrict: bool = True,
                       workers: int = 1) -> list:
    """For each ``p`` in ``grid`` the smallest ``(g, canonical encoding)`` over ``K(F)`` with ``k <= max_k``.

    Entries are ``None`` when no enumerated CRG qualifies. Work is split by
    vertex-colour signature and merged by a min-reduction, so the answer does
    not depend on ``workers``. With ``restrict`` the grid is split by side of
    1/2 and each part only visits CRGs with the matching ``p``-core structure.
    """
    check_k(max_k)
    grid = [as_fraction(p) for p in grid]
    if _family_trivial(F):
        raise ValueError("family contains a one-vertex graph, which embeds in every CRG")
    groups = {}
    for i, p in enumerate(grid):
        groups.setdefault(side(p) if restrict else None, []).append(i)
    tasks, slots = [], []
    for key, idxs in sorted(groups.items(), key=lambda kv: (kv[0] is None, kv[0] or 0)):
        sub = [grid[i] for i in idxs]
        for w, b in signatures(max_k):
            # large signatures are striped across several tasks to balance workers
            nparts = max(1, workers) if w + b >= 5 else 1
            for part in range(nparts):
                tasks.append((F, w, b, key, sub, part, nparts))
                slots.append(idxs)
    results = _run(tasks, workers)
    best = [None] * len(grid)
    for idxs, res in zip(slots, results):
        for i, key in zip(idxs, res):
            if key is not None and (best[i] is None or key < best[i]):
                best[i] = key
    return best


def min_g_over_family(F: ForbFamily, max_k: int, p, workers: int = 1, restrict: bool = True):
    """Smallest ``g_K(p)`` over ``K in K(F)`` with at most ``max_k`` vertices, and a minimiser.

    This is an upper bound on the edit distance at ``p`` that can only drop
    as ``max_k`` grows.
    """
    (best,) = family_grid_minima(F, max_k, [p], restrict=restrict, workers=workers)
    if best is None:
        raise ValueError(f"no CRG with at most {max_k} vertices lies in K(F)")
    value, enc = best
    return value, parse_crg(enc)
