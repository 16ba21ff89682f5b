"""Verification harness for the split-graph and H9 edit-distance functions.

Each routine returns a list of :class:`Check` records; the CLI prints them
and exits non-zero if any failed. Expected values are built in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from edl import crg as C
from edl import edf as E
from edl import graphs as G
from edl.embedding import ForbFamily, embeds
from edl.enumeration import family_grid_minima

H9_MAX_K = 5  # K3 of the H9 analysis has five vertices


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    required: bool = True

    def line(self):
        tag = "PASS" if self.passed else ("FAIL" if self.required else "NOTE")
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def all_passed(checks):
    return all(c.passed for c in checks if c.required)


def split_witnesses(alpha: int, omega: int) -> list:
    """Concrete split graphs with the given independence and clique numbers."""
    if alpha < 2 or omega < 2:
        raise ValueError("need alpha, omega >= 2")
    out = [(f"K_{omega}+E_{alpha - 1}", G.clique_plus_isolated(omega, alpha - 1))]
    if alpha >= omega:
        params = G.CliqueStarParams(omega, (alpha - omega,) + (0,) * omega)
        out.append((f"clique-star{params}", G.clique_star(params)))
    if omega >= alpha:
        params = G.CliqueStarParams(alpha, (omega - alpha,) + (0,) * alpha)
        out.append((f"complement of clique-star{params}", G.complement(G.clique_star(params))))
    return out


def _first_bad(grid, values, expected, cmp):
    for p, v, e in zip(grid, values, expected):
        if not cmp(v, e):
            return p, v, e
    return None


def verify_split(alpha: int, omega: int, max_k: Optional[int] = None, grid=None, workers: int = 1):
    if max_k is None:
        max_k = alpha + omega - 1
    grid = grid if grid is not None else E.dyadic_grid(64)
    env = E.split_edf(alpha, omega)
    expected = [env.value(p) for p in grid]
    checks = []
    for name, H in split_witnesses(alpha, omega):
        a, w = G.independence_number(H), G.clique_number(H)
        checks.append(Check(f"{name} is split with (alpha, omega) = ({alpha}, {omega})",
                            G.is_split(H) is not None and (a, w) == (alpha, omega),
                            f"h={H.n}, alpha={a}, omega={w}"))
        uppers = [C.k_wb(omega - 1, 0), C.k_wb(0, alpha - 1)]
        for K in uppers:
            checks.append(Check(f"{name} does not embed in {K}", embeds(H, K) is None))
        gray = [min(C.g(K, p) for K in uppers) for p in grid]
        bad = _first_bad(grid, gray, expected, lambda v, e: v == e)
        checks.append(Check(f"{name}: gray CRGs attain {env}", bad is None,
                            "" if bad is None else f"p={bad[0]}: {bad[1]} != {bad[2]}"))
        minima = family_grid_minima(ForbFamily.of(H), max_k, grid, workers=workers)
        values = [m[0] for m in minima]
        bad = _first_bad(grid, values, expected, lambda v, e: v >= e)
        checks.append(Check(f"{name}: no CRG with k <= {max_k} beats the formula", bad is None,
                            f"{len(grid)} grid points" if bad is None
                            else f"p={bad[0]}: enumerated {bad[1]} < {bad[2]}"))
        bad = _first_bad(grid, values, expected, lambda v, e: v == e)
        checks.append(Check(f"{name}: enumeration with k <= {max_k} reproduces the formula", bad is None,
                            "" if bad is None else f"p={bad[0]}: {bad[1]} != {bad[2]}",
                            required=max_k >= max(alpha, omega) - 1))
    mp = E.max_point(env)
    ref = E.split_max_point(alpha, omega)
    checks.append(Check("maximum point", mp.exact and mp.p_exact == ref.p_exact and mp.d_exact == ref.d_exact,
                        f"(p*, d*) = ({mp.p_exact}, {mp.d_exact}), expected ({ref.p_exact}, {ref.d_exact})"))
    return checks


H9_EMBED_FACTS = (
    ("K(2,1)", C.k_wb(2, 1), True),
    ("K(1,2)", C.k_wb(1, 2), True),
    ("K(3,0)", C.K1_H9, False),
    ("K(0,2)", C.K4_H9, False),
    ("K2", C.K2_H9, False),
    ("K3", C.K3_H9, False),
)

H9_P_STAR = E.Surd(Fraction(1, 8), Fraction(1, 8), 17)
H9_D_STAR = E.Surd(Fraction(7, 16), Fraction(-1, 16), 17)


def h9_structure_checks(H=None):
    """Brute-force checks that the H9 preset has every property used in the analysis."""
    H = H or G.h9()
    checks = []
    ind3 = G.independent_sets(H, 3)
    checks.append(Check("independent 3-sets are {1,4,7}, {2,5,8}", ind3 == [(1, 4, 7), (2, 5, 8)], str(ind3)))
    checks.append(Check("alpha = 3", G.independence_number(H) == 3))
    omega = G.clique_number(H)
    checks.append(Check("omega = 4 with clique {3,4,5,6}",
                        omega == 4 and (3, 4, 5, 6) in G.maximum_cliques(H, 4), f"omega={omega}"))
    checks.append(Check("chi = 4", G.chromatic_number(H) == 4))
    checks.append(Check("chi of complement = 3", G.clique_cover_number(H) == 3))
    checks.append(Check("{1,3,6,8} induces C4", G.is_isomorphic(G.induced(H, [1, 3, 6, 8]), G.cycle(4))))
    checks.append(Check("{0,2,4,5,7} induces C5", G.is_isomorphic(G.induced(H, [0, 2, 4, 5, 7]), G.cycle(5))))
    claw = G.star(4)
    claws = [S for S in combinations(range(H.n), 4) if G.is_isomorphic(G.induced(H, S), claw)]
    checks.append(Check("no induced K_{1,3}", not claws, str(claws[:3])))
    c4_free = True
    for pair in combinations((0, 3, 6), 2):
        rest = [v for v in range(H.n) if v not in pair]
        sub = G.induced(H, rest)
        if any(G.is_isomorphic(G.induced(sub, S), G.cycle(4)) for S in combinations(range(sub.n), 4)):
            c4_free = False
    checks.append(Check("deleting two of {0,3,6} leaves no induced C4", c4_free))
    checks.append(Check("i -> i+3 (mod 9) is an automorphism",
                        G.is_automorphism(H, [(i + 3) % 9 for i in range(9)])))
    return checks


def verify_h9(max_k: int = H9_MAX_K, grid=None, tol: float = 1e-9, workers: int = 1, structure: bool = True):
    grid = grid if grid is not None else E.dyadic_grid(64)
    H = G.h9()
    checks = h9_structure_checks(H) if structure else []
    for name, K, expect in H9_EMBED_FACTS:
        w = embeds(H, K)
        detail = f"witness {w.preimages(K.k)}" if w else "no embedding"
        checks.append(Check(f"H9 {'embeds' if expect else 'does not embed'} in {name} ({K})",
                            (w is not None) == expect, detail))

    comps = C.components(C.K3_H9)
    ok = len(comps) == 3
    for p in grid:
        gk = C.g(C.K3_H9, p)
        ok = ok and 1 / gk == sum(1 / C.g(Kc, p) for Kc in comps)
        ok = ok and gk == min(p / 3, p / (1 + 4 * p))
    checks.append(Check("K3 has 3 components and 1/g = sum of component 1/g", ok,
                        " + ".join(str(Kc) for Kc in comps)))

    env = E.h9_edf()
    expected = [env.value(p) for p in grid]
    minima = family_grid_minima(ForbFamily.of(H), max_k, grid, workers=workers)
    values = [m[0] for m in minima]
    bad = _first_bad(grid, values, expected, lambda v, e: v >= e)
    checks.append(Check(f"no CRG in K(Forb(H9)) with k <= {max_k} beats {env}", bad is None,
                        "" if bad is None else f"p={bad[0]}: {bad[1]} < {bad[2]}"))
    gaps = [p for p, v, e in zip(grid, values, expected) if v != e]
    detail = (f"equal at all {len(grid)} grid points" if not gaps
              else f"differs at {len(gaps)} points, {gaps[0]}..{gaps[-1]} (K3 needs k = {H9_MAX_K})")
    checks.append(Check(f"enumeration with k <= {max_k} reproduces {env}", not gaps, detail,
                        required=max_k >= H9_MAX_K))

    mp = E.max_point(env, tol)
    num_ok = abs(mp.p_star - float(H9_P_STAR)) <= tol and abs(mp.d_star - float(H9_D_STAR)) <= tol
    exact_ok = mp.exact and mp.p_exact == H9_P_STAR and mp.d_exact == H9_D_STAR
    checks.append(Check("maximum point", num_ok and exact_ok,
                        f"p* = {mp.p_exact} ~ {mp.p_star:.9f}, d* = {mp.d_exact} ~ {mp.d_star:.9f}"))
    return checks
