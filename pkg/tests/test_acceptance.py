"""Acceptance criteria A1-A9.

Each criterion is a function returning ``(passed, detail)``. Under pytest one
summary line per criterion is printed at the end of the run; running this file
directly prints the same lines and exits non-zero on any failure.
The unrestricted A5 run takes several minutes and is marked ``slow``.
"""

import math
import random
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from edl import crg as C
from edl import edf as E
from edl import graphs as G
from edl import verify as V
from edl.embedding import ForbFamily, embeds
from edl.enumeration import enumerate_crgs, family_grid_minima

GRID = E.dyadic_grid(64)
HALF = Fraction(1, 2)
SEED = 20240611


def _timed(fn, *args):
    t0 = time.perf_counter()
    ok, detail = fn(*args)
    return ok, detail, time.perf_counter() - t0


# --- A1: exact g on the CRGs named in the H9 and C6* analyses ------------------


def _a1_clauses():
    return {
        "K(3,0) = p/3": (C.K1_H9, lambda p: p / 3),
        "K(0,2) = (1-p)/2": (C.K4_H9, lambda p: (1 - p) / 2),
        "K2 = min{p/3, p/(2+2p)}": (C.K2_H9, lambda p: min(p / 3, p / (2 + 2 * p))),
        "1/K3 = 1/p + 2/min{p,1/2}": (C.K3_H9, lambda p: 1 / (1 / p + 2 / min(p, HALF))),
        "C6* = min{p/(1+2p), (1-p)/2}": (C.C6STAR_CRG, lambda p: min(p / (1 + 2 * p), (1 - p) / 2)),
    }


def a1():
    failures = {}
    for name, (K, expected) in _a1_clauses().items():
        bad = [p for p in GRID if C.g(K, p) != expected(p)]
        if bad:
            failures[name] = bad
    # what does hold for the C6* CRG: its own value, and the paper's formula once K(0,2) is added
    c6_own = all(C.g(C.C6STAR_CRG, p) == (p / (1 + 2 * p) if p <= HALF else p * (1 - p)) for p in GRID)
    c6_env = all(min(C.g(C.C6STAR_CRG, p), C.g(C.K4_H9, p)) == min(p / (1 + 2 * p), (1 - p) / 2)
                 for p in GRID)
    if not failures:
        return True, "all 5 clauses exact at 63 points"
    parts = [f"{name} fails at {len(b)} points ({b[0]}..{b[-1]})" for name, b in failures.items()]
    parts.append(f"C6* CRG equals p/(1+2p) for p<=1/2 and p(1-p) above: {c6_own}")
    parts.append(f"min(C6*, K(0,2)) equals the formula at all 63 points: {c6_env}")
    return False, f"{5 - len(failures)}/5 clauses exact; " + "; ".join(parts)


# --- A2: exact maximiser of the H9 envelope ---------------------------------------


def a2():
    mp = E.max_point(E.h9_edf())
    ok = (mp.exact and mp.p_exact == V.H9_P_STAR and mp.d_exact == V.H9_D_STAR
          and abs(mp.p_star - (1 + math.sqrt(17)) / 8) <= 1e-9 and abs(mp.d_star - (7 - math.sqrt(17)) / 16) <= 1e-9)
    return ok, f"p* = {mp.p_exact} ~ {mp.p_star:.10f}, d* = {mp.d_exact} ~ {mp.d_star:.10f}"


# --- A3: embedding facts ---------------------------------------------------------


def a3():
    H = G.h9()
    got = [(name, embeds(H, K) is not None, want) for name, K, want in V.H9_EMBED_FACTS]
    ok = all(g == w for _, g, w in got)
    return ok, ", ".join(f"{name}:{'yes' if g else 'no'}" for name, g, _ in got)


# --- A4: split-graph instances ------------------------------------------------------


A4_INSTANCES = [(3, 2), (4, 2), (3, 3), (4, 3)]


def a4():
    details, ok = [], True
    for alpha, omega in A4_INSTANCES:
        checks = V.verify_split(alpha, omega, alpha + omega - 1, GRID)
        passed = V.all_passed(checks)
        ok &= passed
        details.append(f"({alpha},{omega}) {'ok' if passed else 'FAILED'} [{len(checks)} checks]")
    return ok, ", ".join(details)


# --- A5: enumeration reproduces the H9 envelope ---------------------------------------


def _a5(restrict, workers):
    env = E.h9_edf()
    minima = family_grid_minima(ForbFamily.of(G.h9()), 5, GRID, restrict=restrict, workers=workers)
    bad = [p for p, m in zip(GRID, minima) if m is None or m[0] != env.value(p)]
    argmins = sorted({m[1] for m in minima if m is not None})
    if bad:
        return False, f"differs at {len(bad)} points, first {bad[0]}"
    return True, f"equal at 63 points; minimisers {argmins}"


def a5():
    return _a5(True, 1)


def a5_full():
    return _a5(False, 4)


# --- A6: structure of p-cores ---------------------------------------------------------


A6_P = [Fraction(1, 4), Fraction(2, 5), Fraction(3, 5), Fraction(3, 4)]
A6_COMPONENT_P = [Fraction(2, 7), HALF, Fraction(5, 8)]


def _core_violations(K, p, res):
    out = []
    g = res.g
    for (i, j), c in zip(((i, j) for i in range(K.k) for j in range(i + 1, K.k)), K.ecolors):
        ends = K.vcolors[i] + K.vcolors[j]
        if p < HALF and (c == "b" or (c == "w" and ends != "BB")):
            out.append(f"edge structure at {i}{j}")
        if p > HALF and (c == "w" or (c == "b" and ends != "WW")):
            out.append(f"edge structure at {i}{j}")
    for v, (xv, d) in enumerate(C.localization_quantities(K, p, res)):
        if p * d.dW + (1 - p) * d.dB != g:
            out.append(f"regularity at {v}")
        white = K.vcolors[v] == "W"
        if p <= HALF and white and xv != g / p:
            out.append(f"white weight at {v}")
        if p <= HALF and not white and d.dG != (p - g) / p + (1 - 2 * p) / p * xv:
            out.append(f"black gray-degree at {v}")
        if p <= HALF and not white and xv > g / (1 - p):
            out.append(f"black weight bound at {v}")
        if p >= HALF and white and xv > g / p:
            out.append(f"white weight bound at {v}")
    return out


def a6():
    small = list(enumerate_crgs(4))
    cores, violations = 0, []
    for p in A6_P:
        for K in small:
            res = C.g_value(K, p)
            if not C.is_p_core(K, p, res.g):
                continue
            cores += 1
            violations += [f"{K} at {p}: {v}" for v in _core_violations(K, p, res)]
    # the identity is trivial for connected CRGs, so only split ones are evaluated
    split = [K for K in enumerate_crgs(5) if len(C.component_vertex_sets(K)) > 1]
    for p in A6_COMPONENT_P:
        for K in split:
            if 1 / C.g(K, p) != sum(1 / C.g(Kc, p) for Kc in C.components(K)):
                violations.append(f"component identity for {K} at {p}")
    detail = (f"{cores} (CRG, p) core pairs with k<=4; component identity on {len(split)} "
              f"disconnected CRGs with k<=5 at p in {{2/7, 1/2, 5/8}}; {len(violations)} violations")
    if violations:
        detail += f"; first: {violations[0]}"
    return not violations, detail


# --- A7: the H9 preset ----------------------------------------------------------------


def a7():
    checks = V.h9_structure_checks()
    ok3, _ = a3()
    failed = [c.name for c in checks if not c.passed]
    ok = not failed and ok3
    return ok, f"{len(checks)} structural checks + embedding facts" + (f"; failed: {failed}" if failed else "")


# --- A8: exact QP against sampling -------------------------------------------------------


def _project_simplex(v):
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1
    rho = np.nonzero(u - css / np.arange(1, len(v) + 1) > 0)[0][-1]
    return np.maximum(v - css[rho] / (rho + 1), 0)


def _refine(M, x, iters=5000):
    step = 1 / (2 * max(np.abs(np.linalg.eigvalsh(M)).max(), 1e-12))
    for _ in range(iters):
        x = _project_simplex(x - step * 2 * M @ x)
    return x


def a8(n_crgs=200, n_samples=100_000):
    rnd = random.Random(SEED)
    rng = np.random.default_rng(SEED)
    worst_gap, below = 0.0, []
    for _ in range(n_crgs):
        k = rnd.randint(1, 5)
        K = C.CRG("".join(rnd.choice("WB") for _ in range(k)),
                  "".join(rnd.choice("wbg") for _ in range(k * (k - 1) // 2)))
        d = rnd.randint(2, 60)
        p = Fraction(rnd.randint(1, d - 1), d)
        g = float(C.g(K, p))
        M = np.array([[float(v) for v in row] for row in C.m_matrix(K, p)])
        X = np.vstack([rng.dirichlet(np.ones(k), size=n_samples), np.eye(k)])
        vals = np.einsum("ni,ij,nj->n", X, M, X)
        if vals.min() < g - 1e-12:
            below.append(f"{K} at {p}")
        x = _refine(M, X[vals.argmin()])
        worst_gap = max(worst_gap, abs(float(x @ M @ x) - g))
    ok = not below and worst_gap <= 1e-6
    return ok, (f"{n_crgs} CRGs x {n_samples} samples; sampled values below g: {len(below)}; "
                f"max |refined - g| = {worst_gap:.2e}")


# --- A9: complement dualities ---------------------------------------------------------


A9_P = [Fraction(1, 3), Fraction(3, 5)]


def a9():
    crgs = list(enumerate_crgs(5))
    bad = [(K, p) for p in A9_P for K in crgs if C.g(C.complement_crg(K), 1 - p) != C.g(K, p)]
    rnd = random.Random(SEED)
    mismatched = 0
    for _ in range(100):
        n = rnd.randint(1, 7)
        H = G.graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5])
        k = rnd.randint(1, 4)
        K = C.CRG("".join(rnd.choice("WB") for _ in range(k)),
                  "".join(rnd.choice("wbg") for _ in range(k * (k - 1) // 2)))
        if (embeds(H, K) is None) != (embeds(G.complement(H), C.complement_crg(K)) is None):
            mismatched += 1
    ok = not bad and not mismatched
    return ok, (f"g duality on {len(crgs)} CRGs x {len(A9_P)} values of p: {len(bad)} mismatches; "
                f"embedding duality on 100 random pairs: {mismatched} mismatches")


# --- registry ---------------------------------------------------------------------------

CRITERIA = [
    ("A1", "exact g on named CRGs", a1, 5),
    ("A2", "H9 maximiser", a2, 1),
    ("A3", "H9 embedding facts", a3, 2),
    ("A4", "split-graph instances", a4, 300),
    ("A5", "H9 envelope by enumeration, k<=5 (p-core-shaped CRGs)", a5, 1800),
    ("A6", "p-core structure and component identity", a6, None),
    ("A7", "H9 preset oracle", a7, None),
    ("A8", "QP against sampling and refinement", a8, 120),
    ("A9", "complement dualities", a9, None),
]
SLOW_CRITERIA = [("A5", "H9 envelope by enumeration, k<=5 (all CRGs, 4 workers)", a5_full, 1800)]


def evaluate(label, title, fn, limit):
    ok, detail, secs = _timed(fn)
    in_time = limit is None or secs < limit
    budget = f"{secs:.1f}s" + (f" (limit {limit}s)" if limit else "")
    line = f"{label} {'PASS' if ok and in_time else 'FAIL'}  {title}: {detail}; {budget}"
    return ok and in_time, line


def _record(line):
    from conftest import record_acceptance
    record_acceptance(line)


# A1 as written asserts the family formula for the single C6* CRG, which fails for p > 1/2
A1_XFAIL = "C6* clause: the formula is the family envelope, not g of the single CRG (see decisions ledger)"


@pytest.mark.parametrize("label,title,fn,limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, title, fn, limit, request):
    if label == "A1":
        request.applymarker(pytest.mark.xfail(reason=A1_XFAIL, strict=True))
    ok, line = evaluate(label, title, fn, limit)
    _record(line)
    assert ok, line


def test_a1_holds_apart_from_c6star():
    for name, (K, expected) in _a1_clauses().items():
        if K is C.C6STAR_CRG:
            continue
        assert all(C.g(K, p) == expected(p) for p in GRID), name


@pytest.mark.slow
@pytest.mark.parametrize("label,title,fn,limit", SLOW_CRITERIA, ids=["A5-all"])
def test_slow_criterion(label, title, fn, limit):
    ok, line = evaluate(label, title, fn, limit)
    _record(line)
    assert ok, line


if __name__ == "__main__":
    todo = CRITERIA + (SLOW_CRITERIA if "--slow" in sys.argv else [])
    results = []
    for crit in todo:
        ok, line = evaluate(*crit)
        print(line, flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
