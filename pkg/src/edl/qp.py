"""Exact global minimum of a quadratic form over the probability simplex.

``min x^T M x  s.t.  sum(x) = 1, x >= 0`` for a symmetric rational matrix
``M`` that may be indefinite. The minimum is found by visiting every face
of the simplex. On the face with support ``S`` a relative-interior optimum
satisfies ``M_S x = lam * 1`` and ``sum(x) = 1``; its objective equals
``lam``. When that system is singular or inconsistent the objective is
affine along a direction inside the face, so the face's minimum is reached
on a smaller face, which is visited separately. Taking the best strictly
positive unique solution over all faces is therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional, Sequence


@dataclass(frozen=True)
class QPResult:
    value: Fraction
    x: tuple
    support: tuple


def _solve_integer_system(A, rhs):
    """Solve ``A y = rhs`` for square integer ``A`` by fraction-free elimination.

    Returns ``(numerators, det)`` with ``y = numerators / det``, or ``None``
    when ``A`` is singular.
    """
    n = len(A)
    aug = [list(row) + [r] for row, r in zip(A, rhs)]
    prev = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            return None
        if piv != c:
            aug[c], aug[piv] = aug[piv], aug[c]
        pc = aug[c][c]
        for r in range(c + 1, n):
            arc = aug[r][c]
            row_r, row_c = aug[r], aug[c]
            for j in range(c + 1, n + 1):
                row_r[j] = (row_r[j] * pc - arc * row_c[j]) // prev
            row_r[c] = 0
        prev = pc
    det = aug[n - 1][n - 1]
    # back substitution, keeping everything over the common denominator det
    y = [0] * n
    for r in range(n - 1, -1, -1):
        acc = aug[r][n] * det
        for j in range(r + 1, n):
            acc -= aug[r][j] * y[j]
        y[r] = acc // aug[r][r]
    return y, det


def _face_candidate(Mi, S):
    """Stationary point of the integer form ``Mi`` on the relative interior of face ``S``.

    Returns ``(lam_num, lam_den, x_nums, x_den)`` in integers or ``None``.
    """
    s = len(S)
    # unknowns x_S and lam: rows  sum_j M_ij x_j - lam = 0  and  sum_j x_j = 1
    A = [[Mi[i][j] for j in S] + [-1] for i in S]
    A.append([1] * s + [0])
    rhs = [0] * s + [1]
    sol = _solve_integer_system(A, rhs)
    if sol is None:
        return None
    y, det = sol
    if det < 0:
        y = [-t for t in y]
        det = -det
    xs = y[:s]
    if any(t <= 0 for t in xs):
        return None
    return y[s], det, xs, det


def simplex_qp(M: Sequence[Sequence], supports: Optional[list] = None) -> QPResult:
    """Global minimum of ``x^T M x`` over the simplex, exactly.

    ``M`` holds Fractions or ints. Among optimal faces the one with the
    lexicographically smallest support is returned.
    """
    k = len(M)
    if k == 0:
        raise ValueError("empty matrix")
    entries = [Fraction(v) for row in M for v in row]
    scale = lcm(*(e.denominator for e in entries))
    Mi = [[int(entries[i * k + j] * scale) for j in range(k)] for i in range(k)]
    return simplex_qp_int(Mi, scale, supports)


def simplex_qp_int(Mi, scale: int = 1, supports: Optional[list] = None) -> QPResult:
    """:func:`simplex_qp` for the matrix ``Mi / scale`` with ``Mi`` integer."""
    k = len(Mi)
    for i in range(k):
        for j in range(i):
            if Mi[i][j] != Mi[j][i]:
                raise ValueError("matrix is not symmetric")
    if supports is None:
        supports = _all_supports(k)
    # best objective kept as an integer fraction best_num / best_den
    best_num, best_den, best_S, best_x = None, 1, None, None
    for S in supports:
        if len(S) == 1:
            num, den = Mi[S[0]][S[0]], 1
            if best_num is None or num * best_den < best_num * den:
                best_num, best_den, best_S, best_x = num, den, S, ((1, 1),)
            continue
        cand = _face_candidate(Mi, S)
        if cand is None:
            continue
        num, den, x_nums, x_den = cand
        if best_num is None or num * best_den < best_num * den:
            best_num, best_den, best_S = num, den, S
            best_x = tuple((t, x_den) for t in x_nums)
    x = [Fraction(0)] * k
    for i, (t, d) in zip(best_S, best_x):
        x[i] = Fraction(t, d)
    return QPResult(Fraction(best_num, best_den * scale), tuple(x), tuple(best_S))


_SUPPORTS = {}


def _all_supports(k):
    if k not in _SUPPORTS:
        _SUPPORTS[k] = sorted(S for s in range(1, k + 1) for S in combinations(range(k), s))
    return _SUPPORTS[k]


def quad_form(M, x):
    k = len(x)
    return sum(M[i][j] * x[i] * x[j] for i in range(k) for j in range(k))
