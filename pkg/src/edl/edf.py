"""Edit-distance functions as lower envelopes of linear-fractional pieces.

Every closed form handled here is a pointwise minimum of functions
``p -> (a p + b) / (c p + d)`` with rational coefficients, so two pieces cross
at a root of a rational quadratic and maxima can be reported exactly as
``r + s*sqrt(D)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from edl.crg import CRG, as_fraction, canonical_form, g as g_of


def dyadic_grid(n: int = 64) -> list:
    """``i/n`` for ``i = 1..n-1``."""
    if n < 2:
        raise ValueError("grid needs n >= 2")
    return [Fraction(i, n) for i in range(1, n)]


def _square_part(n: int):
    """Write ``n = f^2 * m`` with ``m`` squarefree; return ``(f, m)``."""
    f, m = 1, n
    d = 2
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
            f *= d
        d += 1
    return f, m


@dataclass(frozen=True)
class Surd:
    """The real number ``r + s * sqrt(D)`` with rational ``r, s`` and squarefree ``D > 1``."""

    r: Fraction
    s: Fraction
    D: int

    @classmethod
    def rational(cls, r):
        return cls(Fraction(r), Fraction(0), 1)

    def __float__(self):
        return float(self.r) + float(self.s) * math.sqrt(self.D)

    @property
    def is_rational(self):
        return self.s == 0 or self.D == 1

    def as_fraction(self):
        if self.s == 0:
            return self.r
        if self.D == 1:
            return self.r + self.s
        raise ValueError(f"{self} is irrational")

    def _coerce(self, other):
        if isinstance(other, Surd):
            if other.s != 0 and self.s != 0 and other.D != self.D:
                raise ValueError("surds over different square roots")
            return other
        return Surd.rational(other)

    def _make(self, r, s, D):
        return Surd(r, s, D if s != 0 else 1)

    def __add__(self, other):
        o = self._coerce(other)
        D = self.D if self.s != 0 else o.D
        return self._make(self.r + o.r, self.s + o.s, D)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.r, -self.s, self.D)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        D = self.D if self.s != 0 else o.D
        return self._make(self.r * o.r + self.s * o.s * D, self.r * o.s + self.s * o.r, D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        norm = o.r * o.r - o.s * o.s * o.D
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        conj = Surd(o.r, -o.s, o.D)
        num = self * conj
        return self._make(num.r / norm, num.s / norm, num.D)

    def sign(self):
        """Exact sign of ``r + s*sqrt(D)``."""
        a = (self.r > 0) - (self.r < 0)
        b = (self.s > 0) - (self.s < 0)
        if b == 0:
            return a
        if a == 0 or a == b:
            return b
        # opposite signs: compare r^2 with s^2 D
        diff = self.r * self.r - self.s * self.s * self.D
        return a if diff > 0 else (b if diff < 0 else 0)

    def __eq__(self, other):
        if not isinstance(other, (Surd, Fraction, int)):
            return NotImplemented
        return (self - other).sign() == 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __hash__(self):
        return hash((self.r, self.s, self.D))

    def __str__(self):
        if self.is_rational:
            return str(self.as_fraction())
        den = math.lcm(self.r.denominator, self.s.denominator)
        a, b = int(self.r * den), int(self.s * den)
        root = f"√{self.D}"
        if b == 1:
            tail = root
        elif b == -1:
            tail = "-" + root
        else:
            tail = f"{b}{root}"
        if a == 0:
            body = tail
        else:
            body = f"{a}{'+' if b > 0 else ''}{tail}"
        return body if den == 1 else f"({body})/{den}"


Number = Union[Fraction, Surd]


@dataclass(frozen=True)
class LinFrac:
    """``p -> (a p + b) / (c p + d)``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        # the denominator is affine, so checking both ends covers (0, 1)
        lo, hi = self.d, self.c + self.d
        if lo * hi < 0 or (lo == 0 and hi == 0):
            raise ValueError(f"denominator of {self} vanishes inside (0, 1)")

    def __call__(self, p):
        if isinstance(p, Surd):
            return (self.a * p + self.b) / (self.c * p + self.d)
        if isinstance(p, float):
            return (float(self.a) * p + float(self.b)) / (float(self.c) * p + float(self.d))
        p = as_fraction(p)
        return (self.a * p + self.b) / (self.c * p + self.d)

    def defined_at(self, p):
        return self.c * p + self.d != 0

    @property
    def is_constant(self):
        return self.a * self.d == self.b * self.c

    def __str__(self):
        num, den = _affine(self.a, self.b), _affine(self.c, self.d)
        if den == "1":
            return num
        wrap = lambda t: f"({t})" if any(ch in t[1:] for ch in "+-") else t
        return f"{wrap(num)}/{wrap(den)}"


def _affine(coef, const):
    """Render ``const + coef*p`` compactly, e.g. ``1+4p`` or ``1-p``."""
    if coef == 0:
        return str(const)
    pt = "p" if abs(coef) == 1 else f"{abs(coef)}p"
    if const == 0:
        return pt if coef > 0 else "-" + pt
    return f"{const}{'+' if coef > 0 else '-'}{pt}"


def lin(a, b, c, d) -> LinFrac:
    return LinFrac(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


@dataclass(frozen=True)
class Envelope:
    pieces: tuple

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("an envelope needs at least one piece")

    def value(self, p):
        vals = [f(p) for f in self.pieces if not isinstance(p, (Fraction, int)) or f.defined_at(p)]
        return min(vals)

    __call__ = value

    def argmin(self, p):
        return min(range(len(self.pieces)), key=lambda i: self.pieces[i](p))

    def __str__(self):
        if len(self.pieces) == 1:
            return str(self.pieces[0])
        return "min{" + ", ".join(map(str, self.pieces)) + "}"


def split_edf(alpha: int, omega: int) -> Envelope:
    """``min{p/(omega-1), (1-p)/(alpha-1)}`` for a split graph neither complete nor empty."""
    if alpha < 2 or omega < 2:
        raise ValueError("need alpha, omega >= 2; complete or empty graphs have one-piece forms")
    return Envelope((lin(1, 0, 0, omega - 1), lin(-1, 1, 0, alpha - 1)))


def clique_edf(omega: int) -> Envelope:
    """Forbidding ``K_omega``: ``p/(omega-1)``."""
    if omega < 2:
        raise ValueError("need omega >= 2")
    return Envelope((lin(1, 0, 0, omega - 1),))


def coclique_edf(alpha: int) -> Envelope:
    """Forbidding an independent ``alpha``-set: ``(1-p)/(alpha-1)``."""
    if alpha < 2:
        raise ValueError("need alpha >= 2")
    return Envelope((lin(-1, 1, 0, alpha - 1),))


def h9_edf() -> Envelope:
    """``min{p/3, p/(1+4p), (1-p)/2}``."""
    return Envelope((lin(1, 0, 0, 3), lin(1, 0, 4, 1), lin(-1, 1, 0, 2)))


def c6star_edf() -> Envelope:
    """``min{p/(1+2p), (1-p)/2}``."""
    return Envelope((lin(1, 0, 2, 1), lin(-1, 1, 0, 2)))


# --- maxima ----------------------------------------------------------------


class NonConcaveEnvelope(ValueError):
    pass


@dataclass(frozen=True)
class MaxPoint:
    p_star: float
    d_star: float
    exact: bool
    p_exact: Optional[Number] = None
    d_exact: Optional[Number] = None
    flat: bool = False


def split_max_point(alpha: int, omega: int) -> MaxPoint:
    """``((omega-1)/(alpha+omega-2), 1/(alpha+omega-2))``."""
    if alpha < 2 or omega < 2:
        raise ValueError("need alpha, omega >= 2")
    p = Fraction(omega - 1, alpha + omega - 2)
    d = Fraction(1, alpha + omega - 2)
    return MaxPoint(float(p), float(d), True, Surd.rational(p), Surd.rational(d))


def crossings(f: LinFrac, h: LinFrac) -> list:
    """Points of ``[0, 1]`` where ``f = h``, as surds, in increasing order."""
    A = f.a * h.c - h.a * f.c
    B = f.a * h.d + f.b * h.c - h.a * f.d - h.b * f.c
    C = f.b * h.d - h.b * f.d
    roots = []
    if A == 0:
        if B != 0:
            roots = [Surd.rational(-C / B)]
    else:
        disc = B * B - 4 * A * C
        if disc < 0:
            return []
        n = disc.numerator * disc.denominator
        fac, D = _square_part(n)
        # sqrt(disc) = fac * sqrt(D) / disc.denominator
        root = Fraction(fac, disc.denominator)
        if D == 1:
            roots = [Surd.rational((-B - root) / (2 * A)), Surd.rational((-B + root) / (2 * A))]
        else:
            roots = [Surd(-B / (2 * A), -root / (2 * A), D), Surd(-B / (2 * A), root / (2 * A), D)]
    out = [r for r in roots if r.sign() >= 0 and (r - 1).sign() <= 0]
    return sorted(set(out), key=float)


def check_concave(env: Envelope, grid: Sequence) -> Optional[Fraction]:
    """First grid point where the second difference is positive, or ``None``.

    The grid must be uniform.
    """
    vals = [env.value(p) for p in grid]
    for i in range(1, len(vals) - 1):
        if vals[i - 1] - 2 * vals[i] + vals[i + 1] > 0:
            return grid[i]
    return None


def max_point(env: Envelope, tol: float = 1e-9, grid: Optional[Sequence] = None) -> MaxPoint:
    """Maximum of a concave envelope on ``[0, 1]``.

    Ternary search gives the numeric maximiser; when the active pieces at the
    maximum cross there (or the maximum sits at an end point) the exact value
    is attached.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if grid is None:
        grid = [Fraction(i, 64) for i in range(65)]
    grid = [p for p in grid if all(f.defined_at(p) for f in env.pieces)]
    bad = check_concave(env, grid)
    if bad is not None:
        raise NonConcaveEnvelope(f"envelope {env} is not concave near p = {bad}")

    def val(p):
        return min(f(p) for f in env.pieces)

    lo, hi = 0.0, 1.0
    if not all(f.defined_at(0) for f in env.pieces):
        lo = 1e-15
    if not all(f.defined_at(1) for f in env.pieces):
        hi = 1 - 1e-15
    while hi - lo > tol / 4:
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if val(m1) < val(m2):
            lo = m1
        else:
            hi = m2
    p_hat = (lo + hi) / 2
    d_hat = val(p_hat)

    flat = any(abs(val(p_hat + s) - d_hat) < 1e-13 for s in (-1e-4, 1e-4) if 0 <= p_hat + s <= 1)
    exact = _exact_max(env, p_hat, max(tol, 1e-7))
    if exact is not None:
        p_ex, d_ex = exact
        return MaxPoint(float(p_ex), float(d_ex), True, p_ex, d_ex, flat)
    return MaxPoint(p_hat, d_hat, False, None, None, flat)


def _exact_max(env: Envelope, p_hat: float, slack: float):
    pieces = env.pieces
    # end points
    for end in (0, 1):
        if abs(p_hat - end) <= slack and all(f.defined_at(end) for f in pieces):
            return Surd.rational(end), Surd.rational(env.value(Fraction(end)))
    active = [f for f in pieces if abs(f(p_hat) - min(h(p_hat) for h in pieces)) <= 1e-6]
    best = None
    for i in range(len(active)):
        for j in range(i + 1, len(active)):
            for r in crossings(active[i], active[j]):
                if abs(float(r) - p_hat) > slack:
                    continue
                d = active[i](r)
                if all((h(r) - d).sign() >= 0 for h in pieces):
                    if best is None or abs(float(r) - p_hat) < abs(float(best[0]) - p_hat):
                        best = (r, d)
    if best is None and len(active) == 1 and active[0].is_constant:
        return None
    return best


def verify_max(env: Envelope, mp: MaxPoint, grid: Sequence, tol: float = 1e-9) -> bool:
    """``value(p) <= d_star + tol`` on the grid and ``d_star = value(p_star)`` within ``tol``."""
    if abs(min(f(mp.p_star) for f in env.pieces) - mp.d_star) > tol:
        return False
    return all(float(env.value(p)) <= mp.d_star + tol for p in grid)


def symmetry_pair(env_H: Envelope, env_Hbar: Envelope, grid: Sequence) -> bool:
    """``env_H(p) == env_Hbar(1 - p)`` exactly at every grid point."""
    return all(env_H.value(p) == env_Hbar.value(1 - as_fraction(p)) for p in grid)


# --- envelopes of CRG sets -------------------------------------------------


@dataclass(frozen=True)
class EnvelopeSample:
    p: Fraction
    value: Fraction
    argmin: CRG


def envelope_from_crgs(crgs: Sequence[CRG], grid: Sequence) -> list:
    """Pointwise minimum of ``g_K`` over ``crgs``; ties go to the smallest canonical encoding."""
    if not crgs:
        raise ValueError("need at least one CRG")
    keyed = [(canonical_form(K), K) for K in crgs]
    out = []
    for p in grid:
        p = as_fraction(p)
        value, _, K = min(((g_of(K, p), enc, K) for enc, K in keyed), key=lambda t: t[:2])
        out.append(EnvelopeSample(p, value, K))
    return out
