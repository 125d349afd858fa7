"""Truncated formal power series with exact integer coefficients.

Grammar series are obtained from their defining equations by fixed-point
iteration, never from the radical closed forms: every grammar weighs a
bracket pair by z**2, so each sweep pins at least one more coefficient.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Callable, Sequence


class SeriesError(ValueError):
    pass


class Series:
    """Power series c0 + c1 z + ... + cN z**N, known up to degree N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: int, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: int = 1) -> "Series":
        if k > order:
            return cls([], order)
        return cls([0] * k + [c], order)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, order)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series([{head}{more}], order={self.order})"

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, int):
            return Series.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_sub(other, self)

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_mul(self, other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Series":
        """Multiply by z**k, keeping the order."""
        return Series([0] * k + self.coeffs, self.order)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    def to_csv(self) -> str:
        return "n,coefficient\n" + "".join(f"{n},{c}\n" for n, c in enumerate(self.coeffs))


def ps_add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    return Series([x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def ps_sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    return Series([x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def ps_mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    x, y = a.coeffs, b.coeffs
    nz = [(i, c) for i, c in enumerate(x[:n]) if c]
    out = [0] * n
    for i, c in nz:
        for j in range(n - i):
            d = y[j]
            if d:
                out[i + j] += c * d
    return Series(out)


def ps_star(a: Series) -> Series:
    """Quasi-inverse 1/(1 - a), the counting image of Kleene star."""
    if a.coeffs[0] != 0:
        raise SeriesError("star of unit: constant term must be zero")
    x = a.coeffs
    nz = [(k, c) for k, c in enumerate(x) if c]
    s = [1] + [0] * a.order
    for n in range(1, a.order + 1):
        acc = 0
        for k, c in nz:
            if k > n:
                break
            acc += c * s[n - k]
        s[n] = acc
    return Series(s)


def ps_parry(g: Series) -> Series:
    """Growth series of G wr Z from the growth series of G."""
    if g.coeffs[0] != 1:
        raise SeriesError("growth series must have constant term 1")
    n = g.order
    z = Series.monomial(1, n)
    z2 = Series.monomial(2, n)
    inner = 1 + z2 * (g - 1) * ps_star(z2 * g)
    w = z * g
    integers = 1 + 2 * w * ps_star(w)
    return inner * inner * g * integers


@dataclass(frozen=True)
class RationalSeries:
    """numerator / denominator with integer polynomial coefficients."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise SeriesError("denominator needs a nonzero constant term")

    def expand(self, order: int) -> Series:
        num = list(self.numerator) + [0] * (order + 1)
        den = self.denominator
        d0 = den[0]
        out = []
        for n in range(order + 1):
            acc = num[n]
            for k in range(1, min(n, len(den) - 1) + 1):
                acc -= den[k] * out[n - k]
            q, rem = divmod(acc, d0)
            if rem:
                raise SeriesError("expansion is not integral")
            out.append(q)
        return Series(out)


def poly_mul(*polys: Sequence[int]) -> tuple:
    out = [1]
    for p in polys:
        nxt = [0] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                nxt[i + j] += a * b
        out = nxt
    return tuple(out)


def poly_pow(p: Sequence[int], k: int) -> tuple:
    return poly_mul(*([p] * k)) if k else (1,)


# (1 - z^2) / (1 - z^2 - z^3), the lamp factor of the lamplighter growth series
_LAMP_NUM = (1, 0, -1)
_LAMP_DEN = (1, 0, -1, -1)


def rational_L() -> RationalSeries:
    return RationalSeries(
        poly_mul(_LAMP_NUM, _LAMP_NUM, (1, 1), (1, 1, 1)),
        poly_mul(_LAMP_DEN, _LAMP_DEN, (1, -1, -1)),
    )


def rational_Lk0(k: int) -> RationalSeries:
    return RationalSeries(
        poly_mul(_LAMP_NUM, _LAMP_NUM, poly_pow((0, 1, 1), abs(k))),
        poly_mul(_LAMP_DEN, _LAMP_DEN),
    )


def series_L(order: int) -> Series:
    return rational_L().expand(order)


def series_Lk0(k: int, order: int) -> Series:
    return rational_Lk0(k).expand(order)


def series_Lk1(k: int, order: int) -> Series:
    return series_Lk0(k, order).shift(1)


def series_Lk(k: int, order: int) -> Series:
    r = rational_Lk0(k)
    return RationalSeries(poly_mul(r.numerator, (1, 1)), r.denominator).expand(order)


def fixed_point(step: Callable, order: int, unknowns: int = 1, max_sweeps: int | None = None):
    """Iterate ``step`` from the zero series until nothing changes.

    ``step`` maps a tuple of series (one per unknown) of some order m to a
    new tuple of the same order.  The working order is raised by one each
    sweep, then sweeps continue at full order until a fixed point.
    """
    state = tuple(Series([], 0) for _ in range(unknowns))
    limit = max_sweeps if max_sweeps is not None else 4 * order + 16
    m = 0
    for _ in range(limit):
        m = min(order, m + 1)
        state = tuple(s.truncate(m) for s in state)
        new = tuple(step(state))
        if m == order and new == state:
            return new
        state = new
    raise SeriesError("fixed-point iteration did not converge")


def _z(order: int, k: int = 1) -> Series:
    return Series.monomial(k, order)


def solve_E_naive(order: int) -> Series:
    """Programs over t, r, l and brackets: E = (3z + z^2 E)*."""

    def step(state):
        (e,) = state
        n = e.order
        return (ps_star(3 * _z(n) + e.shift(2)),)

    return fixed_point(step, order)[0]


def solve_E_canonical(order: int) -> Series:
    """Loop-free runs are minimal words: E = L / (1 - z^2 E L)."""
    big_l = series_L(order)

    def step(state):
        (e,) = state
        lw = big_l.truncate(e.order)
        return (lw * ps_star((e * lw).shift(2)),)

    return fixed_point(step, order)[0]


def solve_E_dead_after(order: int) -> Series:
    """No run between consecutive loops leaves the head bit untouched at shift 0."""
    big_l = series_L(order)
    l00 = series_Lk0(0, order)

    def step(state):
        (e,) = state
        n = e.order
        lw, mid = big_l.truncate(n), (big_l - l00).truncate(n)
        loop = e.shift(2)
        return (lw + lw * ps_star(loop * mid) * loop * lw,)

    return fixed_point(step, order)[0]


def solve_E_dead_inside(order: int) -> tuple[Series, Series]:
    """Dead-after pruning plus no loop right after a head-toggling prefix of a body.

    Returns ``(E, Y)`` where ``Y`` counts loops (brackets included).
    """
    big_l = series_L(order)
    l00 = series_Lk0(0, order)
    l01 = series_Lk1(0, order)

    def step(state):
        e, y = state
        n = e.order
        lw = big_l.truncate(n)
        mid = (big_l - l00).truncate(n)
        first = (big_l - l01).truncate(n)
        chain = ps_star(y * mid) * y * lw
        return (lw + lw * chain, (lw + first * chain).shift(2))

    return fixed_point(step, order, unknowns=2)


GRAMMARS = {
    "e-naive": solve_E_naive,
    "e-canonical": solve_E_canonical,
    "e-dead-after": solve_E_dead_after,
    "e-dead-inside": lambda n: solve_E_dead_inside(n)[0],
}


def poly_eval(p: Sequence[int], x: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def smallest_positive_root(p: Sequence[int], tol: float = 1e-12, grid: int = 10000) -> float:
    """Smallest root of ``p`` in (0, 1), located by a grid scan then bisection."""
    prev_x, prev_v = 0.0, poly_eval(p, 0.0)
    for i in range(1, grid + 1):
        x = i / grid
        v = poly_eval(p, x)
        if v == 0.0:
            return x
        if (prev_v < 0) != (v < 0) and prev_v != 0.0:
            lo, hi, flo = prev_x, x, prev_v
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                fm = poly_eval(p, mid)
                if (fm < 0) == (flo < 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            return 0.5 * (lo + hi)
        prev_x, prev_v = x, v
    raise SeriesError("no sign change in (0, 1)")


def growth_rate(s: Series, window: int = 40) -> tuple[float, float]:
    """Estimate lim c_n**(1/n) from the trailing coefficient ratios.

    Ratios c_{n+1}/c_n are fitted linearly against 1/n and extrapolated to
    n -> oo, which removes the leading algebraic correction n**(beta-1).
    Returns ``(estimate, spread)`` with spread = max - min ratio in the window.
    """
    c = s.coeffs
    n_hi = len(c) - 1
    n_lo = n_hi - window
    if n_lo < 1:
        raise SeriesError("series too short for the requested window")
    if any(c[n] == 0 for n in range(n_lo, n_hi + 1)):
        raise SeriesError("zero coefficient inside the window")
    xs, ys = [], []
    for n in range(n_lo, n_hi):
        ys.append(_ratio(c[n + 1], c[n]))
        xs.append(1.0 / n)
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx if sxx else 0.0
    return my - slope * mx, max(ys) - min(ys)


def _ratio(a: int, b: int) -> float:
    return float(Fraction(a, b))


def naive_asymptotic(n: int) -> float:
    """Leading-order estimate of the number of programs of length n."""
    return 5 ** (n + 1.5) / (2 * math.sqrt(math.pi * n ** 3))


PHI = (1 + math.sqrt(5)) / 2
PLASTIC = (
    (108 + 12 * math.sqrt(69)) ** (1 / 3) + (108 - 12 * math.sqrt(69)) ** (1 / 3)
) / 6
LAMPLIGHTER_CONSTANT = (15 + 7 * math.sqrt(5)) / 5
CANONICAL_RADIUS_POLY = (-1, 3, 7, 0, -11, -9, 2, 7, 3)
