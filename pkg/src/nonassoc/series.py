"""Truncated power series over exact rationals, and the generating functions.

Counting series follow the shifted convention ``sum_n c_n x^{n+1}``: the
coefficient of ``x^{n+1}`` counts objects of size ``n``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "TruncatedSeries",
    "Poly",
    "fibonacci_poly",
    "fibonacci_poly_sum",
    "series_sqrt",
    "series_revert",
    "lagrange_check",
    "gf_Cd",
    "gf_Cde",
    "gf_M",
    "gf_Mkd",
    "gf_Ckd",
    "gf_C3d_closed",
    "gf_catalan",
    "power_coeff",
    "counts",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 20


class TruncatedSeries:
    """``c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`` with exact coefficients.

    Binary operations on series of different orders truncate to the smaller
    order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1 - len(cs)))[: order + 1]
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, power: int, order: int = DEFAULT_ORDER, coeff=1) -> TruncatedSeries:
        cs = [0] * (order + 1)
        if power <= order:
            cs[power] = coeff
        return cls(cs)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls([value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"x^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def integers(self) -> list[int]:
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ArithmeticError(f"coefficient of x^{i} is not an integer: {c}")
            out.append(int(c))
        return out

    def _coerce(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Rational)):
            return TruncatedSeries([other], self.order)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}])"

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return TruncatedSeries(c * other for c in self.coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def reciprocal(self) -> TruncatedSeries:
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, len(a)):
            out.append(-inv0 * sum(a[i] * out[n - i] for i in range(1, n + 1)))
        return TruncatedSeries(out)

    def __truediv__(self, other):
        """Divide; a common factor ``x^v`` is cancelled first, losing ``v`` orders."""
        if isinstance(other, (int, Rational)):
            return TruncatedSeries(c / other for c in self.coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        v = other.valuation
        if v is None:
            raise ZeroDivisionError("division by the zero series")
        num, den = self, other
        if v:
            nv = self.valuation
            if nv is not None and nv < v:
                raise ZeroDivisionError(
                    f"divisor vanishes to order {v} but the dividend only to order {nv}"
                )
            num = TruncatedSeries(self.coeffs[v:])
            den = TruncatedSeries(other.coeffs[v:])
        return num * den.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, m: int) -> TruncatedSeries:
        if not isinstance(m, int) or m < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = TruncatedSeries([1], self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = TruncatedSeries([self.coeffs[n]], n)
        for c in reversed(self.coeffs[:n]):
            result = result * inner + c
        return result


class Poly:
    """Integer polynomial with coefficients from the constant term upward."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __add__(self, other) -> Poly:
        if isinstance(other, int):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        if isinstance(other, int):
            other = Poly([other])
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs])
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, value):
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def to_series(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, order)


X_POLY = Poly([0, 1])


@lru_cache(maxsize=None)
def fibonacci_poly(n: int) -> Poly:
    """``F_n(x) = F_{n-1}(x) - x F_{n-2}(x)`` with ``F_0 = 0``, ``F_1 = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = Poly(), Poly([1])
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur - X_POLY * prev
    return cur


def fibonacci_poly_sum(n: int) -> Poly:
    """The binomial-sum form ``sum_i binom(n-1-i, i) (-x)^i`` of ``F_n`` (n >= 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Poly([(-1) ** i * math.comb(n - 1 - i, i) for i in range(0, (n - 1) // 2 + 1)])


def series_sqrt(s: TruncatedSeries) -> TruncatedSeries:
    """The square root with constant term 1 of a series with constant term 1."""
    a = s.coeffs
    if a[0] != 1:
        raise ValueError("series_sqrt needs constant term 1")
    r = [Fraction(1)]
    for n in range(1, len(a)):
        r.append((a[n] - sum(r[i] * r[n - i] for i in range(1, n))) / 2)
    return TruncatedSeries(r)


def series_revert(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``B`` with ``s(B(x)) = x``."""
    a = s.coeffs
    if a[0] or len(a) < 2 or not a[1]:
        raise ValueError("series_revert needs zero constant term and nonzero linear term")
    N = s.order
    b = [Fraction(0)] * (N + 1)
    b[1] = 1 / a[1]
    # powers[j][n] = [x^n] B^j, filled column by column
    powers = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    powers[0][0] = Fraction(1)
    powers[1][1] = b[1]
    for n in range(2, N + 1):
        acc = Fraction(0)
        for j in range(2, n + 1):
            pj = sum(b[i] * powers[j - 1][n - i] for i in range(1, n - j + 2))
            powers[j][n] = pj
            acc += a[j] * pj
        b[n] = -acc / a[1]
        powers[1][n] = b[n]
    return TruncatedSeries(b)


def lagrange_check(A: TruncatedSeries, ell: int, nmax: int) -> bool:
    """Check ``n [x^n] B^ell == ell [x^{n-ell}] (x/A)^n`` for 1 <= n <= nmax, B the inverse of A."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if nmax > A.order:
        raise ValueError("nmax exceeds the truncation order of A")
    B = series_revert(A)
    x_over_a = TruncatedSeries(A.coeffs[1:]).reciprocal()
    B_ell = B ** ell
    for n in range(1, nmax + 1):
        lhs = n * B_ell[n]
        rhs = ell * (x_over_a ** n)[n - ell] if n >= ell else 0
        if lhs != rhs:
            return False
    return True


def _continued(base: TruncatedSeries, steps: int) -> TruncatedSeries:
    x = TruncatedSeries.x(base.order)
    s = base
    for _ in range(steps):
        s = x / (1 - s)
    return s


@lru_cache(maxsize=None)
def gf_Cd(d: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``C^d(x)`` by the continued fraction from ``C^0 = x``, checked against ``x F_{d+1} / F_{d+2}``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    x = TruncatedSeries.x(order)
    cf = _continued(x, d)
    ratio = x * fibonacci_poly(d + 1).to_series(order) / fibonacci_poly(d + 2).to_series(order)
    if cf != ratio:
        raise ArithmeticError(f"continued fraction and Fibonacci ratio disagree for d={d}")
    return cf


@lru_cache(maxsize=None)
def gf_Cde(d: int, e: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``C^{d,e}(x)`` from ``C^{d,e} = x + C^{d-1,e} C^{d,e-1}``.

    A zero index is read as one.  That turns the recurrence into a linear
    equation when ``d`` or ``e`` is 1, solved as ``x / (1 - C^{1,e-1})``;
    ``C^{1,1} = x / (1 - x)`` is the base case.
    """
    if d < 1 or e < 1:
        raise ValueError("d, e must be at least 1")
    x = TruncatedSeries.x(order)
    if d == 1 and e == 1:
        return x / (1 - x)
    if d == 1:
        return x / (1 - gf_Cde(1, e - 1, order))
    if e == 1:
        return x / (1 - gf_Cde(d - 1, 1, order))
    return x + gf_Cde(d - 1, e, order) * gf_Cde(d, e - 1, order)


@lru_cache(maxsize=None)
def gf_M(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generalized Motzkin series ``M_k``, the fixed point of ``M = x (1 + M + ... + M^k)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = TruncatedSeries.x(order)
    m = TruncatedSeries([0], order)
    # each pass fixes one more coefficient
    for _ in range(order + 1):
        poly = TruncatedSeries([1], order)
        power = TruncatedSeries([1], order)
        for _ in range(k):
            power = power * m
            poly = poly + power
        m = x * poly
    return m


@lru_cache(maxsize=None)
def gf_Mkd(k: int, d: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``M_k^d(x)``: ``M_k^1 = M_k`` and ``M_k^{d+1} = x / (1 - M_k^d)``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return _continued(gf_M(k, order), d - 1)


@lru_cache(maxsize=None)
def gf_Ckd(k: int, d: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``C_k^d(x)`` from ``C_k^0 = M_{k-1}`` and ``C_k^{d+1} = x / (1 - C_k^d)``."""
    if k < 1 or d < 0:
        raise ValueError("gf_Ckd needs k >= 1 and d >= 0")
    return _continued(gf_M(k - 1, order), d)


def _motzkin_radical(order: int) -> TruncatedSeries:
    return series_sqrt(TruncatedSeries([1, -2, -3], order))


@lru_cache(maxsize=None)
def gf_C3d_closed(d: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Closed form of ``C_3^d(x)`` in Fibonacci polynomials and ``sqrt(1 - 2x - 3x^2)``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    # d = 0 cancels one power of x between numerator and denominator
    work = order + 1
    x = TruncatedSeries.x(work)
    xd = TruncatedSeries.monomial(d, work)
    f1 = fibonacci_poly(d + 1).to_series(work)
    f2 = fibonacci_poly(d + 2).to_series(work)
    num = 2 * x * f1 * f2 - xd - xd * x + xd * _motzkin_radical(work)
    den = 2 * (f2 * f2 - xd - xd * x)
    return (num / den).truncate(order)


@lru_cache(maxsize=None)
def gf_catalan(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``C(x) = sum C_n x^{n+1}``, the fixed point of ``C = x / (1 - C)``."""
    x = TruncatedSeries.x(order)
    c = TruncatedSeries([0], order)
    for _ in range(order + 1):
        c = x / (1 - c)
    return c


def power_coeff(s: TruncatedSeries, m: int, n: int) -> Fraction:
    """``[x^{n+m}] s^m``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if n + m > s.order:
        raise ValueError(f"x^{n + m} is beyond the truncation order {s.order}")
    return (s ** m)[n + m]


def counts(s: TruncatedSeries) -> list[int]:
    """The counting sequence ``c_0, c_1, ...`` of a shifted series ``sum c_n x^{n+1}``."""
    ints = s.integers()
    if ints[0]:
        raise ValueError("a shifted counting series has zero constant term")
    return ints[1:]
