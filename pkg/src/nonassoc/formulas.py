"""Exact evaluators for the explicit counting formulas.

Every function returns a Python ``int``.  Intermediate values are kept as
:class:`fractions.Fraction` where the formula divides, and the final value is
checked to be integral; a non-integral result means a transcription error and
raises :class:`ArithmeticError`.

Functions that implement two equivalent closed forms evaluate both and raise
:class:`ArithmeticError` if they disagree.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "catalan",
    "binom",
    "multinomial",
    "compositions",
    "fibonacci",
    "lucas",
    "motzkin",
    "motzkin_ext",
    "c_d1",
    "adnil_sum",
    "c_d2",
    "special_de",
    "tilde_formula",
    "c3dn",
    "forest_count",
    "forest_nonroot_count",
    "weakcomp_count",
    "weakcomp_enumerate",
    "ck2_power",
    "c22_fib",
]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def binom(a: int, b: int) -> int:
    """Binomial coefficient for any integer ``a``; zero when ``b < 0``.

    For negative ``a`` this is the falling-factorial extension, so for example
    ``binom(-1, 0) == 1``.  Ranges where a formula needs the classical
    "zero outside 0 <= b <= a" behaviour are restricted explicitly by callers.
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    # (-1)^b * C(b - a - 1, b)
    return (-1) ** b * math.comb(b - a - 1, b)


def multinomial(parts: Sequence[int]) -> int:
    total = 0
    out = 1
    for p in parts:
        total += p
        out *= math.comb(total, p)
    return out


def compositions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` (the empty one for ``n == 0``), parts at most ``max_part``."""
    if n < 0:
        return
    top = n if max_part is None else min(n, max_part)
    if n == 0:
        yield ()
        return
    for first in range(1, top + 1):
        for rest in compositions(n - first, max_part):
            yield (first,) + rest


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return int(value)


def _agree(a: int, b: int, what: str) -> int:
    if a != b:
        raise ArithmeticError(f"{what}: the two forms disagree ({a} != {b})")
    return a


def fibonacci(n: int) -> int:
    """Fibonacci numbers with ``F_1 = F_2 = 1``, extended by ``F_{-n} = (-1)^{n+1} F_n``."""
    if n < 0:
        return (-1) ** (-n + 1) * fibonacci(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return 1
    return ((2 * n + 1) * motzkin(n - 1) + 3 * (n - 1) * motzkin(n - 2)) // (n + 2)


def motzkin_ext(m: int) -> Fraction:
    """Motzkin numbers, extended to negative indices by 1/2, -1/2, then 0."""
    if m >= 0:
        return Fraction(motzkin(m))
    return {-1: Fraction(1, 2), -2: Fraction(-1, 2)}.get(m, Fraction(0))


def c_d1(n: int, d: int) -> int:
    """``C^d_n`` as a signed sum over compositions of ``n`` with parts <= (d+1)/2."""
    if n < 1 or d < 1:
        raise ValueError("c_d1 needs n, d >= 1")
    total = 0
    for alpha in compositions(n, (d + 1) // 2):
        term = binom(d - alpha[0], alpha[0] - 1)
        for part in alpha[1:]:
            term *= binom(d + 1 - part, part)
        total += (-1) ** (n - len(alpha)) * term
    return total


def adnil_sum(n: int, d: int) -> int:
    """``C^d_n`` as the sum over ``i`` in Z of (2i(d+2)+1)/(2n+1) * binom(2n+1, n - i(d+2))."""
    if n < 1 or d < 1:
        raise ValueError("adnil_sum needs n, d >= 1")
    step = d + 2
    total = Fraction(0)
    # binom(2n+1, n - i*step) vanishes unless 0 <= n - i*step <= 2n+1
    for i in range(-((n + 1) // step) - 1, n // step + 1):
        low = n - i * step
        if 0 <= low <= 2 * n + 1:
            total += Fraction(2 * i * step + 1, 2 * n + 1) * math.comb(2 * n + 1, low)
    return _as_int(total, f"adnil_sum({n}, {d})")


def _inverse_fib_coeff(m: int, d: int) -> int:
    """[x^m] 1/F_{d+2}(x) as a composition sum."""
    total = 0
    for alpha in compositions(m, (d + 1) // 2):
        term = 1
        for part in alpha:
            term *= binom(d + 1 - part, part)
        total += (-1) ** (m - len(alpha)) * term
    return total


def c_d2(n: int, d: int) -> int:
    """``C^{d,2}_n`` for ``n, d >= 2``."""
    if n < 2 or d < 2:
        raise ValueError("c_d2 needs n, d >= 2")
    extra = sum(2 ** (i - 1) * _inverse_fib_coeff(n - d - i, d) for i in range(1, n - d + 1))
    return c_d1(n, d) + extra


def special_de(n: int, case: int) -> int:
    """Closed forms for ``C^{2,2}_n`` (case 22), ``C^{3,2}_n`` (32) and ``C^{4,2}_n`` (42)."""
    if case == 22:
        if n < 2:
            raise ValueError("case 22 needs n >= 2")
        return _as_int((n + 2) * Fraction(2) ** (n - 3), "C^{2,2}")
    if case == 32:
        if n < 2:
            raise ValueError("case 32 needs n >= 2")
        # ((1+√5)/2)^(2n-2) + ((1-√5)/2)^(2n-2) is the Lucas number L_{2n-2}
        return lucas(2 * n - 2) - 2 ** (n - 2)
    if case == 42:
        if n < 3:
            raise ValueError("case 42 needs n >= 3")
        return 1 + 5 * 3 ** (n - 3) - 2 ** (n - 3)
    raise ValueError(f"unknown case {case}; expected 22, 32 or 42")


def tilde_formula(n: int, d: int, e: int) -> tuple[int, int | None]:
    """Largest class size under k = l = 1, and how many classes attain it.

    The multiplicity is only defined for ``n >= d + e``; below that the
    second entry is ``None``.
    """
    if d < 1 or e < 1:
        raise ValueError("d, e must be >= 1")
    if n < d + e:
        return 1, None
    return catalan(n + 2 - d - e), math.comb(d + e - 2, d - 1)


def _pair_sum(total: int, top_a: int, top_b: int) -> int:
    """sum over i + j = total of binom(top_a - i, i) * binom(top_b - j, j), both in range."""
    return sum(
        math.comb(top_a - i, i) * math.comb(top_b - (total - i), total - i)
        for i in range(0, top_a // 2 + 1)
        if 0 <= total - i <= top_b // 2
    )


def c3dn(n: int, d: int) -> int:
    """``C^d_{3,n}`` as a composition sum with extended Motzkin corrections."""
    if d < 1 or n < 0:
        raise ValueError("c3dn needs d >= 1 and n >= 0")

    def delta(m: int) -> int:
        return 1 if m in (d, d + 1) else 0

    # F_{d+1} has degree floor(d/2), F_{d+2} floor((d+1)/2)
    tail = {
        m: delta(m) + (-1) ** (m - 1) * _pair_sum(m, d + 1, d + 1)
        for m in range(1, d + 2)
    }
    total = Fraction(0)
    for first in range(1, n + 2):
        head = -(
            motzkin_ext(first - d - 2)
            + Fraction(delta(first), 2)
            + (-1) ** first * _pair_sum(first - 1, d, d + 1)
        )
        if head == 0:
            continue
        for rest in compositions(n + 1 - first, d + 1):
            term = head
            for part in rest:
                term *= tail[part]
            total += term
    return _as_int(total, f"c3dn({n}, {d})")


def _bounded_partitions(size: int, max_part: int, max_parts: int) -> Iterator[dict[int, int]]:
    """Multiplicity maps {part: count} of partitions of ``size``, parts <= max_part."""
    def go(remaining: int, part: int, used: int):
        if remaining == 0:
            yield {}
            return
        if part == 0:
            return
        for count in range(min(remaining // part, max_parts - used), -1, -1):
            for rest in go(remaining - count * part, part - 1, used + count):
                yield {part: count, **rest} if count else rest

    yield from go(size, max_part, 0)


def _monomial_at_ones(mult: dict[int, int], length: int) -> int:
    """m_lambda(1^length) for the partition padded with zeros to ``length`` parts."""
    nonzero = sum(mult.values())
    return multinomial([length - nonzero] + list(mult.values()))


def forest_count(n: int, m: int, k: int) -> int:
    """Plane forests with ``m`` components and ``n + m`` nodes, every degree < ``k``."""
    if k < 1 or m < 1 or n < 0:
        raise ValueError("forest_count needs k, m >= 1 and n >= 0")
    size = n + m
    first = Fraction(m, size) * sum(
        (-1) ** j * math.comb(size, j) * binom(2 * n + m - j * k - 1, size - 1)
        for j in range(0, n // k + 1)
    )
    second = Fraction(m, size) * sum(
        _monomial_at_ones(mult, size) for mult in _bounded_partitions(n, k - 1, size)
    )
    return _agree(_as_int(first, "forest_count"), _as_int(second, "forest_count"), "forest_count")


def forest_nonroot_count(n: int, m: int, k: int) -> int:
    """Plane forests with ``m`` components and ``n`` non-root nodes, every degree < ``k``."""
    if k < 1 or m < 1 or n < 1:
        raise ValueError("forest_nonroot_count needs k, m, n >= 1")
    first = Fraction(m, n) * sum(
        (-1) ** j * math.comb(n, j) * binom(2 * n + m - j * k - 1, n + m)
        for j in range(0, (n - 1) // k + 1)
    )
    second = Fraction(0)
    for size in range(0, n + 1):
        weight = Fraction(n - size, n) * binom(m + n - size - 1, n - size)
        if weight:
            second += weight * sum(
                _monomial_at_ones(mult, n) for mult in _bounded_partitions(size, k - 1, n)
            )
    return _agree(
        _as_int(first, "forest_nonroot_count"),
        _as_int(second, "forest_nonroot_count"),
        "forest_nonroot_count",
    )


def weakcomp_enumerate(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` with exactly ``m - 1`` zero parts."""
    zeros = m - 1

    def go(remaining: int, zeros_left: int):
        if remaining == 0 and zeros_left == 0:
            yield ()
        if zeros_left:
            for rest in go(remaining, zeros_left - 1):
                yield (0,) + rest
        for part in range(1, remaining + 1):
            for rest in go(remaining - part, zeros_left):
                yield (part,) + rest

    yield from go(n, zeros)


def weakcomp_count(n: int, m: int) -> int:
    """Weak compositions of ``n`` with ``m - 1`` zero parts, by both closed forms."""
    if m < 1 or n < 0:
        raise ValueError("weakcomp_count needs m >= 1 and n >= 0")
    first = sum(binom(m, i) * binom(n - 1, n - i) * 2 ** (n - i) for i in range(0, min(m, n) + 1))
    second = sum(binom(m + i - 1, i) * binom(n - 1, n - i) for i in range(0, n + 1))
    return _agree(first, second, "weakcomp_count")


def ck2_power(n: int, m: int, k: int) -> int:
    """``[x^{n+m}] C_k^2(x)^m`` by both closed forms."""
    if m < 0 or k < 1 or n < 0:
        raise ValueError("ck2_power needs m >= 0, k >= 1, n >= 0")
    first = Fraction(binom(m + n - 1, n))
    second = Fraction(binom(m + n - 1, n))
    for i in range(1, n):
        outer = binom(m + i - 1, i)
        if not outer:
            continue
        rest = n - i
        first += outer * Fraction(i, rest) * sum(
            (-1) ** j * math.comb(rest, j) * binom(2 * n - i - j * k - 1, n)
            for j in range(0, (rest - 1) // k + 1)
        )
        inner = Fraction(0)
        for size in range(0, rest + 1):
            weight = Fraction(rest - size, rest) * binom(n - size - 1, n - size - i)
            if weight:
                inner += weight * sum(
                    _monomial_at_ones(mult, rest) for mult in _bounded_partitions(size, k - 1, rest)
                )
        second += outer * inner
    return _agree(_as_int(first, "ck2_power"), _as_int(second, "ck2_power"), "ck2_power")


def c22_fib(n: int) -> int:
    """``C^2_{2,n}`` as a binomial sum, checked against ``F_{2n-1}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = sum(binom(n + j - 1, 2 * j) for j in range(0, n + 1))
    return _agree(total, fibonacci(2 * n - 1), "c22_fib")
