"""Closed-form values at sorted words, and the binomial identities behind them."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Iterator, Sequence

from .words import check_type


def binom(a: int, k: int) -> int:
    """C(a, k), taken to be 0 when a < 0, k < 0 or k > a."""
    if a < 0 or k < 0 or k > a:
        return 0
    return comb(a, k)


def sorted_bracket_formula(m: Sequence[int]) -> int:
    """[1^m_1 2^m_2 ... r^m_r] as the product over i = 2..r-1 of C(n - m_i, m_1 + ... + m_{i-1})."""
    m = check_type(m)
    n = sum(m)
    return prod(binom(n - m[i], sum(m[:i])) for i in range(1, len(m) - 1))


def binomial_identity_sides(n: int, b: int, s: int) -> tuple[int, int]:
    """Both sides of C(n, b) = sum_k C(n-s-k-1, b-k) C(s+k, s), evaluated separately.

    The sides agree whenever n >= s + b + 1.
    """
    if min(n, b, s) < 0:
        raise ValueError("n, b, s must be nonnegative")
    lhs = binom(n, b)
    rhs = sum(binom(n - s - k - 1, b - k) * binom(s + k, s) for k in range(b + 1))
    return lhs, rhs


def scaled_bracket_prediction(base: int, s: int, b: int) -> int:
    """Predicted [u e^(b)] from base = [u e^(0)], where |u| = s."""
    if b < 0 or s < 0:
        raise ValueError("s and b must be nonnegative")
    return binom(s + b, s) * base


def chained_sorted_bracket(m: Sequence[int]) -> int:
    """[sorted word of type m] by repeatedly merging the two largest letters.

    Each step uses the scaling rule with u = the letters below r - 1,
    b = m_r, and finishes at the one-letter word, whose bracket is 1.
    """
    m = list(check_type(m))
    value = 1
    while len(m) > 1:
        b = m.pop()
        s = sum(m[:-1])
        value = scaled_bracket_prediction(value, s, b)
        m[-1] += b
    return value


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts (stars and bars)."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    if parts == 0:
        if total:
            raise ValueError("cannot split a positive total into zero parts")
        yield ()
        return
    if parts < 0:
        raise ValueError("parts must be nonnegative")
    for bars in combinations(range(total + parts - 1), parts - 1):
        edges = (-1,) + bars + (total + parts - 1,)
        yield tuple(b - a - 1 for a, b in zip(edges, edges[1:]))


def parse_params(s: str) -> tuple[Fraction, ...]:
    """Parse ``"1/2,1,3"`` into positive fractions."""
    v = tuple(Fraction(x.strip()) for x in s.split(","))
    if any(x <= 0 for x in v):
        raise ValueError(f"parameters must be positive, got {s!r}")
    return v


def _check_params(m, v) -> tuple[Fraction, ...]:
    v = tuple(Fraction(x) for x in v)
    if len(v) < len(m):
        raise ValueError(f"need {len(m)} parameters, got {len(v)}")
    if any(x <= 0 for x in v):
        raise ValueError("parameters must be positive")
    return v


def _inhom_product(m, v, last_factor) -> Fraction:
    n = sum(m)
    out = Fraction(1)
    for j in range(1, len(m) + 1):
        total = n - sum(m[:j])
        factor = Fraction(0)
        for t in compositions(total, j):
            term = Fraction(1)
            for i in range(j - 1):
                term *= binom(m[i] + t[i] - 1, m[i] - 1) * v[i] ** t[i]
            factor += term * last_factor(m[j - 1], t[j - 1]) * v[j - 1] ** t[j - 1]
        out *= factor
    return out


def inhom_sorted_value(m: Sequence[int], v: Sequence) -> Fraction:
    """Weight of the sorted word in the inhomogeneous chain, v_i = 1/x_i.

    Only defined up to a monomial factor shared with
    :func:`inhom_partition_value`; use the ratio of the two.
    """
    m = check_type(m)
    return _inhom_product(m, _check_params(m, v), lambda mj, tj: 1)


def inhom_partition_value(m: Sequence[int], v: Sequence) -> Fraction:
    """Inhomogeneous normaliser, same monomial factor as :func:`inhom_sorted_value`."""
    m = check_type(m)
    return _inhom_product(m, _check_params(m, v), lambda mj, tj: binom(mj + tj, mj))


def inhom_sorted_probability(m: Sequence[int], x: Sequence) -> Fraction:
    """Stationary probability of the sorted word for jump rates x_1..x_{r-1}."""
    m = check_type(m)
    x = tuple(Fraction(a) for a in x)
    if len(x) < len(m) - 1:
        raise ValueError(f"need {len(m) - 1} rates, got {len(x)}")
    # v_r never enters the formulas with a nonzero exponent
    v = tuple(1 / a for a in x[: len(m) - 1]) + (Fraction(1),)
    return inhom_sorted_value(m, v) / inhom_partition_value(m, v)
