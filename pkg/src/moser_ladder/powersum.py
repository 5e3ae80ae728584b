"""Exact power sums S_k(m) = 1^k + 2^k + ... + (m-1)^k and the searches
built on them: integer consecutive-sum ratios, the S_k(m) = m^k equation,
and the crossover index where S_k(m) first reaches m^k.

The closed form is evaluated Horner-style over a single common denominator
so every intermediate stays an integer; the final division must be exact
and is asserted. The naive summation is kept as an independent oracle.
Searches use incremental running sums only (no Bernoulli numbers at all),
so they are an independent route from the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, lcm
from typing import Iterator

from .bernoulli import bernoulli

__all__ = [
    "power_sum",
    "power_sum_naive",
    "running_sums",
    "ratio_integral",
    "RatioHit",
    "search_ratio",
    "em_residual",
    "em_scan",
    "crossover",
    "s1_s3_identity_check",
]

# k -> (scale, coefficients): S_k(m) = (sum_j c_j m^(k+1-j)) / scale with
# c_j = C(k+1, j) * L * B_j and scale = L * (k+1), L the lcm of the B_j
# denominators. All integers, so Horner needs no rational arithmetic.
_COEFFS: dict[int, tuple[int, tuple[int, ...]]] = {}


def _faulhaber_coeffs(k: int) -> tuple[int, tuple[int, ...]]:
    got = _COEFFS.get(k)
    if got is not None:
        return got
    bs = [bernoulli(j) for j in range(k + 1)]
    scale_l = lcm(*(b.denominator for b in bs))
    coeffs = tuple(
        comb(k + 1, j) * (bs[j].numerator * (scale_l // bs[j].denominator))
        for j in range(k + 1)
    )
    got = (scale_l * (k + 1), coeffs)
    _COEFFS[k] = got
    return got


def _check_km(k: int, m: int) -> None:
    if k < 1:
        raise ValueError(f"power sum needs k >= 1, got {k}")
    if m < 1:
        raise ValueError(f"power sum needs m >= 1, got {m}")


def power_sum(k: int, m: int) -> int:
    """S_k(m) via the Bernoulli closed form. Exact, integer result."""
    _check_km(k, m)
    scale, coeffs = _faulhaber_coeffs(k)
    acc = 0
    for c in coeffs:
        acc = acc * m + c
    total = acc * m
    quot, rem = divmod(total, scale)
    if rem:
        raise ArithmeticError(
            f"faulhaber cancellation failed at k={k}, m={m}: "
            f"remainder {rem} of scale {scale}"
        )
    return quot


def power_sum_naive(k: int, m: int) -> int:
    """S_k(m) by direct summation. Oracle route, no Bernoulli numbers."""
    _check_km(k, m)
    return sum(j**k for j in range(1, m))


def running_sums(k: int, m_max: int) -> Iterator[tuple[int, int]]:
    """Yield (m, S_k(m)) for m = 1..m_max by incremental summation."""
    _check_km(k, max(m_max, 1))
    s = 0
    for m in range(1, m_max + 1):
        yield m, s
        s += m**k


def ratio_integral(k: int, m: int) -> int | None:
    """S_k(m+1) / S_k(m) when that quotient is an integer, else None.

    Both sums are evaluated independently through the closed form.
    m >= 3: at m = 2 the quotient is trivially integral (S_k(2) = 1).
    """
    _check_km(k, m)
    if m < 3:
        raise ValueError(f"ratio_integral needs m >= 3, got {m}")
    s = power_sum(k, m)
    s_next = power_sum(k, m + 1)
    quot, rem = divmod(s_next, s)
    return quot if rem == 0 else None


@dataclass(frozen=True)
class RatioHit:
    """A pair with integral consecutive-sum ratio S_k(m+1)/S_k(m)."""

    k: int
    m: int
    quotient: int


def search_ratio(k_max: int, m_max: int) -> list[RatioHit]:
    """All integral-ratio pairs with 1 <= k <= k_max, 3 <= m <= m_max.

    Incremental scan in (k, m) order. The quotient is 1 + m^k / S_k(m) > 1,
    so integrality forces m^k >= S_k(m); the division is only attempted
    where that holds, which keeps the scan complete without assuming any
    monotonicity of the ratio.
    """
    if k_max < 1 or m_max < 3:
        raise ValueError("search_ratio needs k_max >= 1, m_max >= 3")
    hits = []
    for k in range(1, k_max + 1):
        s = 1 + 2**k  # S_k(3)
        for m in range(3, m_max + 1):
            mk = m**k
            if mk >= s and (s + mk) % s == 0:
                hits.append(RatioHit(k, m, (s + mk) // s))
            s += mk
    return hits


def em_residual(k: int, m: int) -> int:
    """S_k(m) - m^k; zero exactly on solutions of the sum equation."""
    _check_km(k, m)
    if m < 2:
        raise ValueError(f"em_residual needs m >= 2, got {m}")
    return power_sum(k, m) - m**k


def em_scan(k_max: int, m_max: int) -> list[tuple[int, int]]:
    """All (k, m) with S_k(m) = m^k in 1 <= k <= k_max, 2 <= m <= m_max.

    Odd k included deliberately; the scan confirms rather than assumes
    which parities can solve the equation.
    """
    if k_max < 1 or m_max < 2:
        raise ValueError("em_scan needs k_max >= 1, m_max >= 2")
    found = []
    for k in range(1, k_max + 1):
        s = 1  # S_k(2)
        for m in range(2, m_max + 1):
            if s == m**k:
                found.append((k, m))
            s += m**k
    return found


def crossover(k: int) -> int:
    """Smallest m >= 2 with S_k(m) >= m^k.

    Always terminates: S_k(m) grows like m^(k+1)/(k+1) and overtakes m^k.
    """
    if k < 1:
        raise ValueError(f"crossover needs k >= 1, got {k}")
    s = 1
    m = 2
    while s < m**k:
        s += m**k
        m += 1
    return m


def s1_s3_identity_check(m_max: int) -> bool:
    """S_3(m) == S_1(m)^2 for all 1 <= m <= m_max, by running sums."""
    if m_max < 1:
        raise ValueError(f"s1_s3_identity_check needs m_max >= 1, got {m_max}")
    s1 = 0
    s3 = 0
    for m in range(1, m_max + 1):
        if s3 != s1 * s1:
            return False
        s1 += m
        s3 += m**3
    return True
