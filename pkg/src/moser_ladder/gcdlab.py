"""Gcd structure of power sums: the normalized gcd of consecutive sums,
its closed forms in terms of Bernoulli numerators and denominators, the
congruences S_k(m) = B_k m (mod m^r) with their applicability gates, and
the window scan for the extremes of the normalized gcd.

Notation used throughout: S = S_k(m), N = numerator(k), D = denominator(k),
g(m) = gcd(S_k(m), S_k(m+1)) / m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._primes import factorize
from .bernoulli import (
    SquareFreeStatus,
    bernoulli,
    denominator,
    divides_rational,
    numerator,
    square_free_status,
)
from .powersum import power_sum

__all__ = [
    "gcd_ratio",
    "gcd_with_power",
    "gcd_with_m",
    "gcd_with_m2",
    "gcd_with_m3",
    "predicted_gcd_with_m",
    "predicted_gcd_with_m2",
    "predicted_gcd_with_m3",
    "consecutive_gcd_matches_power",
    "GcdLadder",
    "gcd_ladder",
    "residual_factor",
    "m4_explore",
    "CongruenceVerdict",
    "congruence_check",
    "PrimeLocalVerdict",
    "prime_local_congruences",
    "divisibility_equivalence",
    "trivial_gcd_iff",
    "WindowTooSmallError",
    "MinMaxResult",
    "min_max_scan",
    "CrossGcdVerdict",
    "CROSS_GCD_OFFSETS",
    "cross_gcd_check",
]


def _require_even(k: int) -> None:
    if k < 2 or k % 2:
        raise ValueError(f"defined for even k >= 2 only, got {k}")


def gcd_ratio(k: int, m: int) -> Fraction:
    """g(m) = gcd(S_k(m), S_k(m+1)) / m, both sums evaluated directly.

    Even k >= 2, m >= 2. Always a positive rational whose denominator
    divides m.
    """
    _require_even(k)
    if m < 2:
        raise ValueError(f"gcd_ratio needs m >= 2, got {m}")
    return Fraction(gcd(power_sum(k, m), power_sum(k, m + 1)), m)


def gcd_with_power(k: int, m: int, r: int) -> int:
    """gcd(S_k(m), m^r)."""
    _require_even(k)
    if m < 1 or r < 1:
        raise ValueError(f"gcd_with_power needs m >= 1, r >= 1")
    return gcd(power_sum(k, m), m**r)


def gcd_with_m(k: int, m: int) -> int:
    return gcd_with_power(k, m, 1)


def gcd_with_m2(k: int, m: int) -> Fraction:
    """gcd(S_k(m), m^2) / m as an exact rational."""
    return Fraction(gcd_with_power(k, m, 2), m)


def gcd_with_m3(k: int, m: int) -> Fraction:
    """gcd(S_k(m), m^3) / m as an exact rational."""
    return Fraction(gcd_with_power(k, m, 3), m)


def predicted_gcd_with_m(k: int, m: int) -> int:
    """Closed form m / gcd(D, m) for gcd(S, m)."""
    return m // gcd(denominator(k), m)


def predicted_gcd_with_m2(k: int, m: int) -> int:
    """Closed form m * gcd(N, m) / gcd(D, m) for gcd(S, m^2)."""
    return (m // gcd(denominator(k), m)) * gcd(abs(numerator(k)), m)


def predicted_gcd_with_m3(k: int, m: int) -> int:
    """Closed form m * gcd(N, m^2) / gcd(D, m) for gcd(S, m^3)."""
    return (m // gcd(denominator(k), m)) * gcd(abs(numerator(k)), m * m)


def consecutive_gcd_matches_power(k: int, m: int) -> bool:
    """gcd(S_k(m), S_k(m+1)) == gcd(S_k(m), m^k), both sides direct.

    The two sides agree because S_k(m+1) - S_k(m) = m^k; computing both
    keeps the telescoping step checked rather than assumed.
    """
    _require_even(k)
    if m < 2:
        raise ValueError(f"needs m >= 2, got {m}")
    s = power_sum(k, m)
    return gcd(s, power_sum(k, m + 1)) == gcd(s, m**k)


def _strip_common_primes(n: int, basis: int) -> int:
    """Divide out of n every prime it shares with basis (any multiplicity)."""
    g = gcd(n, basis)
    while g > 1:
        n //= g
        g = gcd(n, basis)
    return n


@dataclass(frozen=True)
class GcdLadder:
    """Observed gcd(S, m^r) for r in 1, 2, 3, 4, k next to the closed-form
    predictions that exist (r <= 3). The m^4 and m^k columns have no closed
    form; the m^k column instead carries the residual-factor constraint
    e = gcd(S, m^k) / gcd(S, m^3), every prime of which must divide N."""

    k: int
    m: int
    observed_m1: int
    observed_m2: int
    observed_m3: int
    observed_m4: int
    observed_mk: int
    predicted_m1: int
    predicted_m2: int
    predicted_m3: int
    residual: int
    residual_primes_divide_numerator: bool
    consecutive_matches: bool

    @property
    def matches(self) -> tuple[bool, bool, bool]:
        return (
            self.observed_m1 == self.predicted_m1,
            self.observed_m2 == self.predicted_m2,
            self.observed_m3 == self.predicted_m3,
        )

    @property
    def monotone(self) -> bool:
        # the m^k rung extends the chain only once k >= 4
        tail = self.observed_mk % self.observed_m4 == 0 if self.k >= 4 else True
        return (
            self.observed_m2 % self.observed_m1 == 0
            and self.observed_m3 % self.observed_m2 == 0
            and self.observed_m4 % self.observed_m3 == 0
            and tail
        )

    @property
    def ok(self) -> bool:
        return (
            all(self.matches)
            and self.monotone
            and self.residual_primes_divide_numerator
            and self.consecutive_matches
        )


def _ladder_from_sums(k: int, m: int, s: int, s_next: int) -> GcdLadder:
    n_abs = abs(numerator(k))
    d = denominator(k)
    g1 = gcd(s, m)
    g2 = gcd(s, m * m)
    g3 = gcd(s, m**3)
    g4 = gcd(s, m**4)
    gk = gcd(s, m**k)
    if k >= 4:
        e, rem = divmod(gk, g3)
        assert rem == 0  # m^3 | m^k, so the gcds nest
    else:
        e = 1  # k = 2: m^k divides m^3, nothing extends past that rung
    return GcdLadder(
        k=k,
        m=m,
        observed_m1=g1,
        observed_m2=g2,
        observed_m3=g3,
        observed_m4=g4,
        observed_mk=gk,
        predicted_m1=m // gcd(d, m),
        predicted_m2=(m // gcd(d, m)) * gcd(n_abs, m),
        predicted_m3=(m // gcd(d, m)) * gcd(n_abs, m * m),
        residual=e,
        residual_primes_divide_numerator=_strip_common_primes(e, n_abs) == 1,
        consecutive_matches=gcd(s, s_next) == gk,
    )


def gcd_ladder(k: int, m: int) -> GcdLadder:
    """Full ladder record at one (k, m); sums from the closed form."""
    _require_even(k)
    if m < 2:
        raise ValueError(f"gcd_ladder needs m >= 2, got {m}")
    return _ladder_from_sums(k, m, power_sum(k, m), power_sum(k, m + 1))


def residual_factor(k: int, m: int) -> tuple[int, bool]:
    """e = gcd(S, m^k) / gcd(S, m^3) and whether all its primes divide N."""
    ladder = gcd_ladder(k, m)
    return ladder.residual, ladder.residual_primes_divide_numerator


def m4_explore(k: int, m_range) -> list[GcdLadder]:
    """Ladder rows over an m range; the m^4 column is exploratory output."""
    return [gcd_ladder(k, m) for m in m_range]


@dataclass(frozen=True)
class CongruenceVerdict:
    """Outcome of S_k(m) = B_k m (mod m^r) in the p-adic sense.

    `applicable` records whether the precondition for this r was checked
    and held; `holds` is the observed truth of the congruence either way,
    so vacuous cells stay visible.
    """

    k: int
    m: int
    r: int
    applicable: bool
    holds: bool


def _congruence_diff(k: int, m: int) -> Fraction:
    return Fraction(power_sum(k, m)) - bernoulli(k) * m


def congruence_check(
    k: int, m: int, r: int, diff: Fraction | None = None
) -> CongruenceVerdict:
    """Check S_k(m) = B_k m (mod m^r) for r in 1, 2, 3.

    Applicability gates: r = 1 needs k >= 2 only; r = 2 needs k >= 4 and
    gcd(D, m) = 1; r = 3 needs k >= 6 and m | B_k (p-adically).
    `diff` accepts a precomputed S_k(m) - B_k m (sweeps stream their sums).
    """
    _require_even(k)
    if m < 1:
        raise ValueError(f"congruence_check needs m >= 1, got {m}")
    if r not in (1, 2, 3):
        raise ValueError(f"congruence_check supports r in 1..3, got {r}")
    if r == 1:
        applicable = True
    elif r == 2:
        applicable = k >= 4 and gcd(denominator(k), m) == 1
    else:
        applicable = k >= 6 and divides_rational(m, 1, bernoulli(k))
    if diff is None:
        diff = _congruence_diff(k, m)
    holds = divides_rational(m, r, diff)
    return CongruenceVerdict(k, m, r, applicable, holds)


@dataclass(frozen=True)
class PrimeLocalVerdict:
    """Prime-local congruence at p with p^mult || m.

    level 2: S_k(m) = B_k m (mod p^(2 mult)) when k >= 4 and p does not
    divide D. level 3: mod p^(3 mult) when k >= 6 and p | B_k.
    """

    k: int
    m: int
    p: int
    mult: int
    level: int
    applicable: bool
    holds: bool


def prime_local_congruences(
    k: int, m: int, diff: Fraction | None = None
) -> list[PrimeLocalVerdict]:
    """Level 2 and 3 prime-local verdicts for every prime power in m."""
    _require_even(k)
    if m < 2:
        raise ValueError(f"prime_local_congruences needs m >= 2, got {m}")
    if diff is None:
        diff = _congruence_diff(k, m)
    d = denominator(k)
    b = bernoulli(k)
    out = []
    for p, mult in factorize(m).items():
        applicable2 = k >= 4 and d % p != 0
        holds2 = divides_rational(p, 2 * mult, diff)
        out.append(PrimeLocalVerdict(k, m, p, mult, 2, applicable2, holds2))
        applicable3 = k >= 6 and divides_rational(p, 1, b)
        holds3 = divides_rational(p, 3 * mult, diff)
        out.append(PrimeLocalVerdict(k, m, p, mult, 3, applicable3, holds3))
    return out


def divisibility_equivalence(k: int, m: int, r: int) -> bool:
    """m^(r+1) | S_k(m) if and only if m^r | B_k, for r in 1, 2.

    Both sides evaluated independently: integer divisibility of the sum
    versus p-adic divisibility of the Bernoulli number.
    """
    _require_even(k)
    if m < 2:
        raise ValueError(f"divisibility_equivalence needs m >= 2, got {m}")
    if r not in (1, 2):
        raise ValueError(f"divisibility_equivalence supports r in 1..2, got {r}")
    lhs = power_sum(k, m) % m ** (r + 1) == 0
    rhs = divides_rational(m, r, bernoulli(k))
    return lhs == rhs


def trivial_gcd_iff(k: int, m: int) -> bool:
    """g(m) = 1 if and only if gcd(D N, m) = 1, g computed by definition."""
    _require_even(k)
    if m < 2:
        raise ValueError(f"trivial_gcd_iff needs m >= 2, got {m}")
    g = gcd_ratio(k, m)
    coprime = gcd(denominator(k) * abs(numerator(k)), m) == 1
    return (g == 1) == coprime


class WindowTooSmallError(ValueError):
    """min_max_scan window must contain both witnesses D and |N|."""


@dataclass(frozen=True)
class MinMaxResult:
    """Extremes of g over 2 <= m <= m_max.

    The window must contain both witnesses D and |N|. Every m up to
    prefix_limit is evaluated by definition; both witnesses are evaluated
    by definition regardless of size. On the rest of the window the
    square-free closed form g(m) = gcd(N, m)/gcd(D, m) bounds g between
    1/D and |N| pointwise, so the witness values are the exact extremes
    whenever `certified` is set (no square factor found below trial_bound;
    square-freeness above the bound is the closed form's hypothesis, taken
    as verified). The minimum needs no square-free input: g(m) >= 1/gcd(D, m)
    unconditionally, so min_value is exact whenever the witness attains it.
    `max_is_exact` is the certified flag; when false, max_value is only a
    lower bound for the true supremum and the scan reports, never asserts.
    """

    k: int
    m_max: int
    prefix_limit: int
    trial_bound: int
    square_free: SquareFreeStatus
    certified: bool
    min_value: Fraction
    min_witness: int
    max_value: Fraction
    max_witness: int
    max_is_exact: bool
    product: Fraction
    product_matches_abs_b: bool
    prefix_min: Fraction
    prefix_min_at: int
    prefix_max: Fraction
    prefix_max_at: int
    prefix_closed_form_agrees: bool | None


def min_max_scan(
    k: int,
    m_max: int,
    prefix_limit: int = 2048,
    trial_bound: int = 10_000,
) -> MinMaxResult:
    """Scan g over [2, m_max] for its extremes and their smallest witnesses.

    Raises WindowTooSmallError unless m_max >= max(D, |N|): a window that
    excludes a witness cannot certify an extreme over all m >= 2.
    """
    _require_even(k)
    n_abs = abs(numerator(k))
    d = denominator(k)
    if m_max < max(d, n_abs):
        raise WindowTooSmallError(
            f"k={k}: window m_max={m_max} must contain witnesses "
            f"D={d} and |N|={n_abs}"
        )
    status = square_free_status(k, trial_bound)
    certified = status.kind in ("trivial", "no-square-factor-below")

    # brute-force prefix by definition, cross-checked against the closed
    # form where the closed form is certified to apply
    limit = min(m_max, max(prefix_limit, 2))
    prefix_min = prefix_max = None
    prefix_min_at = prefix_max_at = 0
    closed_agrees: bool | None = True if certified else None
    s = 1  # S_k(2)
    for m in range(2, limit + 1):
        s_next = s + m**k
        g = Fraction(gcd(s, s_next), m)
        if prefix_min is None or g < prefix_min:
            prefix_min, prefix_min_at = g, m
        if prefix_max is None or g > prefix_max:
            prefix_max, prefix_max_at = g, m
        if certified and g != Fraction(gcd(n_abs, m), gcd(d, m)):
            closed_agrees = False
        s = s_next
    assert prefix_min is not None and prefix_max is not None

    # witnesses by definition, any size (cost is polynomial in log m)
    min_witness = d
    min_value = gcd_ratio(k, d)
    if n_abs >= 2:
        max_witness = n_abs
        max_value = gcd_ratio(k, n_abs)
    else:
        # |N| = 1: the maximum 1 is attained at every m coprime to D N,
        # first inside the prefix
        max_witness = prefix_max_at
        max_value = prefix_max

    product = min_value * max_value
    b = bernoulli(k)
    return MinMaxResult(
        k=k,
        m_max=m_max,
        prefix_limit=limit,
        trial_bound=trial_bound,
        square_free=status,
        certified=certified,
        min_value=min_value,
        min_witness=min_witness,
        max_value=max_value,
        max_witness=max_witness,
        max_is_exact=certified,
        product=product,
        product_matches_abs_b=product == abs(b),
        prefix_min=prefix_min,
        prefix_min_at=prefix_min_at,
        prefix_max=prefix_max,
        prefix_max_at=prefix_max_at,
        prefix_closed_form_agrees=closed_agrees,
    )


# offsets s for the numerator/denominator cross gcd; these are the even s
# whose B_s numerator is a unit or a single prime small enough that the
# divisibility statement has content at desk scale
CROSS_GCD_OFFSETS = (2, 4, 6, 8, 10, 14)


@dataclass(frozen=True)
class CrossGcdVerdict:
    """C = gcd(|N_k|, D_(k-s)) and the structure claimed for it:
    C | k; if C > 1 then C is square-free and each of its primes divides
    neither D_s nor the numerator of B_k / k in lowest terms."""

    k: int
    s: int
    c: int
    divides_k: bool
    c_square_free: bool
    prime_checks: tuple[tuple[int, bool, bool], ...]
    reading: str = "numerator of B_k/k in lowest terms"

    @property
    def ok(self) -> bool:
        return (
            self.divides_k
            and self.c_square_free
            and all(a and b for _, a, b in self.prime_checks)
        )


def cross_gcd_check(k: int, s: int) -> CrossGcdVerdict:
    """Verify the cross-index gcd structure at one (k, s)."""
    _require_even(k)
    if s not in CROSS_GCD_OFFSETS:
        raise ValueError(f"s must be one of {CROSS_GCD_OFFSETS}, got {s}")
    if k - s < 2:
        raise ValueError(f"needs k - s >= 2, got k={k}, s={s}")
    c = gcd(abs(numerator(k)), denominator(k - s))
    divides_k = k % c == 0
    if c == 1:
        return CrossGcdVerdict(k, s, c, divides_k, True, ())
    facs = factorize(c)
    c_square_free = all(e == 1 for e in facs.values())
    d_s = denominator(s)
    b_over_k = bernoulli(k) / k
    checks = tuple(
        (p, d_s % p != 0, b_over_k.numerator % p != 0) for p in facs
    )
    return CrossGcdVerdict(k, s, c, divides_k, c_square_free, checks)
