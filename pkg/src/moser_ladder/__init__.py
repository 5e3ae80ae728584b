"""Exact arithmetic for Bernoulli numbers, power sums, and the gcd
structure of consecutive power sums, plus grid verification sweeps."""

from ._version import __version__
from .bernoulli import (
    BernoulliRecord,
    SquareFreeStatus,
    bernoulli,
    bernoulli_record,
    denominator,
    divides_rational,
    find_square_factor,
    numerator,
    numerator_bound_check,
    numerator_is_prime,
    size_estimate,
    square_free_status,
    vsc_denominator,
)
from .cache import (
    CacheChecksumError,
    CacheError,
    CacheFormatError,
    CacheStore,
    CacheVersionError,
    cache_load,
    cache_store,
    snapshot_bernoulli,
    warm_bernoulli,
)
from .gcdlab import (
    CongruenceVerdict,
    CrossGcdVerdict,
    GcdLadder,
    MinMaxResult,
    PrimeLocalVerdict,
    WindowTooSmallError,
    congruence_check,
    cross_gcd_check,
    divisibility_equivalence,
    gcd_ladder,
    gcd_ratio,
    m4_explore,
    min_max_scan,
    prime_local_congruences,
    residual_factor,
    trivial_gcd_iff,
)
from .powersum import (
    RatioHit,
    crossover,
    em_scan,
    power_sum,
    power_sum_naive,
    ratio_integral,
    running_sums,
    search_ratio,
)
from .sweeps import (
    CHECK_ORDER,
    PROFILES,
    CheckResult,
    GridSpec,
    SweepReport,
    run_sweep,
    verify_all,
)

__all__ = [
    "__version__",
    "BernoulliRecord",
    "SquareFreeStatus",
    "bernoulli",
    "bernoulli_record",
    "denominator",
    "divides_rational",
    "find_square_factor",
    "numerator",
    "numerator_bound_check",
    "numerator_is_prime",
    "size_estimate",
    "square_free_status",
    "vsc_denominator",
    "CacheChecksumError",
    "CacheError",
    "CacheFormatError",
    "CacheStore",
    "CacheVersionError",
    "cache_load",
    "cache_store",
    "snapshot_bernoulli",
    "warm_bernoulli",
    "CongruenceVerdict",
    "CrossGcdVerdict",
    "GcdLadder",
    "MinMaxResult",
    "PrimeLocalVerdict",
    "WindowTooSmallError",
    "congruence_check",
    "cross_gcd_check",
    "divisibility_equivalence",
    "gcd_ladder",
    "gcd_ratio",
    "m4_explore",
    "min_max_scan",
    "prime_local_congruences",
    "residual_factor",
    "trivial_gcd_iff",
    "RatioHit",
    "crossover",
    "em_scan",
    "power_sum",
    "power_sum_naive",
    "ratio_integral",
    "running_sums",
    "search_ratio",
    "CHECK_ORDER",
    "PROFILES",
    "CheckResult",
    "GridSpec",
    "SweepReport",
    "run_sweep",
    "verify_all",
]
