import math
from typing import List, Sequence

import numpy as np

from config.settings import LANDAU_LIMIT
from src.arith.roots import integer_nth_root
from src.arith.sieve import primes_up_to
from src.core.errors import BudgetExceededError, InputRangeError
from src.families.models import LandauRow

# primes above limit // _DENSE have fewer than _DENSE multiples and are cleared in bulk
_DENSE = 64


def landau_mask(limit: int) -> np.ndarray:
    """True at every 1 <= n <= limit all of whose prime factors are 1 (mod 4)"""
    good = np.ones(limit + 1, dtype=bool)
    good[0] = False

    primes = primes_up_to(limit)
    excluded = primes[(primes == 2) | (primes % 4 == 3)]
    cut = limit // _DENSE
    for q in excluded[excluded <= cut].tolist():
        good[q::q] = False

    large = excluded[excluded > cut]
    for j in range(1, _DENSE + 1):
        multiples = large * j
        multiples = multiples[multiples <= limit]
        if multiples.size == 0:
            break
        good[multiples] = False
    return good


def qualifying_cofactors(bound: int) -> List[int]:
    """n <= bound with n = 1 (mod 8) and every prime factor 1 (mod 4)"""
    if bound < 1:
        return []
    good = landau_mask(bound)
    return (np.flatnonzero(good[1::8]) * 8 + 1).tolist()


def check_limits(limits: Sequence[int]) -> None:
    if not limits:
        raise InputRangeError("at least one limit is required")
    if any(n < 2 for n in limits):
        raise InputRangeError("limits must be >= 2")
    if any(a >= b for a, b in zip(limits, limits[1:])):
        raise InputRangeError("limits must be strictly ascending")


def _check_budget(limit: int) -> None:
    if limit > LANDAU_LIMIT:
        raise BudgetExceededError(f"Landau sieve limit {limit} exceeds {LANDAU_LIMIT}")


def landau_count(limit: int, require_1_mod_8: bool = False) -> int:
    """Count n <= limit built from primes 1 (mod 4) only (n = 1 included)"""
    _check_budget(limit)
    if limit < 1:
        return 0
    good = landau_mask(limit)
    return int(good[1::8].sum()) if require_1_mod_8 else int(good.sum())


def mertens_window_sum(limit: int) -> float:
    """Sum of 1/p over primes with limit^(1/2) <= p <= limit^(3/4)"""
    hi = integer_nth_root(limit**3, 4)
    primes = primes_up_to(hi)
    primes = primes[primes * primes >= limit]
    return float(np.sum(1.0 / primes.astype(np.float64)))


def landau_report(limits: Sequence[int]) -> List[LandauRow]:
    """Landau counts, the 1 (mod 8) share and the prime-reciprocal window sum per limit"""
    check_limits(limits)
    _check_budget(limits[-1])

    good = landau_mask(limits[-1])
    counts = np.cumsum(good)
    ones = good & (np.arange(good.size) % 8 == 1)
    counts_1_mod_8 = np.cumsum(ones)

    rows = []
    for limit in limits:
        count, count_1 = int(counts[limit]), int(counts_1_mod_8[limit])
        rows.append(
            LandauRow(
                limit=limit,
                count=count,
                count_1_mod_8=count_1,
                fraction_1_mod_8=count_1 / count,
                normalized=count * math.sqrt(math.log(limit)) / limit,
                mertens_sum=mertens_window_sum(limit),
                mertens_limit=math.log(1.5),
            )
        )
    return rows
