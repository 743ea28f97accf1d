import math
import threading
from typing import Iterator, Tuple

import numpy as np
from loguru import logger

from config.settings import SIEVE_SEGMENT, TRIAL_DIVISION_BOUND
from src.core.errors import EmptyProgressionError, InputRangeError

_small_primes: Tuple[int, ...] = ()
_small_primes_lock = threading.Lock()


def prime_mask(limit: int) -> np.ndarray:
    """Boolean array of length limit + 1 with True exactly at the primes"""
    if limit < 0:
        raise InputRangeError(f"sieve limit must be non-negative, got {limit}")

    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return is_prime


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    return np.flatnonzero(prime_mask(limit)).astype(np.int64)


def small_primes() -> Tuple[int, ...]:
    """Primes below the trial-division bound, computed once per process"""
    global _small_primes
    if not _small_primes:
        with _small_primes_lock:
            if not _small_primes:
                _small_primes = tuple(int(p) for p in primes_up_to(TRIAL_DIVISION_BOUND))
                logger.debug(f"Cached {len(_small_primes)} trial-division primes")
    return _small_primes


def _segmented_ap(limit: int, r: int, m: int) -> Iterator[int]:
    base = [int(p) for p in primes_up_to(math.isqrt(limit))]
    low = 2

    while low <= limit:
        high = min(low + SIEVE_SEGMENT, limit + 1)  # exclusive
        mask = np.ones(high - low, dtype=bool)

        for p in base:
            if p * p >= high:
                break
            start = max(p * p, -(-low // p) * p)
            mask[start - low :: p] = False

        candidates = np.flatnonzero(mask) + low
        if m > 1:
            candidates = candidates[candidates % m == r]
        for c in candidates.tolist():
            yield c

        low = high


def primes_in_ap(limit: int, r: int, m: int) -> Iterator[int]:
    """
    Stream the primes p <= limit with p = r (mod m), ascending.

    Raises EmptyProgressionError when gcd(r, m) > 1; the check happens at
    call time, not on first iteration.
    """
    if m < 1:
        raise InputRangeError(f"modulus must be positive, got {m}")
    r %= m
    if math.gcd(r, m) != 1:
        raise EmptyProgressionError(f"gcd({r}, {m}) != 1: progression {r} mod {m} holds at most one prime")
    if limit < 2:
        return iter(())
    return _segmented_ap(limit, r, m)
