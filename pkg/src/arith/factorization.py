import math
import random
from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, model_validator

from config.settings import PRIMALITY_RHO_STEPS
from src.arith.primality import check_range, is_prime
from src.arith.sieve import small_primes
from src.core.errors import InputRangeError, NotPrimeError


class Factorization(BaseModel):
    """Prime factorization of a positive integer below 2^127"""

    value: int
    factors: List[Tuple[int, int]]

    @model_validator(mode="after")
    def _check_invariants(self) -> "Factorization":
        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be strictly increasing")
            if exponent < 1:
                raise ValueError(f"exponent of {prime} must be >= 1")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            product *= prime**exponent
            previous = prime
        if product != self.value:
            raise ValueError(f"factors recombine to {product}, not {self.value}")
        return self

    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def exponent(self, prime: int) -> int:
        return dict(self.factors).get(prime, 0)


def _brent(n: int, rng: random.Random, max_steps: Optional[int] = None) -> Optional[int]:
    """
    Pollard rho with Brent's cycle detection; returns a proper divisor of composite n,
    or None once more than max_steps iterations have run
    """
    steps = 0
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        batch = 128
        g = r = q = 1

        while g == 1:
            if max_steps is not None and steps > max_steps:
                return None
            steps += 2 * r
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
            r <<= 1

        if g == n:
            # backtrack one step at a time from the last saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)

        if g != n:
            return g


def _split(n: int, found: Dict[int, int], max_steps: Optional[int] = None) -> int:
    """Split n into primes counted in found; returns the product of pieces rho gave up on"""
    rng = random.Random(n)
    stack = [n]
    unsplit = 1
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] += 1
            continue
        d = _brent(m, rng, max_steps)
        if d is None:
            unsplit *= m
            continue
        stack.extend((d, m // d))
    return unsplit


def _trial_divide(n: int, found: Dict[int, int]) -> int:
    rest = n
    for p in small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = multiplicity(rest, p)
            rest //= p**e
            found[p] = e
    return rest


def factor_pairs(n: int) -> List[Tuple[int, int]]:
    """(prime, exponent) pairs of n in increasing prime order, without model validation"""
    check_range(n)
    if n == 0:
        raise InputRangeError("cannot factor zero")

    found: Dict[int, int] = defaultdict(int)
    rest = _trial_divide(n, found)
    if rest > 1:
        _split(rest, found)
    return sorted(found.items())


def partial_factor(n: int, max_steps: int = PRIMALITY_RHO_STEPS) -> Tuple[List[Tuple[int, int]], int]:
    """Prime factors of n that a bounded rho effort finds, and the cofactor left unsplit"""
    check_range(n)
    if n == 0:
        raise InputRangeError("cannot factor zero")

    found: Dict[int, int] = defaultdict(int)
    rest = _trial_divide(n, found)
    unsplit = _split(rest, found, max_steps) if rest > 1 else 1
    return sorted(found.items()), unsplit


def factor(n: int) -> Factorization:
    """Trial division to 10^5, then Pollard-Brent with certified prime cofactors"""
    return Factorization(value=n, factors=factor_pairs(n))


def multiplicity(n: int, q: int) -> int:
    """Exponent of q in n != 0, for any q >= 2; no primality check"""
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


def valuation(n: int, q: int) -> int:
    """Largest e with q^e | n"""
    if not is_prime(q):
        raise NotPrimeError(f"valuation base {q} is not prime")
    if n < 1:
        raise InputRangeError(f"valuation needs n >= 1, got {n}")
    return multiplicity(n, q)


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factor_pairs(n):
        out = out // p * (p - 1)
    return out
