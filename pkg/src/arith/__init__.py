from src.arith.factorization import (
    Factorization,
    euler_phi,
    factor,
    factor_pairs,
    multiplicity,
    partial_factor,
    valuation,
)
from src.arith.primality import certify, is_prime
from src.arith.roots import integer_nth_root, sqrt_mod
from src.arith.sieve import prime_mask, primes_in_ap, primes_up_to

__all__ = [
    "Factorization",
    "certify",
    "euler_phi",
    "factor",
    "factor_pairs",
    "integer_nth_root",
    "is_prime",
    "multiplicity",
    "partial_factor",
    "prime_mask",
    "primes_in_ap",
    "primes_up_to",
    "sqrt_mod",
    "valuation",
]
