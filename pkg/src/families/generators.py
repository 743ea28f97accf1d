from bisect import bisect_right
from math import isqrt
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from src.arith.factorization import factor_pairs
from src.arith.primality import is_prime
from src.arith.roots import integer_nth_root
from src.arith.sieve import primes_in_ap
from src.core.errors import FamilyParameterError
from src.core.models import ResidueClass
from src.families.landau import qualifying_cofactors
from src.families.models import Family, FamilyTarget


def make_target(family: Family, k: int, p: int, cofactor_n: int = 1) -> FamilyTarget:
    """Build a FamilyTarget from its parameters, checking every family invariant"""
    if family is Family.THM1:
        fields = dict(target=p**k, z_class=ResidueClass(r=(2 * k) % (4 * k), m=4 * k), positivity=False)
    else:
        z_class = ResidueClass() if family is Family.THM2 else ResidueClass(r=0, m=2)
        fields = dict(target=(cofactor_n * p) ** 2, z_class=z_class, positivity=True)

    try:
        return FamilyTarget(family=family, k=k, p=p, cofactor_n=cofactor_n, **fields)
    except ValidationError as e:
        raise FamilyParameterError(e.errors()[0]["msg"]) from e


def generate_thm1(k: int, limit: int) -> List[FamilyTarget]:
    """p^k <= limit for every prime p = 1 (mod 4k), ascending"""
    if k < 3 or k % 2 == 0:
        raise FamilyParameterError(f"THM1 needs odd k >= 3, got {k}")
    if limit < 1:
        return []

    p_max = integer_nth_root(limit, k)
    targets = [make_target(Family.THM1, k, p) for p in primes_in_ap(p_max, 1, 4 * k)]
    logger.info(f"THM1 k={k}: {len(targets)} targets up to {limit}")
    return targets


def _square_family(family: Family, k: int, limit: int) -> List[FamilyTarget]:
    # (np)^2 <= limit with n < p means np <= B and n < sqrt(B)
    bound = isqrt(limit) if limit >= 1 else 0
    primes = list(primes_in_ap(bound, 7, 8))

    targets = []
    for n in qualifying_cofactors(isqrt(bound)):
        lo, hi = bisect_right(primes, n), bisect_right(primes, bound // n)
        targets.extend(make_target(family, k, p, n) for p in primes[lo:hi])

    targets.sort(key=lambda t: t.target)
    logger.info(f"{family.value} k={k}: {len(targets)} targets up to {limit}")
    return targets


def generate_thm2(k: int, limit: int) -> List[FamilyTarget]:
    if k % 4 != 0 or k < 4:
        raise FamilyParameterError(f"THM2 needs 4 | k, got {k}")
    return _square_family(Family.THM2, k, limit)


def generate_thm3(k: int, limit: int) -> List[FamilyTarget]:
    if k % 4 != 2 or k < 6:
        raise FamilyParameterError(f"THM3 needs k = 2 (mod 4) and k >= 6, got {k}")
    return _square_family(Family.THM3, k, limit)


_GENERATORS = {
    Family.THM1: generate_thm1,
    Family.THM2: generate_thm2,
    Family.THM3: generate_thm3,
}


def generate(family: Family, k: int, limit: int) -> List[FamilyTarget]:
    return _GENERATORS[family](k, limit)


def match_family(n: int, k: int, z_class: ResidueClass) -> Optional[FamilyTarget]:
    """The family target (n, k, z_class) describes, if any"""
    if k >= 3 and k % 2 == 1 and z_class == ResidueClass(r=2 * k, m=4 * k):
        p = integer_nth_root(n, k)
        if p**k == n and is_prime(p):
            try:
                return make_target(Family.THM1, k, p)
            except FamilyParameterError:
                return None
        return None

    if k % 4 == 0 and z_class == ResidueClass():
        family = Family.THM2
    elif k % 4 == 2 and k >= 6 and z_class == ResidueClass(r=0, m=2):
        family = Family.THM3
    else:
        return None

    root = isqrt(n)
    if root < 2 or root * root != n:
        return None
    p = factor_pairs(root)[-1][0]
    try:
        return make_target(family, k, p, root // p)
    except FamilyParameterError:
        return None
