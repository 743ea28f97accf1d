"""
Per-z certificates of non-representability.

Each witness names a prime q = 3 (mod 4) dividing the linear factor
(p - z, or np - z^t) to an odd power, together with the divisibility facts
showing q cannot also divide the other factor. verify_witness re-derives
every fact from scratch.
"""
from typing import Optional, Tuple

from loguru import logger

from src.arith.factorization import factor, factor_pairs, valuation
from src.arith.primality import certify
from src.core.errors import TheoremViolationError, WitnessDomainError
from src.core.two_squares import is_sum_of_two_squares
from src.families.models import EvenPowerFacts, Family, FamilyTarget, OddPowerFacts, SizeBound, Witness


def _odd_prime_3_mod_4(value: int) -> Optional[Tuple[int, int]]:
    """Smallest q = 3 (mod 4) dividing value to an odd power, with its exponent"""
    return next(((q, e) for q, e in factor_pairs(value) if q % 4 == 3 and e % 2 == 1), None)


def _alarm(target: FamilyTarget, z: int, reason: str) -> TheoremViolationError:
    message = f"{target.family.value} target {target.target} (k={target.k}) at z={z}: {reason}"
    logger.error(f"Theorem violation: {message}")
    return TheoremViolationError(message)


def _odd_power_witness(target: FamilyTarget, z: int) -> Witness:
    p, k = target.p, target.k
    if z >= p:
        raise WitnessDomainError(f"THM1 witnesses need z < p = {p}, got {z}")

    difference = p - z
    found = _odd_prime_3_mod_4(difference)
    if found is None:
        raise _alarm(target, z, f"p - z = {difference} has no prime 3 (mod 4) to an odd power")
    q, e = found

    rest = p**k - z**k
    facts = OddPowerFacts(
        difference=difference,
        difference_mod_4k=difference % (4 * k),
        q_valuation=e,
        q_mod_4=q % 4,
        q_divides_k=k % q == 0,
        cofactor_sum_mod_q=(rest // difference) % q,
        k_z_pow_mod_q=k * pow(z, k - 1, q) % q,
        total_valuation=valuation(rest, q),
    )
    return Witness(family=target.family, k=k, p=p, cofactor_n=1, target=target.target, z=z, q=q, facts=facts)


def _even_power_witness(target: FamilyTarget, z: int) -> Witness:
    p, k, n = target.p, target.k, target.cofactor_n
    if z < 1 or z**k >= target.target:
        raise WitnessDomainError(f"{target.family.value} witnesses need 1 <= z and z^k < {target.target}, got z={z}")

    t = k // 2
    np_ = n * p
    difference = np_ - z**t
    found = _odd_prime_3_mod_4(difference)
    if found is None:
        raise _alarm(target, z, f"np - z^t = {difference} has no prime 3 (mod 4) to an odd power")
    q, e = found

    total = np_ + z**t
    facts = EvenPowerFacts(
        t=t,
        difference=difference,
        difference_mod_8=difference % 8,
        z_even=z % 2 == 0,
        q_valuation=e,
        q_mod_4=q % 4,
        sum=total,
        q_divides_sum=total % q == 0,
        q_divides_2np=2 * np_ % q == 0,
        q_divides_2z_pow_t=2 * z**t % q == 0,
        q_equals_p=q == p,
        size_bound=SizeBound(p_pow_k=p**k, np_squared=np_**2, holds=p**k > np_**2),
        total_valuation=valuation(target.target - z**k, q),
    )
    return Witness(family=target.family, k=k, p=p, cofactor_n=n, target=target.target, z=z, q=q, facts=facts)


def witness(target: FamilyTarget, z: int) -> Witness:
    """Certificate that target - z^k admits no (admissible) sum of two squares"""
    if not target.z_class.contains(z):
        raise WitnessDomainError(f"z = {z} is not in {target.z_class}")

    if target.family is Family.THM1:
        w = _odd_power_witness(target, z)
    else:
        w = _even_power_witness(target, z)

    if not verify_witness(target, w):
        raise _alarm(target, z, f"witness with q = {w.q} failed re-verification")
    return w


def verify_witness(target: FamilyTarget, w: Witness) -> bool:
    """Recompute every recorded fact with an independent factorization"""
    k, z, q = target.k, w.z, w.q
    if (w.family, w.k, w.p, w.cofactor_n, w.target) != (
        target.family,
        k,
        target.p,
        target.cofactor_n,
        target.target,
    ):
        return False
    if not (target.z_class.contains(z) and certify(q) == (True, True) and q % 4 == 3):
        return False

    rest = target.target - z**k
    if rest < 0 or is_sum_of_two_squares(rest):
        return False
    total_valuation = factor(rest).exponent(q)

    f = w.facts
    if isinstance(f, OddPowerFacts):
        p = target.p
        difference = p - z
        cofactor_mod_q = (rest // difference) % q
        return (
            f.difference == difference
            and f.difference_mod_4k == difference % (4 * k) == 2 * k + 1
            and f.q_valuation == factor(difference).exponent(q)
            and f.q_valuation % 2 == 1
            and f.q_mod_4 == 3
            and not f.q_divides_k
            and k % q != 0
            and f.cofactor_sum_mod_q == cofactor_mod_q == k * pow(z, k - 1, q) % q == f.k_z_pow_mod_q
            and cofactor_mod_q != 0
            and f.total_valuation == total_valuation == f.q_valuation
        )

    np_ = target.cofactor_n * target.p
    difference = np_ - z ** f.t
    parity_ok = difference % 4 == 3 if z % 2 == 0 else difference % 8 == 6
    return (
        f.t * 2 == k
        and f.difference == difference
        and f.difference_mod_8 == difference % 8
        and f.z_even == (z % 2 == 0)
        and parity_ok
        and f.q_valuation == factor(difference).exponent(q)
        and f.q_valuation % 2 == 1
        and f.q_mod_4 == 3
        and f.sum == np_ + z ** f.t
        and not f.q_divides_sum
        and f.q_divides_2np == (2 * np_ % q == 0)
        and f.q_divides_2z_pow_t == (2 * z ** f.t % q == 0)
        and f.q_equals_p == (q == target.p)
        and f.size_bound.holds
        and f.size_bound.p_pow_k == target.p**k
        and f.size_bound.np_squared == np_**2
        and f.total_valuation == total_valuation == f.q_valuation
    )
