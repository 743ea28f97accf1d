from enum import Enum
from typing import Literal, Tuple, Union

from pydantic import BaseModel, Field, model_validator

from src.arith.factorization import factor_pairs
from src.arith.primality import is_prime
from src.arith.roots import integer_nth_root
from src.core.models import BigInt, ResidueClass, SearchSpec


class Family(str, Enum):
    THM1 = "THM1"  # p^k, k odd, z = 2k (mod 4k)
    THM2 = "THM2"  # (np)^2, 4 | k, positive x, y, z
    THM3 = "THM3"  # (np)^2, k = 2 (mod 4), positive x, y and even z


class FamilyTarget(BaseModel):
    """One exceptional value together with the parameters that produced it"""

    family: Family
    k: int
    p: int
    cofactor_n: int = 1
    target: BigInt
    z_class: ResidueClass
    positivity: bool

    @model_validator(mode="after")
    def _check_family(self) -> "FamilyTarget":
        k, p, n = self.k, self.p, self.cofactor_n
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")

        if self.family is Family.THM1:
            if k < 3 or k % 2 == 0:
                raise ValueError(f"THM1 needs odd k >= 3, got {k}")
            if p % (4 * k) != 1:
                raise ValueError(f"THM1 needs p = 1 (mod {4 * k}), got {p}")
            if n != 1:
                raise ValueError("THM1 has no cofactor")
            expected = (p**k, ResidueClass(r=2 * k, m=4 * k), False)
        else:
            if self.family is Family.THM2 and k % 4 != 0:
                raise ValueError(f"THM2 needs 4 | k, got {k}")
            if self.family is Family.THM3 and (k % 4 != 2 or k < 6):
                raise ValueError(f"THM3 needs k = 2 (mod 4) and k >= 6, got {k}")
            if p % 8 != 7:
                raise ValueError(f"p must be 7 (mod 8), got {p}")
            if n % 8 != 1 or any(q % 4 != 1 for q, _ in factor_pairs(n)):
                raise ValueError(f"cofactor {n} must be 1 (mod 8) with prime factors 1 (mod 4)")
            if n >= p:
                raise ValueError(f"cofactor {n} must be below p = {p}")
            z_class = ResidueClass() if self.family is Family.THM2 else ResidueClass(r=0, m=2)
            expected = ((n * p) ** 2, z_class, True)

        if (self.target, self.z_class, self.positivity) != expected:
            raise ValueError(f"{self.family.value} fields disagree with (k={k}, p={p}, n={n})")
        return self

    def acceptance_window(self) -> Tuple[int, int]:
        """z range the per-z checks cover"""
        if self.family is Family.THM1:
            return -4 * self.p, self.p
        return 1, max(1, integer_nth_root(self.target - 2, self.k))

    def search_spec(self) -> SearchSpec:
        z_min, z_max = self.acceptance_window()
        return SearchSpec(
            n=self.target,
            k=self.k,
            z_class=self.z_class,
            z_min=z_min,
            z_max=z_max,
            require_positive_xyz=self.positivity,
        )


class OddPowerFacts(BaseModel):
    kind: Literal["odd_power"] = "odd_power"
    difference: BigInt  # p - z
    difference_mod_4k: int
    q_valuation: int  # v_q(p - z)
    q_mod_4: int
    q_divides_k: bool
    cofactor_sum_mod_q: int  # (p^k - z^k) / (p - z) mod q
    k_z_pow_mod_q: int  # k z^(k-1) mod q
    total_valuation: int  # v_q(p^k - z^k)


class SizeBound(BaseModel):
    """p^k >= p^4 > (np)^2, the inequality that closes the q = p branch"""

    p_pow_k: BigInt
    np_squared: BigInt
    holds: bool


class EvenPowerFacts(BaseModel):
    kind: Literal["even_power"] = "even_power"
    t: int
    difference: BigInt  # np - z^t
    difference_mod_8: int
    z_even: bool
    q_valuation: int  # v_q(np - z^t)
    q_mod_4: int
    sum: BigInt  # np + z^t
    q_divides_sum: bool
    q_divides_2np: bool
    q_divides_2z_pow_t: bool
    q_equals_p: bool
    size_bound: SizeBound
    total_valuation: int  # v_q(target - z^k)


class Witness(BaseModel):
    family: Family
    k: int
    p: int
    cofactor_n: int
    target: BigInt
    z: int
    q: int
    facts: Union[OddPowerFacts, EvenPowerFacts] = Field(discriminator="kind")


class DensityRow(BaseModel):
    limit: BigInt
    actual_count: int
    predicted: float
    ratio: float
    bound_kind: Literal["asymptotic", "lower-bound-order"]


class LandauRow(BaseModel):
    limit: BigInt
    count: int
    count_1_mod_8: int
    fraction_1_mod_8: float
    normalized: float  # count * (ln N)^(1/2) / N
    mertens_sum: float
    mertens_limit: float


class SweepSummary(BaseModel):
    family: Family
    k: int
    limit: BigInt
    targets: int
    z_checked: int
    representations_found: int
    witnesses_verified: int
    witness_failures: int
    obstructed: int
    undecided: int
    clean: bool
