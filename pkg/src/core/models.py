from enum import Enum
from typing import Annotated, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, ValidationError, model_validator

from src.arith.roots import integer_nth_root
from src.core.errors import MalformedSpecError

# Values that may exceed 64 bits travel as decimal strings in JSON
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]

M = TypeVar("M", bound=BaseModel)


def build(model: Type[M], **fields) -> M:
    """Construct a model, surfacing validation failures as MalformedSpecError"""
    try:
        return model(**fields)
    except ValidationError as e:
        raise MalformedSpecError(f"invalid {model.__name__}: {e.errors()[0]['msg']}") from e


class ResidueClass(BaseModel):
    """The congruence z = r (mod m)"""

    model_config = ConfigDict(frozen=True)

    r: int = 0
    m: int = 1

    @model_validator(mode="after")
    def _check_range(self) -> "ResidueClass":
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        if not 0 <= self.r < self.m:
            raise ValueError(f"residue must satisfy 0 <= r < m, got {self.r}/{self.m}")
        return self

    @classmethod
    def parse(cls, text: str) -> "ResidueClass":
        """Parse the R/M syntax"""
        try:
            r, m = (int(part) for part in text.split("/"))
        except ValueError as e:
            raise MalformedSpecError(f"residue class must look like R/M, got {text!r}") from e
        return build(cls, r=r, m=m)

    def contains(self, z: int) -> bool:
        return z % self.m == self.r

    def first_at_least(self, z: int) -> int:
        return z + (self.r - z) % self.m

    def __str__(self) -> str:
        return f"{self.r}/{self.m}"


class SearchSpec(BaseModel):
    n: BigInt = Field(ge=1)
    k: int = Field(ge=2)
    z_class: ResidueClass = ResidueClass()
    z_min: int
    z_max: int
    require_positive_xyz: bool = False

    @model_validator(mode="after")
    def _check_window(self) -> "SearchSpec":
        if self.z_min > self.z_max:
            raise ValueError(f"empty window [{self.z_min}, {self.z_max}]")
        if self.require_positive_xyz and self.z_min < 1:
            raise ValueError("positive search needs z_min >= 1")
        return self

    @classmethod
    def default_window(
        cls, n: int, k: int, z_class: ResidueClass = ResidueClass(), positive: bool = False
    ) -> "SearchSpec":
        """[1, root(n - 2)] for positive searches, [-4 root(n), root(n)] otherwise"""
        if positive:
            z_max = max(1, integer_nth_root(max(n - 2, 0), k))
            return build(cls, n=n, k=k, z_class=z_class, z_min=1, z_max=z_max, require_positive_xyz=True)
        root = integer_nth_root(n, k)
        return build(cls, n=n, k=k, z_class=z_class, z_min=-4 * root, z_max=root)

    def effective_z_max(self) -> int:
        if not self.require_positive_xyz:
            return self.z_max
        # x^2 + y^2 >= 2 once x, y >= 1
        return min(self.z_max, integer_nth_root(max(self.n - 2, 0), self.k))

    def admissible_z(self) -> range:
        first = self.z_class.first_at_least(self.z_min)
        return range(first, self.effective_z_max() + 1, self.z_class.m)


class Representation(BaseModel):
    x: int
    y: int
    z: int


class VerificationRecord(BaseModel):
    n: BigInt
    k: int
    exhausted_window: bool
    count_checked: int
    found: Optional[Representation] = None


class TwoSquaresRecord(BaseModel):
    n: int
    sum_of_two_squares: bool
    representations: Optional[List[Tuple[int, int]]] = None


class LocalStatus(str, Enum):
    SOLVABLE = "solvable"
    OBSTRUCTED = "obstructed"
    UNDECIDED = "undecided"


class LocalOutcome(str, Enum):
    NO_OBSTRUCTION = "no_obstruction"
    OBSTRUCTED = "obstructed"
    UNDECIDED = "undecided"


class ObstructionTable(BaseModel):
    """Residues proving x^2 + y^2 + z^k = n has no solution mod q^level"""

    q: int
    level: int
    modulus: int
    admissible_powers: List[int]
    residual_targets: List[int]
    square_sums: Optional[List[int]] = None


class LocalVerdict(BaseModel):
    q: int
    status: LocalStatus
    level: int
    detail: str
    table: Optional[ObstructionTable] = None


class LocalReport(BaseModel):
    n: BigInt
    k: int
    z_class: ResidueClass
    verdicts: List[LocalVerdict]
    checked_bound: int
    special_primes: List[int]
    blanket_certificate: str
    outcome: LocalOutcome
