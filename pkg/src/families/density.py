import math
from bisect import bisect_right
from typing import List, Sequence

from loguru import logger

from src.arith.factorization import euler_phi
from src.families.generators import generate
from src.families.landau import check_limits
from src.families.models import DensityRow, Family


def predicted_count(family: Family, k: int, limit: int) -> float:
    """k/(2 phi(k)) N^(1/k) / ln N for THM1; the order N^(1/2)/(ln N)^(1/2) otherwise"""
    log_n = math.log(limit)
    if family is Family.THM1:
        return k / (2 * euler_phi(k)) * math.exp(log_n / k) / log_n
    return math.sqrt(limit / log_n)


def density_report(family: Family, k: int, limits: Sequence[int]) -> List[DensityRow]:
    check_limits(limits)
    values = [t.target for t in generate(family, k, limits[-1])]
    kind = "asymptotic" if family is Family.THM1 else "lower-bound-order"

    rows = []
    for limit in limits:
        actual = bisect_right(values, limit)
        predicted = predicted_count(family, k, limit)
        rows.append(
            DensityRow(
                limit=limit,
                actual_count=actual,
                predicted=predicted,
                ratio=actual / predicted,
                bound_kind=kind,
            )
        )
    logger.info(f"{family.value} k={k}: density over {len(limits)} limits, {len(values)} targets")
    return rows
