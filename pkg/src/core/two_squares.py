from math import isqrt
from typing import List, Tuple

import numpy as np

from config.settings import TWO_SQUARES_BOUND
from src.arith.factorization import factor_pairs
from src.arith.primality import check_range
from src.core.errors import BudgetExceededError, InputRangeError

_CHUNK = 1 << 20


def is_sum_of_two_squares(n: int) -> bool:
    """True iff every prime q = 3 (mod 4) divides n to an even power"""
    check_range(n)
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factor_pairs(n) if p % 4 == 3)


def two_square_representations(n: int) -> List[Tuple[int, int]]:
    """
    All (x, y) with x^2 + y^2 = n and 0 <= x <= y, ascending in x.

    Brute force over x <= sqrt(n / 2), independent of the factorization path.
    n - x^2 stays below 2^53, so the float square root is exact on squares.
    """
    if n < 0:
        raise InputRangeError(f"n must be non-negative, got {n}")
    if n > TWO_SQUARES_BOUND:
        raise BudgetExceededError(f"{n} exceeds the enumeration bound {TWO_SQUARES_BOUND}")

    top = isqrt(n // 2)
    out: List[Tuple[int, int]] = []
    for start in range(0, top + 1, _CHUNK):
        xs = np.arange(start, min(start + _CHUNK, top + 1), dtype=np.int64)
        rest = n - xs * xs
        ys = np.rint(np.sqrt(rest)).astype(np.int64)
        hit = ys * ys == rest
        out.extend(zip(xs[hit].tolist(), ys[hit].tolist()))
    return out
