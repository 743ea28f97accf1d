from typing import List

from loguru import logger

from config.settings import SEARCH_CHUNK, SEARCH_Z_BUDGET, TWO_SQUARES_BOUND
from src.core.errors import BudgetExceededError, InputRangeError
from src.core.models import Representation, SearchSpec, VerificationRecord
from src.core.two_squares import is_sum_of_two_squares, two_square_representations
from src.runtime.executor import ChunkExecutor, chunked


def _admissible(spec: SearchSpec) -> range:
    zs = spec.admissible_z()
    if len(zs) > SEARCH_Z_BUDGET:
        raise BudgetExceededError(f"window holds {len(zs)} admissible z values, budget is {SEARCH_Z_BUDGET}")
    return zs


def _scan(spec: SearchSpec, zs: range, first_only: bool) -> List[Representation]:
    floor = 2 if spec.require_positive_xyz else 0
    out: List[Representation] = []

    for z in zs:
        rest = spec.n - z**spec.k
        if rest < floor:
            continue
        if rest > TWO_SQUARES_BOUND:
            raise InputRangeError(f"n - z^k = {rest} at z = {z} exceeds {TWO_SQUARES_BOUND}")
        # factorization filter first; enumeration only runs on sums of two squares
        if not is_sum_of_two_squares(rest):
            continue
        for x, y in two_square_representations(rest):
            if spec.require_positive_xyz and x == 0:
                continue
            out.append(Representation(x=x, y=y, z=z))
            if first_only:
                return out
    return out


def find_representations(spec: SearchSpec) -> List[Representation]:
    """Every x^2 + y^2 + z^k = n in the window, ordered by z then x, with x <= y"""
    zs = _admissible(spec)
    with ChunkExecutor() as executor:
        parts = executor.map_ordered(lambda chunk: _scan(spec, chunk, False), chunked(zs, SEARCH_CHUNK))

    found = [rep for part in parts for rep in part]
    logger.debug(f"n={spec.n} k={spec.k}: {len(found)} representations over {len(zs)} admissible z")
    return found


def verify_none(spec: SearchSpec) -> VerificationRecord:
    """
    Scan the window for a representation, stopping at the first one.

    count_checked is the number of admissible z examined: the whole window
    when nothing is found, otherwise up to and including the z that hit.
    """
    zs = _admissible(spec)
    chunks = chunked(zs, SEARCH_CHUNK)

    with ChunkExecutor() as executor:
        for i in range(0, len(chunks), executor.workers):
            batch = chunks[i : i + executor.workers]
            for reps in executor.map_ordered(lambda chunk: _scan(spec, chunk, True), batch):
                if reps:
                    found = reps[0]
                    logger.info(f"n={spec.n} k={spec.k}: representation found at z={found.z}")
                    return VerificationRecord(
                        n=spec.n,
                        k=spec.k,
                        exhausted_window=False,
                        count_checked=zs.index(found.z) + 1,
                        found=found,
                    )

    return VerificationRecord(n=spec.n, k=spec.k, exhausted_window=True, count_checked=len(zs))
