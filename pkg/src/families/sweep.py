from typing import Optional

from loguru import logger

from src.core.errors import TheoremViolationError
from src.core.local import local_report
from src.core.models import LocalStatus
from src.core.search import verify_none
from src.families.generators import generate
from src.families.models import Family, SweepSummary
from src.families.witness import witness


def sweep(
    family: Family,
    k: int,
    limit: int,
    generic_bound: Optional[int] = None,
    max_level: Optional[int] = None,
) -> SweepSummary:
    """
    Check every target of a family up to limit three ways: exhaustive search
    over the acceptance window, a re-verified witness for each admissible z,
    and a local report.
    """
    targets = generate(family, k, limit)
    z_checked = found = verified = failures = obstructed = undecided = 0

    for target in targets:
        spec = target.search_spec()
        record = verify_none(spec)
        z_checked += record.count_checked
        if record.found:
            found += 1

        for z in spec.admissible_z():
            try:
                witness(target, z)
                verified += 1
            except TheoremViolationError:
                failures += 1

        report = local_report(target.target, k, target.z_class, generic_bound, max_level)
        obstructed += sum(v.status is LocalStatus.OBSTRUCTED for v in report.verdicts)
        undecided += sum(v.status is LocalStatus.UNDECIDED for v in report.verdicts)

    clean = not (found or failures or obstructed or undecided)
    logger.info(
        f"{family.value} k={k} up to {limit}: {len(targets)} targets, {z_checked} z checked, "
        f"{'clean' if clean else 'NOT clean'}"
    )
    return SweepSummary(
        family=family,
        k=k,
        limit=limit,
        targets=len(targets),
        z_checked=z_checked,
        representations_found=found,
        witnesses_verified=verified,
        witness_failures=failures,
        obstructed=obstructed,
        undecided=undecided,
        clean=clean,
    )
