"""
Local solvability of x^2 + y^2 + z^k = n with z restricted to a residue class.

Odd primes are settled by the nonsingular fast path whenever some admissible
z leaves n - z^k a unit. Everything else goes through a breadth-first lift
over residues mod q^j, certifying a node as soon as the Hensel criterion
holds at its integer representative.
"""
from typing import List, Optional, Tuple

from loguru import logger

from config.settings import DEFAULT_GENERIC_BOUND, LOCAL_LEVEL_CAP, LOCAL_NODE_BUDGET
from src.arith.factorization import factor_pairs, multiplicity
from src.arith.primality import is_prime
from src.arith.roots import sqrt_mod
from src.arith.sieve import primes_up_to
from src.core.errors import InputRangeError, NotPrimeError
from src.core.models import (
    LocalOutcome,
    LocalReport,
    LocalStatus,
    LocalVerdict,
    ObstructionTable,
    ResidueClass,
)
from src.runtime.executor import ChunkExecutor

_FULL_TABLE_MODULUS = 4096


def default_max_level(k: int, z_class: ResidueClass, q: int) -> int:
    v = max(multiplicity(2, q), multiplicity(k, q), multiplicity(z_class.m, q))
    return min(LOCAL_LEVEL_CAP, 2 * v + 3)


def default_generic_bound(k: int, z_class: ResidueClass) -> int:
    largest = max((p for p, _ in factor_pairs(z_class.m)), default=2)
    return max(DEFAULT_GENERIC_BOUND, k + 1, largest)


def _two_squares_mod(c: int, q: int) -> Tuple[int, int]:
    for x in range(q):
        y = sqrt_mod(c - x * x, q)
        if y is not None:
            return x, y
    raise AssertionError(f"{c} is not a sum of two squares mod {q}")


def _fast_path(n: int, k: int, z_class: ResidueClass, q: int) -> Optional[LocalVerdict]:
    candidates = [z_class.r % q] if z_class.m % q == 0 else range(q)
    for a in candidates:
        c = (n - pow(a, k, q)) % q
        if c:
            x, y = _two_squares_mod(c, q)
            return LocalVerdict(
                q=q,
                status=LocalStatus.SOLVABLE,
                level=1,
                detail=(
                    f"z = {a} (mod {q}) leaves n - z^k = {c} (mod {q}); "
                    f"(x, y) = ({x}, {y}) is nonsingular and lifts"
                ),
            )
    return None


def _hensel(n: int, k: int, q: int, e: int, x: int, y: int, z: int) -> Optional[str]:
    """Why the node (x, y, z) lifts to a q-adic solution, or None"""
    defect = x * x + y * y + z**k - n
    if defect == 0:
        return f"({x}, {y}, {z}) is an exact solution"

    vf = multiplicity(abs(defect), q)
    # a lift in z moves it by a multiple of q^(vf - vd), which must keep z in its class
    for name, derivative, min_step in (("x", 2 * x, 0), ("y", 2 * y, 0), ("z", k * z ** (k - 1), e)):
        if derivative == 0:
            continue
        vd = multiplicity(abs(derivative), q)
        if vf > 2 * vd and vf - vd >= min_step:
            return f"at ({x}, {y}, {z}): v_{q}(defect) = {vf} > 2 v_{q}(dF/d{name}) = {2 * vd}"
    return None


def obstruction_table(n: int, k: int, z_class: ResidueClass, q: int, level: int) -> ObstructionTable:
    """Residues mod q^level: admissible z^k, the values n - z^k must take, and the sums of two squares"""
    modulus = q**level
    z_mod = q ** min(multiplicity(z_class.m, q), level)
    powers = sorted({pow(z, k, modulus) for z in range(z_class.r % z_mod, modulus, z_mod)})
    targets = sorted({(n - w) % modulus for w in powers})

    sums = None
    if modulus <= _FULL_TABLE_MODULUS:
        squares = {x * x % modulus for x in range(modulus)}
        sums = sorted({(a + b) % modulus for a in squares for b in squares})

    return ObstructionTable(
        q=q,
        level=level,
        modulus=modulus,
        admissible_powers=powers,
        residual_targets=targets,
        square_sums=sums,
    )


def check_obstruction_table(table: ObstructionTable) -> bool:
    """Independently confirm that no residual target is a sum of two squares mod the table modulus"""
    modulus = table.modulus
    squares = {x * x % modulus for x in range(modulus)}
    return all(all((t - s) % modulus not in squares for s in squares) for t in table.residual_targets)


def _lift(n: int, k: int, z_class: ResidueClass, q: int, max_level: int) -> LocalVerdict:
    e = multiplicity(z_class.m, q)
    frontier: List[Tuple[int, int, int]] = [(0, 0, 0)]

    for level in range(1, max_level + 1):
        modulus, step = q**level, q ** (level - 1)
        z_mod = q ** min(e, level)
        z_res = z_class.r % z_mod
        nodes: List[Tuple[int, int, int]] = []

        for x0, y0, z0 in frontier:
            for c in range(q):
                z = z0 + c * step
                if z % z_mod != z_res:
                    continue
                zk = pow(z, k, modulus)
                for a in range(q):
                    x = x0 + a * step
                    base = x * x + zk - n
                    for b in range(q):
                        y = y0 + b * step
                        if (base + y * y) % modulus:
                            continue
                        if level >= e:
                            reason = _hensel(n, k, q, e, x, y, z)
                            if reason:
                                return LocalVerdict(q=q, status=LocalStatus.SOLVABLE, level=level, detail=reason)
                        nodes.append((x, y, z))
                        if len(nodes) > LOCAL_NODE_BUDGET:
                            return LocalVerdict(
                                q=q,
                                status=LocalStatus.UNDECIDED,
                                level=level,
                                detail=f"node budget {LOCAL_NODE_BUDGET} exhausted mod {q}^{level}",
                            )

        if not nodes:
            return LocalVerdict(
                q=q,
                status=LocalStatus.OBSTRUCTED,
                level=level,
                detail=f"no solutions mod {q}^{level} = {modulus}",
                table=obstruction_table(n, k, z_class, q, level),
            )
        frontier = nodes

    return LocalVerdict(
        q=q,
        status=LocalStatus.UNDECIDED,
        level=max_level,
        detail=f"{len(frontier)} solutions persist mod {q}^{max_level}, none certified liftable",
    )


def is_locally_solvable_at(
    n: int, k: int, z_class: ResidueClass, q: int, max_level: Optional[int] = None
) -> LocalVerdict:
    if not is_prime(q):
        raise NotPrimeError(f"local check needs a prime, got {q}")
    if max_level is not None and max_level < 1:
        raise InputRangeError(f"max_level must be >= 1, got {max_level}")
    if max_level is None:
        max_level = default_max_level(k, z_class, q)

    # q = 2 always lifts: sums of two squares are not surjective mod powers of 2
    if q != 2:
        verdict = _fast_path(n, k, z_class, q)
        if verdict:
            return verdict

    verdict = _lift(n, k, z_class, q, max_level)
    if verdict.status is LocalStatus.UNDECIDED:
        logger.warning(f"n={n} k={k} z in {z_class} q={q}: {verdict.detail}")
    else:
        logger.debug(f"n={n} k={k} z in {z_class} q={q}: {verdict.status.value} at level {verdict.level}")
    return verdict


def local_report(
    n: int,
    k: int,
    z_class: ResidueClass,
    generic_bound: Optional[int] = None,
    max_level: Optional[int] = None,
) -> LocalReport:
    """
    Check every prime up to generic_bound plus the special primes dividing
    2, n, k and the class modulus. Larger primes are covered by the blanket
    counting argument recorded in the report.
    """
    bound = default_generic_bound(k, z_class) if generic_bound is None else generic_bound
    if bound < max(k, z_class.m, 2):
        raise InputRangeError(f"generic bound {bound} is below max(k, m, 2) = {max(k, z_class.m, 2)}")

    generic = [int(p) for p in primes_up_to(bound)]
    special = {2}
    for value in (n, k, z_class.m):
        special.update(p for p, _ in factor_pairs(value))
    primes = sorted(set(generic) | special)

    with ChunkExecutor() as executor:
        verdicts = executor.map_ordered(lambda q: is_locally_solvable_at(n, k, z_class, q, max_level), primes)

    statuses = {v.status for v in verdicts}
    if LocalStatus.OBSTRUCTED in statuses:
        outcome = LocalOutcome.OBSTRUCTED
    elif LocalStatus.UNDECIDED in statuses:
        outcome = LocalOutcome.UNDECIDED
    else:
        outcome = LocalOutcome.NO_OBSTRUCTION

    logger.info(f"n={n} k={k} z in {z_class}: {len(verdicts)} primes checked, {outcome.value}")
    return LocalReport(
        n=n,
        k=k,
        z_class=z_class,
        verdicts=verdicts,
        checked_bound=generic[-1],
        special_primes=sorted(special),
        blanket_certificate=(
            f"every prime q > {bound} not dividing n*m*k: z takes all residues mod q and at most "
            f"{k} of them satisfy z^k = n (mod q), so some z leaves n - z^k a unit and the fast path applies"
        ),
        outcome=outcome,
    )
