import pytest

from src.arith.factorization import multiplicity
from src.core.errors import InputRangeError, NotPrimeError
from src.core.local import (
    check_obstruction_table,
    default_max_level,
    is_locally_solvable_at,
    local_report,
    obstruction_table,
)
from src.core.models import LocalOutcome, LocalStatus, ObstructionTable, ResidueClass

EVEN = ResidueClass(r=0, m=2)
THM1_CLASS = ResidueClass(r=6, m=12)


def test_obstructed_control_at_two():
    verdict = is_locally_solvable_at(7, 4, EVEN, 2)
    assert verdict.status is LocalStatus.OBSTRUCTED
    assert verdict.level == 2
    assert verdict.table.modulus == 4
    assert verdict.table.admissible_powers == [0]
    assert verdict.table.residual_targets == [3]
    assert verdict.table.square_sums == [0, 1, 2]
    assert check_obstruction_table(verdict.table)


def test_three_squares_obstruction_needs_level_three():
    verdict = is_locally_solvable_at(7, 2, ResidueClass(), 2)
    assert verdict.status is LocalStatus.OBSTRUCTED
    assert verdict.level == 3
    assert verdict.table.residual_targets == [3, 6, 7]
    assert check_obstruction_table(verdict.table)


def test_thm1_target_lifts_at_two():
    verdict = is_locally_solvable_at(2197, 3, THM1_CLASS, 2)
    assert verdict.status is LocalStatus.SOLVABLE
    assert verdict.level == 2


def test_square_target_lifts_at_two():
    verdict = is_locally_solvable_at(49, 4, ResidueClass(), 2)
    assert verdict.status is LocalStatus.SOLVABLE
    assert verdict.level == 1


@pytest.mark.parametrize("q", [3, 5, 7, 13])
def test_odd_primes_take_the_fast_path(q):
    verdict = is_locally_solvable_at(2197, 3, THM1_CLASS, q)
    assert verdict.status is LocalStatus.SOLVABLE
    assert verdict.level == 1


def test_odd_prime_without_unit_residue_falls_back_to_lifting():
    # z = 0 (mod 3) is forced and 3 | n, so n - z^k is never a unit mod 3
    verdict = is_locally_solvable_at(9, 2, ResidueClass(r=0, m=3), 3)
    assert verdict.status is LocalStatus.SOLVABLE
    assert verdict.level > 1


def test_undecided_when_levels_run_out():
    verdict = is_locally_solvable_at(7, 2, ResidueClass(), 2, max_level=2)
    assert verdict.status is LocalStatus.UNDECIDED
    assert verdict.level == 2


def test_default_max_level():
    assert default_max_level(3, THM1_CLASS, 2) == 7
    assert default_max_level(3, ResidueClass(), 5) == 3
    assert default_max_level(2**30, ResidueClass(), 2) == 24


def test_rejects_bad_parameters():
    with pytest.raises(NotPrimeError):
        is_locally_solvable_at(49, 4, ResidueClass(), 4)
    with pytest.raises(InputRangeError):
        is_locally_solvable_at(49, 4, ResidueClass(), 2, max_level=0)
    with pytest.raises(InputRangeError):
        local_report(49, 4, ResidueClass(), generic_bound=3)


def test_table_check_rejects_a_solvable_table():
    table = ObstructionTable(q=2, level=2, modulus=4, admissible_powers=[0], residual_targets=[1])
    assert not check_obstruction_table(table)


def test_large_tables_omit_the_square_sums():
    table = obstruction_table(7, 4, EVEN, 2, 13)
    assert table.modulus == 8192
    assert table.square_sums is None


def test_report_flags_the_obstructed_control():
    report = local_report(7, 4, EVEN)
    assert report.outcome is LocalOutcome.OBSTRUCTED
    by_prime = {v.q: v for v in report.verdicts}
    assert by_prime[2].status is LocalStatus.OBSTRUCTED
    assert all(v.status is LocalStatus.SOLVABLE for q, v in by_prime.items() if q != 2)


def test_report_for_thm1_target():
    report = local_report(2197, 3, THM1_CLASS, generic_bound=100, max_level=12)
    assert report.outcome is LocalOutcome.NO_OBSTRUCTION
    assert report.checked_bound == 97
    assert report.special_primes == [2, 3, 13]
    assert [v.q for v in report.verdicts] == sorted(v.q for v in report.verdicts)
    assert "q > 100" in report.blanket_certificate


def test_report_includes_special_primes_beyond_the_bound():
    report = local_report(1009 * 4, 3, ResidueClass(), generic_bound=10)
    assert 1009 in [v.q for v in report.verdicts]
    assert report.outcome is LocalOutcome.NO_OBSTRUCTION


def test_report_is_independent_of_threads(threads):
    first = local_report(529, 4, ResidueClass(), generic_bound=60)
    assert first.outcome is LocalOutcome.NO_OBSTRUCTION
    assert first == local_report(529, 4, ResidueClass(), generic_bound=60)


def solvable_mod(n, k, z_class, q, level):
    """Exhaustive check of x^2 + y^2 + z^k = n (mod q^level) over every residue"""
    modulus = q**level
    z_mod = q ** min(multiplicity(z_class.m, q), level)
    squares = {x * x % modulus for x in range(modulus)}
    for z in range(z_class.r % z_mod, modulus, z_mod):
        c = (n - pow(z, k, modulus)) % modulus
        if any((c - s) % modulus in squares for s in squares):
            return True
    return False


LEVELS = {2: 6, 3: 3, 5: 2}
CLASSES = [ResidueClass(), EVEN, ResidueClass(r=1, m=3), ResidueClass(r=6, m=12)]


def assert_verdicts_sound(n_range, ks):
    for q, level in LEVELS.items():
        for k in ks:
            for z_class in CLASSES:
                for n in n_range:
                    verdict = is_locally_solvable_at(n, k, z_class, q, max_level=level)
                    if verdict.status is LocalStatus.SOLVABLE:
                        assert solvable_mod(n, k, z_class, q, level), (n, k, z_class, q)
                    elif verdict.status is LocalStatus.OBSTRUCTED:
                        assert not solvable_mod(n, k, z_class, q, verdict.level), (n, k, z_class, q)


def test_verdicts_agree_with_exhaustive_residues():
    assert_verdicts_sound(range(1, 25), [2, 3])


@pytest.mark.slow
def test_verdicts_agree_with_exhaustive_residues_wide():
    assert_verdicts_sound(range(1, 80), [2, 3, 4, 6])


def test_global_solution_is_solvable_at_seven():
    # 3 = 1 + 1 + 1^3
    verdict = is_locally_solvable_at(3, 3, ResidueClass(), 7)
    assert verdict.status is LocalStatus.SOLVABLE


@pytest.mark.parametrize("k", [2, 3, 4])
def test_global_solutions_have_no_obstruction(k):
    for x in range(4):
        for y in range(x, 4):
            for z in range(1, 4):
                n = x * x + y * y + z**k
                z_class = ResidueClass(r=z % 4, m=4)
                report = local_report(n, k, z_class, generic_bound=20)
                assert report.outcome is LocalOutcome.NO_OBSTRUCTION, (x, y, z)
                assert all(v.status is LocalStatus.SOLVABLE for v in report.verdicts), (x, y, z)
