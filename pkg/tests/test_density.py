import math

import pytest

from src.core.errors import BudgetExceededError, InputRangeError
from src.families import Family, density_report, landau_count, landau_report, mertens_window_sum, predicted_count
from src.families.landau import landau_mask


def brute_landau(limit):
    def qualifies(n):
        p = 2
        while p * p <= n:
            while n % p == 0:
                if p % 4 != 1:
                    return False
                n //= p
            p += 1
        return n == 1 or n % 4 == 1

    return [n for n in range(1, limit + 1) if qualifies(n)]


def test_landau_count_small():
    assert landau_count(30) == 6
    assert landau_count(30, require_1_mod_8=True) == 3
    assert landau_count(0) == 0


def test_landau_mask_matches_trial_division():
    for limit in (1, 64, 1000, 5000):
        assert landau_mask(limit).nonzero()[0].tolist() == brute_landau(limit)


def test_landau_budget():
    with pytest.raises(BudgetExceededError):
        landau_count(10**8 + 1)


def test_landau_report_is_stable_across_decades():
    rows = landau_report([10**5, 10**6, 10**7])
    assert [r.count for r in rows] == sorted(r.count for r in rows)
    for a, b in zip(rows, rows[1:]):
        assert a.normalized > 0
        assert abs(b.normalized - a.normalized) / a.normalized < 0.1
    for r in rows:
        assert 0 < r.fraction_1_mod_8 < 1
        assert r.count_1_mod_8 == landau_count(r.limit, require_1_mod_8=True)
        assert r.mertens_limit == pytest.approx(math.log(1.5))


def test_mertens_window_sum_approaches_log_three_halves():
    assert mertens_window_sum(10**8) == pytest.approx(math.log(1.5), abs=0.02)


@pytest.mark.parametrize("limits", [[], [1], [100, 100], [1000, 100]])
def test_limits_are_validated(limits):
    with pytest.raises(InputRangeError):
        landau_report(limits)
    with pytest.raises(InputRangeError):
        density_report(Family.THM1, 3, limits)


def test_predicted_count_thm1():
    assert predicted_count(Family.THM1, 3, 10**12) == pytest.approx(271.4, abs=0.1)


def test_thm1_density_within_band():
    [row] = density_report(Family.THM1, 3, [10**12])
    assert row.bound_kind == "asymptotic"
    assert row.actual_count == len([p for p in range(13, 10**4 + 1, 12) if all(p % d for d in range(2, math.isqrt(p) + 1))])
    assert 0.5 <= row.ratio <= 2.0


def test_density_counts_are_cumulative():
    rows = density_report(Family.THM2, 4, [10**4, 10**6, 10**8])
    assert rows[0].actual_count == 6
    assert [r.actual_count for r in rows] == sorted(r.actual_count for r in rows)
    assert all(r.bound_kind == "lower-bound-order" and r.ratio > 0 for r in rows)
