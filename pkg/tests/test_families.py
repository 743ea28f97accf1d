import importlib

import pytest

from src.core.errors import FamilyParameterError, TheoremViolationError, WitnessDomainError
from src.core.models import ResidueClass
from src.core.two_squares import is_sum_of_two_squares
from src.families import (
    Family,
    generate,
    generate_thm1,
    generate_thm2,
    generate_thm3,
    make_target,
    match_family,
    qualifying_cofactors,
    sweep,
    verify_witness,
    witness,
)

witness_module = importlib.import_module("src.families.witness")


def test_generate_thm1_small():
    targets = generate_thm1(3, 10**5)
    assert [t.p for t in targets] == [13, 37]
    assert [t.target for t in targets] == [2197, 50653]
    assert all(t.z_class == ResidueClass(r=6, m=12) and not t.positivity for t in targets)


def test_generate_thm1_fifth_powers():
    assert [t.p for t in generate_thm1(5, 10**10)] == [41, 61]


@pytest.mark.parametrize("k", [2, 4, 1])
def test_generate_thm1_needs_odd_k(k):
    with pytest.raises(FamilyParameterError):
        generate_thm1(k, 10**6)


def test_generate_thm2_small():
    targets = generate_thm2(4, 10**4)
    assert [t.target for t in targets] == [49, 529, 961, 2209, 5041, 6241]
    assert all(t.cofactor_n == 1 and t.positivity for t in targets)


def test_generate_thm3_small():
    targets = generate_thm3(6, 600)
    assert [t.target for t in targets] == [49, 529]
    assert all(t.z_class == ResidueClass(r=0, m=2) for t in targets)


def test_square_families_include_cofactors():
    targets = generate_thm2(4, 200_000)
    assert [(t.cofactor_n, t.p) for t in targets if t.cofactor_n > 1] == [(17, 23)]
    assert [t.target for t in targets] == sorted(t.target for t in targets)


@pytest.mark.parametrize("family,k", [(Family.THM2, 6), (Family.THM3, 4), (Family.THM3, 2)])
def test_square_families_check_k(family, k):
    with pytest.raises(FamilyParameterError):
        generate(family, k, 10**4)


def test_qualifying_cofactors():
    assert qualifying_cofactors(100) == [1, 17, 25, 41, 65, 73, 89, 97]
    assert qualifying_cofactors(0) == []


@pytest.mark.parametrize(
    "family,k,p,cofactor",
    [
        (Family.THM1, 3, 11, 1),  # p != 1 (mod 12)
        (Family.THM1, 3, 25, 1),  # not prime
        (Family.THM2, 4, 7, 17),  # cofactor above p
        (Family.THM2, 4, 23, 9),  # cofactor with a prime 3 (mod 4)
        (Family.THM3, 6, 17, 1),  # p != 7 (mod 8)
    ],
)
def test_make_target_rejects_bad_parameters(family, k, p, cofactor):
    with pytest.raises(FamilyParameterError):
        make_target(family, k, p, cofactor)


def test_acceptance_windows():
    assert make_target(Family.THM1, 3, 13).acceptance_window() == (-52, 13)
    assert make_target(Family.THM2, 4, 7).acceptance_window() == (1, 2)
    spec = make_target(Family.THM3, 6, 23).search_spec()
    assert (spec.z_min, spec.z_max, spec.require_positive_xyz) == (1, 2, True)
    assert list(spec.admissible_z()) == [2]


def test_match_family():
    assert match_family(2197, 3, ResidueClass(r=6, m=12)) == make_target(Family.THM1, 3, 13)
    assert match_family(2197, 3, ResidueClass()) is None
    assert match_family(2196, 3, ResidueClass(r=6, m=12)) is None
    assert match_family(49, 4, ResidueClass()) == make_target(Family.THM2, 4, 7)
    assert match_family(49, 6, ResidueClass(r=0, m=2)) == make_target(Family.THM3, 6, 7)
    assert match_family(391**2, 8, ResidueClass()) == make_target(Family.THM2, 8, 23, 17)
    assert match_family(50, 4, ResidueClass()) is None
    assert match_family(121, 4, ResidueClass()) is None


def test_thm1_witness_positive_z():
    target = make_target(Family.THM1, 3, 13)
    w = witness(target, 6)
    assert w.q == 7
    assert w.facts.kind == "odd_power"
    assert w.facts.difference == 7
    assert w.facts.difference_mod_4k == 7
    assert w.facts.q_valuation == 1
    assert w.facts.total_valuation == 1
    assert w.facts.cofactor_sum_mod_q == w.facts.k_z_pow_mod_q == 3
    assert verify_witness(target, w)


def test_thm1_witness_negative_z():
    target = make_target(Family.THM1, 3, 13)
    w = witness(target, -6)
    assert w.q == 19
    assert w.facts.difference == 19
    assert w.facts.cofactor_sum_mod_q == 13
    assert verify_witness(target, w)


def test_thm2_witness():
    target = make_target(Family.THM2, 4, 7)
    w = witness(target, 1)
    assert w.q == 3
    assert w.facts.kind == "even_power"
    assert w.facts.t == 2
    assert w.facts.difference == 6
    assert w.facts.difference_mod_8 == 6
    assert not w.facts.z_even
    assert w.facts.sum == 8
    assert not w.facts.q_divides_sum
    assert w.facts.size_bound.holds
    assert verify_witness(target, w)


def test_witness_json_keeps_big_values_as_strings():
    w = witness(make_target(Family.THM1, 3, 13), 6)
    data = w.model_dump(mode="json")
    assert data["target"] == "2197"
    assert data["facts"]["difference"] == "7"
    assert data["q"] == 7


def test_tampered_witness_fails_verification():
    target = make_target(Family.THM1, 3, 13)
    w = witness(target, 6)
    assert not verify_witness(target, w.model_copy(update={"q": 11}))
    assert not verify_witness(target, w.model_copy(update={"z": -6}))
    assert not verify_witness(make_target(Family.THM1, 3, 37), w)
    facts = w.facts.model_copy(update={"q_valuation": 3})
    assert not verify_witness(target, w.model_copy(update={"facts": facts}))


@pytest.mark.parametrize(
    "fact", ["q_divides_2np", "q_divides_2z_pow_t", "q_equals_p", "q_divides_sum", "z_even"]
)
def test_tampered_even_power_chain_fails_verification(fact):
    target = make_target(Family.THM2, 4, 7)
    w = witness(target, 1)
    assert verify_witness(target, w)
    facts = w.facts.model_copy(update={fact: not getattr(w.facts, fact)})
    assert not verify_witness(target, w.model_copy(update={"facts": facts}))


def test_even_power_chain_facts():
    w = witness(make_target(Family.THM2, 4, 7), 1)
    # np - z^t = 6 = 2 * 3, np + z^t = 8
    assert (w.q, w.facts.t) == (3, 2)
    assert not w.facts.q_divides_2np
    assert not w.facts.q_divides_2z_pow_t
    assert not w.facts.q_equals_p


@pytest.mark.parametrize(
    "family,k,limit",
    [(Family.THM2, 4, 10**6), (Family.THM2, 8, 10**6), (Family.THM3, 6, 10**6), (Family.THM3, 10, 10**6)],
)
def test_difference_parity(family, k, limit):
    targets = generate(family, k, limit)
    assert targets
    for target in targets:
        np_ = target.cofactor_n * target.p
        assert np_ % 8 == 7
        for z in target.search_spec().admissible_z():
            difference = np_ - z ** (k // 2)
            assert difference > 0
            if z % 2 == 0:
                assert difference % 4 == 3, (target.target, z)
            else:
                assert difference % 8 == 6, (target.target, z)
            assert witness(target, z).facts.difference_mod_8 == difference % 8


@pytest.mark.parametrize(
    "family,k,p,z",
    [
        (Family.THM1, 3, 13, 5),  # outside 6 (mod 12)
        (Family.THM1, 3, 13, 18),  # z >= p
        (Family.THM2, 4, 7, 0),  # z < 1
        (Family.THM2, 4, 7, 3),  # z^k > target
        (Family.THM3, 6, 23, 1),  # odd z
    ],
)
def test_witness_domain(family, k, p, z):
    with pytest.raises(WitnessDomainError):
        witness(make_target(family, k, p), z)


def test_failed_reverification_raises_alarm(monkeypatch, log_messages):
    monkeypatch.setattr(witness_module, "verify_witness", lambda target, w: False)
    with pytest.raises(TheoremViolationError):
        witness(make_target(Family.THM1, 3, 13), 6)
    assert any("Theorem violation" in m for m in log_messages)


@pytest.mark.parametrize("family,k,limit", [(Family.THM1, 3, 10**6), (Family.THM2, 4, 10**5), (Family.THM3, 6, 10**5)])
def test_every_admissible_z_has_a_witness(family, k, limit):
    for target in generate(family, k, limit):
        for z in target.search_spec().admissible_z():
            w = witness(target, z)
            assert verify_witness(target, w)
            assert not is_sum_of_two_squares(target.target - z**k)


def test_sweep_thm1():
    summary = sweep(Family.THM1, 3, 10**6, generic_bound=100, max_level=12)
    assert summary.targets == 5
    assert summary.clean
    assert summary.representations_found == summary.witness_failures == 0
    assert summary.obstructed == summary.undecided == 0
    assert summary.witnesses_verified == summary.z_checked


def test_sweep_thm2():
    summary = sweep(Family.THM2, 4, 10**4)
    assert summary.targets == 6
    assert summary.clean
