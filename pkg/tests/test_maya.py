import json

import pytest
from hypothesis import given, strategies as st

from bzkit import maya as my
from bzkit.maya import HOLE, PARTICLE, MayaCharged, MayaFinite
from bzkit.root_data import Interval

from oracles import weyl_by_transpositions, young_by_m_construction

partitions_st = st.lists(st.integers(1, 6), max_size=5).map(lambda p: tuple(sorted(p, reverse=True)))
charged = st.builds(MayaCharged, st.integers(-4, 4), partitions_st)


def test_fundamental_diagrams():
    I = Interval(1, 2)
    assert my.fundamental_maya(I, 1).members == (1,)
    assert my.fundamental_maya(I, 2).members == (1, 2)
    assert my.fundamental_maya(I, 1, "sigmaLambda").members == (2,)
    assert my.fundamental_maya(I, 2, "sigmaLambda").members == (1, 3)
    assert my.fundamental_maya(Interval(1, 3), 2, "sigmaLambda").members == (1, 3)
    with pytest.raises(ValueError):
        my.fundamental_maya(I, 3)
    assert len(my.all_maya_finite(I)) == 2**3 - 2


def test_finite_validation():
    I = Interval(1, 2)
    with pytest.raises(ValueError):
        MayaFinite(I, ())
    with pytest.raises(ValueError):
        MayaFinite(I, (1, 2, 3))
    with pytest.raises(ValueError):
        MayaFinite(I, (0,))
    k = MayaFinite(I, (1, 3))
    assert str(k) == "I=1..2;{1,3}"
    assert my.complement_finite(k).members == (2,)
    assert my.sigma_transposition(k, 2).members == (1, 2)


def test_particles_and_membership():
    k = MayaCharged(1, (2, 1))
    assert k.particles() == (3, 1)
    assert k.floor == -1 and k.top == 3
    assert k.members_in(-2, 4) == [-2, -1, 1, 3]
    h = my.complement_charged(k)
    assert h.members_in(-2, 4) == [0, 2, 4]
    assert str(h) == "r=1;lambda=2,1;hole"


def test_ground_state_window():
    assert my.min_window(MayaCharged(2)) == Interval(2, 2)
    assert my.min_window(MayaCharged(0, (3, 1))) == Interval(-1, 2)


def test_tau_is_the_pi_rotation():
    for lam in [(), (1,), (2, 1), (3, 3, 1)]:
        for r in (-1, 0, 2):
            k = MayaCharged(r, lam)
            assert my.affine_weyl_act(k, "pi", 3) == my.tau_shift(k, 1)


def test_sigma_hat_zero_on_vacuum():
    # the 0-reflection of the vacuum moves the particle at 0 up to 1
    assert my.affine_weyl_act(MayaCharged(0), 0, 3) == MayaCharged(0, (1,))


@pytest.mark.parametrize("l", [3, 4, 5])
def test_sigma_hat_matches_windowed_transpositions(l):
    for r in range(-2, 3):
        for lam in my.partitions_upto(5):
            k = MayaCharged(r, lam)
            lo, hi = k.floor - 3 * l, k.top + 3 * l
            for i in range(l):
                got = my.affine_weyl_act(k, i, l)
                assert set(got.members_in(lo + l, hi - l)) == {
                    x for x in weyl_by_transpositions(k, i, l, lo, hi) if lo + l <= x <= hi - l
                }


@given(charged)
def test_young_bijection_against_m_recipe(k):
    below = k.floor + 1
    members = [x for x in k.particles() if x >= below]
    assert young_by_m_construction(below, members) == (k.charge, k.shape)
    assert my.from_particle_set(below - 2, k.members_in(below - 2, k.top)) == k


@given(charged, st.sampled_from([3, 4, 5]))
def test_quotient_roundtrip(k, l):
    assert my.from_l_quotient(my.l_quotient(k, l), l) == k


@given(charged, st.sampled_from([3, 4]), st.integers(0, 3))
def test_reflections_are_involutions(k, l, i):
    once = my.affine_weyl_act(k, i, l)
    assert my.affine_weyl_act(once, i, l) == k
    assert my.is_l_core(once, l) == my.is_l_core(k, l) or not my.is_l_core(k, l)


@given(charged, st.sampled_from([3, 4, 5]))
def test_core_criteria_agree(k, l):
    assert my.is_l_core(k, l, "quotient") == my.is_l_core(k, l, "hooks")


@given(charged)
def test_complement_involution_and_json(k):
    h = my.complement_charged(k)
    assert my.complement_charged(h) == k
    lo, hi = k.floor - 2, k.top + 2
    assert set(h.members_in(lo, hi)) | set(k.members_in(lo, hi)) == set(range(lo, hi + 1))
    assert MayaCharged.from_json(json.loads(json.dumps(h.to_json()))) == h


@given(charged)
def test_window_restriction_roundtrip(k):
    I = my.min_window(k)
    for J in (I, I.widen(2, 0)):
        assert my.in_window(k, J)
        assert my.res_inverse(my.res_interval(k, J)) == k
    h = my.complement_charged(k)
    assert my.res_inverse(my.res_interval(h, I.widen(0, 1)), HOLE) == h


@given(charged)
def test_omega_is_an_involution(k):
    I = my.min_window(k).widen(1)
    assert my.omega(my.omega(k, I), I) == k


def test_hook_lengths():
    assert sorted(my.hook_lengths((3, 1))) == [1, 1, 2, 4]
    assert my.is_l_core((2,), 3) and not my.is_l_core((3,), 3)


def test_partition_counts():
    assert [sum(1 for _ in my.partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(my.maya_window(1, 2, PARTICLE)) == 3 * 4


def test_side_checks():
    with pytest.raises(ValueError):
        MayaCharged(0, (1,), "middle")
    with pytest.raises(ValueError):
        my.l_quotient(MayaCharged(0, (), HOLE), 3)
    with pytest.raises(ValueError):
        my.l_quotient(MayaCharged(0), 2)


def test_worked_examples():
    k = MayaCharged(1, (1,))
    assert k.members_in(-1, 4) == [-1, 0, 2]
    assert young_by_m_construction(1, [2]) == (1, (1,))
    assert my.young_from_maya(my.maya_from_young(0, (2, 1))) == (2, 1)
    assert my.young_from_maya(MayaCharged(5)) == ()
    assert my.sigma_transposition(MayaCharged(0), 0) == MayaCharged(0, (1,))
    assert my.sigma_transposition(MayaCharged(0), 5) == MayaCharged(0)
    assert my.tau_shift(MayaCharged(0, (1,)), 1) == MayaCharged(1, (1,))
    assert my.l_quotient(MayaCharged(0), 3) == (MayaCharged(0),) * 3
    assert my.l_quotient(MayaCharged(0, (1,)), 3) == (MayaCharged(1), MayaCharged(0), MayaCharged(-1))
    assert my.is_l_core((2,), 3) and not my.is_l_core((2, 1), 3) and my.is_l_core((), 4)
    I = Interval(1, 2)
    assert my.res_interval(k, I).members == (2,)
    assert my.omega(k, I).members_in(-1, 4) == [-1, 0, 1, 3]
    assert my.min_window(k) == Interval(1, 1)


def test_min_window_is_minimal():
    for r in (-1, 0, 2):
        for lam in my.partitions_upto(6):
            k = MayaCharged(r, lam)
            I = my.min_window(k)
            assert my.in_window(k, I)
            if lam and I.m > 1:
                for J in (Interval(I.lo + 1, I.hi), Interval(I.lo, I.hi - 1)):
                    assert not my.in_window(k, J)


@given(charged, st.sampled_from([3, 4, 5]))
def test_quotient_charges_sum(k, l):
    assert sum(c.charge for c in my.l_quotient(k, l)) == k.charge


@given(charged, st.sampled_from([3, 4]), st.integers(0, 3))
def test_tau_intertwines_reflections(k, l, i):
    lhs = my.tau_shift(my.affine_weyl_act(k, i, l), 1)
    assert lhs == my.affine_weyl_act(my.tau_shift(k, 1), (i + 1) % l, l)


@given(charged)
def test_omega_commutes_with_complement(k):
    I = my.min_window(k).widen(1)
    h = my.complement_charged(k)
    assert my.complement_charged(my.omega(k, I)) == my.omega(h, I)
