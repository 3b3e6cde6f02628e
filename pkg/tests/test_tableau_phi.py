import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bzkit import lusztig_finite as lf
from bzkit import maya as my
from bzkit import tableau_phi as tp
from bzkit.bz_finite import BZFinite, check_edge_inequalities, check_tropical_plucker, is_bz, star
from bzkit.lusztig_finite import LusztigFinite
from bzkit.maya import MayaFinite
from bzkit.root_data import Interval

from oracles import tableaux_unbounded

I12 = Interval(1, 2)
EX = LusztigFinite(I12, (1, 0, 2))


@st.composite
def data(draw, ms=(2, 3, 4), max_entry=4):
    m = draw(st.sampled_from(ms))
    I = Interval(1, m)
    n = len(lf.positive_pairs(I))
    return LusztigFinite(I, tuple(draw(st.lists(st.integers(0, max_entry), min_size=n, max_size=n))))


def test_tableau_enumeration_examples():
    t = list(tp.enumerate_k_tableaux(MayaFinite(I12, (1, 2))))
    assert len(t) == 1 and t[0].cell(0, 1) == 1
    t = list(tp.enumerate_k_tableaux(MayaFinite(I12, (1, 3))))
    assert sorted(x.cell(0, 1) for x in t) == [1, 2]
    t = list(tp.enumerate_k_tableaux(MayaFinite(I12, (2,))))
    assert len(t) == 1 and t[0].rows == ((2,),)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_derived_bounds_lose_no_tableaux(m):
    I = Interval(1, m)
    for k in my.all_maya_finite(I):
        ours = sorted(
            tuple(sorted(((p, q), t.cell(p, q)) for p in range(len(k)) for q in range(p, len(k))))
            for t in tp.enumerate_k_tableaux(k)
        )
        assert ours == sorted(tableaux_unbounded(k.members, I.lo, I.hi + 1))


@pytest.mark.parametrize("method", tp.METHODS)
def test_min_cost_examples(method):
    assert tp.min_cost(EX, MayaFinite(I12, (1, 3)), method) == 1
    assert tp.min_cost(EX, MayaFinite(I12, (2, 3)), method) == 2
    z = LusztigFinite.zero(Interval(1, 3))
    assert all(tp.min_cost(z, k, method) == 0 for k in my.all_maya_finite(z.interval))


def test_phi_worked_example():
    M = tp.phi(EX)
    order = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
    assert [M[k] for k in order] == [0, -1, -2, 0, -1, -1]
    assert tp.phi(EX, "enumerate") == M
    P = tp.phi_prime(EX)
    assert P[(2,)] == -2
    assert tp.phi_prime(LusztigFinite.zero(I12)) == BZFinite.zero(I12)


def test_method_mismatch_rejected():
    with pytest.raises(ValueError):
        tp.min_cost(EX, MayaFinite(Interval(1, 3), (1,)))
    with pytest.raises(ValueError):
        tp.min_cost(EX, MayaFinite(I12, (1,)), "simplex")


def test_solvers_agree_on_random_I13():
    rng = np.random.default_rng(7)
    I = Interval(1, 3)
    for _ in range(100):
        a = lf.random_datum(rng, I, 4)
        for k in my.all_maya_finite(I):
            want = tp.min_cost(a, k, "enumerate")
            assert tp.min_cost(a, k, "cut") == want
            assert tp.min_cost(a, k, "bnb") == want


@given(data(ms=(4, 5), max_entry=6))
@settings(max_examples=25)
def test_cut_equals_bnb_on_larger_intervals(a):
    for k in my.all_maya_finite(a.interval):
        assert tp.min_cost(a, k, "cut") == tp.min_cost(a, k, "bnb")


@given(data())
def test_phi_is_normalized_bz(a):
    M = tp.phi(a)
    assert is_bz(M, "e")
    assert not check_edge_inequalities(M) and not check_tropical_plucker(M)
    for i in a.interval:
        assert M[my.fundamental_maya(a.interval, i).members] == 0
    assert is_bz(star(M), "w0")


@given(data())
def test_phi_prime_is_w0_normalized_bz(a):
    P = tp.phi_prime(a)
    assert is_bz(P, "w0")
    for i in a.interval:
        assert P[my.complement_finite(my.fundamental_maya(a.interval, i)).members] == 0


@given(data(ms=(1, 2, 3), max_entry=3))
@settings(max_examples=30)
def test_phi_inverse_roundtrip(a):
    assert tp.phi_inverse(tp.phi(a), "e") == a
    assert tp.phi_inverse(tp.phi_prime(a), "w0") == a


def test_phi_inverse_rejections():
    assert tp.phi_inverse(BZFinite.zero(I12)) == LusztigFinite.zero(I12)
    M = tp.phi(EX).with_component((1, 3), -5)
    with pytest.raises(tp.NotInImage):
        tp.phi_inverse(M)
    with pytest.raises(ValueError):
        tp.phi_inverse(BZFinite.zero(Interval(1, 5)))
