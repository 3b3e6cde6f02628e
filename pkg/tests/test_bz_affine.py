import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bzkit import bz_affine as bza
from bzkit import lusztig_affine as la
from bzkit import maya as my
from bzkit.bz_affine import BZAffineView
from bzkit.bz_finite import BZFinite, is_bz
from bzkit.lusztig_affine import LusztigAffine
from bzkit.maya import HOLE, MayaCharged, MayaFinite
from bzkit.root_data import Interval, WeightVector, simple_root

E01 = LusztigAffine.from_cells(3, {(0, 1): 1})
GEN = LusztigAffine.from_cells(3, {(0, 2): 1, (1, 1): 2, (2, 3): 1})

diagrams = st.builds(
    MayaCharged,
    st.integers(-3, 3),
    st.lists(st.integers(1, 4), max_size=3).map(lambda p: tuple(sorted(p, reverse=True))),
)


@st.composite
def generators(draw, max_width=3):
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    return la.random_aperiodic(rng, draw(st.sampled_from([3, 4])), max_width, 2)


def test_stable_interval_examples():
    assert bza.stable_interval(MayaCharged(0), 2) == Interval(-2, 0)
    assert bza.stable_interval(MayaCharged(1, (1,)), 2) == Interval(-1, 1)


def test_pending_positions():
    k = MayaCharged(0, (2, 1))  # particles at 2, 0 and below -2
    assert bza.pending(k, 1, 3) == [1]
    assert bza.pending(k, 2, 3) == [-1]
    assert bza.pending(MayaCharged(0), 0, 3) == []


def test_zero_and_maximal_generators_give_zero():
    for z in [(), (1,), (0, 1), (1, 1)]:
        view = BZAffineView(la.a_z_of(z, 3))
        assert all(view.component(k) == 0 for k in my.maya_window(2, 4))


def test_single_segment_examples():
    view = BZAffineView(E01)
    assert view.component(MayaCharged(0)) == 0
    # Theta at the ground state is -r_0, consistent with wt = -alpha_0
    assert view.theta_component(MayaCharged(0)) == -1
    assert bza.weight_bz_affine(view) == -simple_root(0, l=3)
    assert bza.weight_bz_affine(view) == la.weight_affine(E01)
    zero = BZAffineView(LusztigAffine.zero(3))
    assert bza.weight_bz_affine(zero).items == ()
    assert all(bza.epsilon_hat_star_bz(zero, p) == 0 for p in range(3))
    assert bza.apply_hat_bz(zero, 0, "f_star").generator == E01
    assert bza.apply_hat_bz(zero, 0, "e_star") is None


def test_theta_stable_under_widening():
    view = BZAffineView(GEN)
    for k in my.maya_window(1, 4):
        base = view.theta_component(k)
        for d in range(1, 3 * view.l + 1, 2):
            assert view.theta_component(k, (d, 0)) == base
            assert view.theta_component(k, (0, d)) == base


@given(generators(), diagrams)
@settings(max_examples=40)
def test_component_growth(gen, k):
    base = bza.component_at(gen, k)
    I0 = bza.stable_interval(k, gen.width)
    for d in range(1, 5):
        assert bza.component_at(gen, k, I0.widen(d, 0)) == base
        assert bza.component_at(gen, k, I0.widen(0, d)) == base
    assert bza.component_at(gen, my.tau_shift(k, gen.l)) == base


@given(generators(), diagrams)
@settings(max_examples=30)
def test_star_and_dual_side(gen, k):
    view = BZAffineView(gen)
    h = my.complement_charged(k)
    assert view.star_component(h) == view.component(k)
    I = my.min_window(h).widen(0, gen.width)
    for d in (1, 3):
        assert view.phi_prime_component(h, I.widen(0, d)) == view.phi_prime_component(h)
    with pytest.raises(ValueError):
        view.component(h)
    with pytest.raises(ValueError):
        view.star_component(k)


def test_ground_states_are_normalized():
    view = BZAffineView(GEN)
    for r in range(-6, 7):
        assert view.component(MayaCharged(r)) == 0
        assert view.phi_prime_component(MayaCharged(r, (), HOLE)) == 0


@given(generators())
@settings(max_examples=30)
def test_statistics_match_generator_random(gen):
    assert bza.statistics_match_generator(BZAffineView(gen))


def test_statistics_match_generator_exhaustive_small():
    from itertools import product

    count = 0
    for vals in product(range(3), repeat=6):
        rows = tuple(tuple(vals[2 * r:2 * r + 2]) for r in range(3))
        a = LusztigAffine(3, rows)
        if la.is_aperiodic(a):
            assert bza.statistics_match_generator(BZAffineView(a)), a
            count += 1
    assert count > 200


@given(generators(), st.integers(0, 3), st.sampled_from(["e_star", "f_star"]))
@settings(max_examples=25)
def test_operator_matches_windowed_finite_product(gen, p, op):
    view = BZAffineView(gen)
    new = bza.apply_hat_bz(view, p, op)
    for k in my.maya_window(1, 3):
        want = bza.windowed_operator_component(view, k, p, op)
        if new is None:
            continue
        assert new.component(k) == want


@given(generators(), st.integers(0, 3))
@settings(max_examples=25)
def test_raise_after_lower_is_identity(gen, p):
    view = BZAffineView(gen)
    down = bza.apply_hat_bz(view, p, "f_star")
    assert bza.epsilon_hat_star_bz(down, p) == bza.epsilon_hat_star_bz(view, p) + 1
    assert bza.apply_hat_bz(down, p, "e_star").generator == gen
    with pytest.raises(ValueError):
        bza.apply_hat_bz(view, p, "f")


def test_sigma_invariance_and_fingerprint():
    view = BZAffineView(GEN)
    sample = my.maya_window(3, 5)
    assert bza.sigma_invariance_check(view, sample)
    assert len(view.fingerprint((1, 2))) == 3 * 4


def test_validate_small_window():
    for gen in (LusztigAffine.zero(3), E01, GEN):
        rep = bza.validate_e_bz(BZAffineView(gen), Interval(-4, 4), stab_samples=5)
        assert rep.ok, rep.summary()
        assert rep.intervals_checked == 45
        hole = bza.validate_e_bz(BZAffineView(gen), Interval(-3, 3), side=HOLE)
        assert hole.ok, hole.summary()


def test_corrupted_memo_is_caught():
    view = BZAffineView(GEN)
    W = Interval(-2, 2)
    k = my.res_inverse(MayaFinite(W, (-1, 1, 2)))
    view.memo[(k.charge % 3, k.shape)] = view.component(k) + 1
    rep = bza.validate_e_bz(view, W, stab_samples=0)
    assert not rep.ok and rep.plucker


def test_window_restrictions_are_finite_bz_data():
    view = BZAffineView(GEN)
    W = Interval(-3, 2)
    arr = bza.window_array(view, W)
    for K in (Interval(-3, -1), Interval(0, 2), Interval(-1, 1)):
        M = BZFinite(K, bza._sub_array(arr, W, K))
        assert is_bz(M, "e")
