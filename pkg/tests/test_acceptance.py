"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""
import sys
import time
from collections import Counter
from itertools import product

import numpy as np
import pytest

from bzkit import bz_affine as bza
from bzkit import lusztig_affine as la
from bzkit import lusztig_finite as lf
from bzkit import maya as my
from bzkit import verify as vf
from bzkit.graphs import affine_closure
from bzkit.root_data import Interval, WeightVector

from conftest import ACCEPTANCE_LINES
from oracles import young_by_m_construction

pytestmark = pytest.mark.acceptance


def record(key, title, ok, elapsed, limit=None, detail=""):
    in_time = limit is None or elapsed <= limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = f" (limit {limit:.0f}s)" if limit else ""
    line = f"[{status}] {key:<6} {title}: {elapsed:.1f}s{budget}" + (f"  {detail}" if detail else "")
    ACCEPTANCE_LINES[key] = line
    print(line)
    return ok and in_time


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def tally_text(res):
    return ", ".join(f"{k} {p}/{t}" for k, (p, t) in sorted(res.checks.items()))


def test_01_phi_validity():
    with Timer() as t:
        res = vf.suite_plucker(vf.RunConfig(seed=42, samples=200))
    assert record("1", "tropical map gives e-BZ data", res.ok, t.elapsed, 60, tally_text(res)), res.witnesses


def test_02_worked_example():
    with Timer() as t:
        res = vf.suite_phi_example(vf.RunConfig())
    assert record("2", "worked example (1,0,2) by three solvers", res.ok, t.elapsed, None, tally_text(res))


def test_03_crystal_isomorphism():
    with Timer() as t:
        res = vf.suite_crystal_iso(vf.RunConfig(seed=42, samples=200))
    assert record("3", "starred epsilon and operator characterization", res.ok, t.elapsed, None, tally_text(res))


def test_04_uniqueness_oracle():
    with Timer() as t:
        res = vf.suite_uniqueness(vf.RunConfig(depth=3))
    assert record("4", "exhaustive uniqueness of BZ operators", res.ok, t.elapsed, 120, tally_text(res))


def test_05_kostant_connectivity():
    I = Interval(1, 3)
    depth = 6
    with Timer() as t:
        res = vf.suite_kostant(vf.RunConfig(depth=depth))
        # independent count: every entry vector with total height <= depth
        pairs = lf.positive_pairs(I)
        grid = np.array(list(product(range(depth + 1), repeat=len(pairs))), dtype=np.int64)
        cover = np.array([[1 if s <= i < t else 0 for i in I] for s, t in pairs], dtype=np.int64)
        r = grid @ cover
        keep = r.sum(axis=1) <= depth
        brute = Counter(map(tuple, r[keep]))
        want = {str(WeightVector.finite(I, {i: -v for i, v in zip(I, key)})): c for key, c in brute.items()}
        ok = res.ok and want == res.tables["counts"]
    assert record("5", "closure counts equal Kostant enumeration", ok, t.elapsed, None, tally_text(res))


def test_06_maya_suite():
    with Timer() as t:
        res = vf.suite_maya(vf.RunConfig())
        oracle_ok = all(
            young_by_m_construction(k.floor + 1, k.particles()) == (r, lam)
            for r in range(-3, 4)
            for lam in my.partitions_upto(12)
            for k in [my.maya_from_young(r, lam)]
        )
        ok = res.ok and oracle_ok
    assert record("6", "Maya/Young/core bijections and orbit", ok, t.elapsed, 60, tally_text(res))


def test_07_stabilization():
    with Timer() as t:
        res = vf.suite_stabilization(vf.RunConfig(seed=42, generators=50, samples=20))
    assert record("7", "components stable past the threshold interval", res.ok, t.elapsed, None, tally_text(res))


def test_08_maximal_collapse():
    with Timer() as t:
        res = vf.suite_maximal_collapse(vf.RunConfig(l=3, window=(2, 6)))
    assert record("8", "tropical map kills maximal elements", res.ok, t.elapsed, None, tally_text(res))


def test_09_e_bz_validity():
    with Timer() as t:
        res = vf.suite_e_bz(vf.RunConfig(seed=42, generators=20, bz_window=(-6, 6)))
    assert record("9", "sigma-invariant e-BZ data on [-6,6]", res.ok, t.elapsed, 300, tally_text(res))


# -- criterion 10 shares one closure ------------------------------------------

@pytest.fixture(scope="module")
def closure():
    start = time.perf_counter()
    g = affine_closure(3, 6)
    views = [bza.BZAffineView(x) for x in g.nodes]
    return g, views, time.perf_counter() - start


LIMIT_10 = 600


def test_10a_weight_and_epsilon(closure):
    g, views, base = closure
    with Timer() as t:
        bad = [str(x) for x, v in zip(g.nodes, views) if not bza.statistics_match_generator(v)]
    ok = not bad and all(la.is_aperiodic(x) for x in g.nodes)
    assert record("10(a)", "weight and starred epsilon on every node", ok, base + t.elapsed, LIMIT_10,
                  f"{len(g.nodes)} nodes, {len(bad)} mismatches")


def _collisions(fps):
    groups = Counter(fps)
    return sum(1 for c in groups.values() if c > 1)


@pytest.mark.xfail(strict=True, reason="segments ending at the same residue agree on every small diagram")
def test_10b_fingerprints_literal(closure):
    g, views, _ = closure
    with Timer() as t:
        fps = [v.fingerprint((2, 6)) for v in views]
        n = _collisions(fps)
    ok = record("10(b)", "window fingerprints (|r|<=2, <=6 boxes) distinct", n == 0, t.elapsed, LIMIT_10,
                f"{n} colliding groups among {len(fps)} nodes")
    assert ok


def test_10b_fingerprints_with_reflections(closure):
    g, views, _ = closure
    with Timer() as t:
        ks = my.maya_window(2, 6)
        fps = [v.fingerprint((2, 6)) + tuple(v.theta_component(k) for k in ks) for v in views]
        n = _collisions(fps)
    assert record("10(b+)", "same window plus reflected components distinct", n == 0, t.elapsed, LIMIT_10,
                  f"{n} colliding groups among {len(fps)} nodes")


def test_10c_counts(closure):
    g, _, _ = closure
    with Timer() as t:
        counts = Counter(la.weight_affine(x) for x in g.nodes)
        want = Counter(la.weight_affine(x) for h in range(7) for x in la.data_of_height(3, h, aperiodic_only=True))
    assert record("10(c)", "per-weight counts equal aperiodic enumeration", counts == want, t.elapsed, LIMIT_10,
                  f"{len(want)} weights")


def test_11_dual_map():
    with Timer() as t:
        res = vf.suite_dual_map(vf.RunConfig(seed=42, samples=200, generators=10))
    assert record("11", "dual map gives w0-BZ data, epsilon compatible", res.ok, t.elapsed, None, tally_text(res))


def test_12_ltv_decomposition():
    with Timer() as t:
        res = vf.suite_ltv(vf.RunConfig(seed=42, samples=200, l=3))
    assert record("12", "decomposition by maximal elements", res.ok, t.elapsed, None, tally_text(res))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
