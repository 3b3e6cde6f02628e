import json

import pytest

from bzkit import verify as vf

SMALL = vf.RunConfig(seed=3, samples=6, depth=2, generators=2, bz_window=(-2, 2), window=(1, 3))


@pytest.mark.parametrize("name", sorted(set(vf.SUITES) - {"corrupted-fixture", "thm-main"}))
def test_suites_pass_at_small_size(name):
    res = vf.SUITES[name](SMALL)
    assert res.ok, res.to_json()
    assert res.anchor and res.checks


def test_main_suite_small_depth():
    # at depth 2 the plain component window already separates every node
    assert vf.suite_thm_main(SMALL).ok


def test_corrupted_fixture_fails():
    res = vf.suite_corrupted(SMALL)
    assert not res.ok and res.witnesses


def test_threaded_run_is_deterministic(monkeypatch):
    names = ["plucker", "maya", "ltv"]
    one = [r.to_json() for r in vf.run_suites(names, SMALL)]
    monkeypatch.setenv("BZKIT_THREADS", "3")
    assert vf.thread_cap() == 3
    three = [r.to_json() for r in vf.run_suites(names, SMALL)]
    assert json.dumps(one) == json.dumps(three)


def test_config_validation():
    with pytest.raises(ValueError):
        vf.RunConfig(samples=-1)
    with pytest.raises(ValueError):
        vf.RunConfig(l=2)
    with pytest.raises(ValueError):
        vf.RunConfig(fingerprint="hash")


def test_partition_counts():
    assert [vf.partition_count(m) for m in range(6)] == [1, 1, 2, 3, 5, 7]
