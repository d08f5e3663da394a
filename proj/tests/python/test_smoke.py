import json
import math

import numpy as np
import pytest

import bmmtc


def test_sample_shapes_and_determinism():
    p = [[0.1] * 6, [0.9] * 6]
    w = [0.5, 0.5]
    x1, t1, digest1 = bmmtc.sample(p, w, 200, 7)
    x2, t2, digest2 = bmmtc.sample(p, w, 200, 7, threads=4)
    assert x1.shape == (200, 6)
    assert t1.shape == (200,)
    assert digest1 == digest2
    assert np.array_equal(x1, x2)
    assert np.array_equal(t1, t2)
    assert set(np.unique(x1)) <= {0, 1}
    assert set(np.unique(t1)) <= {1, 2}


def test_total_correlation_goldens():
    dup = np.array([[0, 0], [1, 1]], dtype=np.uint8)
    assert bmmtc.total_correlation(dup) == pytest.approx(math.log(2), abs=1e-15)
    table = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=np.uint8)
    assert bmmtc.total_correlation(table) == 0.0
    assert bmmtc.total_correlation_via_entropies(dup) == pytest.approx(
        math.log(2), abs=1e-12
    )


def test_mtc_and_columns():
    y = np.array([[0, 0, 0], [1, 1, 0], [0, 0, 1], [1, 1, 0]], dtype=np.uint8)
    r = bmmtc.max_total_correlation(y, 2)
    assert r["columns"] == [0, 1]
    assert r["exhaustive"] is True
    assert r["subsets_examined"] == 3
    assert r["value"] == pytest.approx(math.log(2), abs=1e-12)


def test_asymptotic_oracle():
    v = bmmtc.asymptotic_total_correlation([[0.1, 0.1], [0.9, 0.9]], [0.5, 0.5])
    assert v == pytest.approx(0.221757, abs=1e-5)
    assert bmmtc.asymptotic_total_correlation([[0.3, 0.7]], [1.0]) == 0.0


def test_derive_algo_params():
    p = bmmtc.derive_algo_params(0.5, 0.5, 0.2, 20)
    assert p["d"] == 17
    assert p["tau"] == pytest.approx(0.330259, abs=1e-5)
    with pytest.raises(ValueError):
        bmmtc.derive_algo_params(0.5, 0.4, 0.1, 40)


def test_cluster_two_blocks():
    x = np.array(
        [[0, 0, 0, 0]] * 3 + [[1, 1, 1, 1]] * 3,
        dtype=np.uint8,
    )
    run = bmmtc.cluster(x, alpha=0.5, delta=0.9, epsilon=0.2, l_sep=4, d=2)
    assert run["accepted"] is True
    assert run["accepted_kappa"] == 2
    assert list(run["labels"]) == [1, 1, 1, 2, 2, 2]
    assert bmmtc.is_eps_correct(run["labels"], [1, 1, 1, 2, 2, 2], 0.0)


def test_evaluation_helpers():
    assert bmmtc.misclustering_rate([1, 1, 1, 1], [1, 1, 2, 2]) == pytest.approx(0.5)
    assert bmmtc.is_eps_correct([1, 2, 3, 4], [1, 1, 2, 2], 0.0)
    rep = bmmtc.separability([[0.1, 0.1, 0.5], [0.9, 0.9, 0.5]], 0.4)
    assert rep["l_sep"] == 2


def test_bounds_and_thresholds():
    assert bmmtc.bound_mixture_low_tc(0, 3, 0.33) == pytest.approx(16.0)
    assert bmmtc.min_n_for_cluster_sizes(0.5, 2, 0.1) == 33
    l_min, n_min = bmmtc.theorem1_thresholds(0.5, 0.5, 0.2, 0.05, 64.0)
    assert n_min / l_min == pytest.approx(math.log(64.0 / 0.05))


def test_run_experiment():
    config = {
        "experiment": "min_cluster",
        "model": {"p": [[0.0], [1.0]], "w": [0.5, 0.5]},
        "alpha": 0.5,
        "n": 4,
        "trials": 2000,
        "seed": 11,
    }
    out = bmmtc.run_experiment(json.dumps(config))
    assert out["trials"] == 2000
    assert out["frequency"] == pytest.approx(0.125, abs=0.03)
    assert out["cp99_lower"] <= 0.125 <= out["cp99_upper"]
