import math
import random

import pytest

from affenv.bdd import FALSE, Manager
from affenv.randgen import GenConfig, derive_seed, rand_bdd


def density(cfg, mgr=None):
    mgr = mgr or Manager(cfg.num_vars)
    return mgr.sat_count(rand_bdd(mgr, cfg)) / 2 ** cfg.num_vars


def test_same_config_same_node():
    mgr = Manager(10)
    cfg = GenConfig(10, 4, seed=99)
    assert rand_bdd(mgr, cfg) == rand_bdd(mgr, cfg)


def test_same_config_same_function_across_managers():
    cfg = GenConfig(9, 3, seed=5)
    a, b = Manager(9), Manager(9)
    ra, rb = rand_bdd(a, cfg), rand_bdd(b, cfg)
    assert list(a.enumerate_models(ra)) == list(b.enumerate_models(rb))


def test_single_variable_follows_the_stream():
    for seed in range(20):
        draws = random.Random(seed).getrandbits
        hi = 0 if draws(1) else 1
        lo = 0 if draws(1) else 1
        mgr = Manager(1)
        r = rand_bdd(mgr, GenConfig(1, 0, seed))
        assert mgr.eval(r, (1,)) == hi
        assert mgr.eval(r, (0,)) == lo


def test_bad_configs():
    with pytest.raises(ValueError):
        GenConfig(0, 0)
    with pytest.raises(ValueError):
        GenConfig(4, 5)
    with pytest.raises(ValueError):
        GenConfig(4, -1)
    with pytest.raises(ValueError):
        rand_bdd(Manager(3), GenConfig(4, 1))


def test_generated_diagrams_pass_audit():
    for n in range(1, 13):
        for pr in range(n + 1):
            mgr = Manager(n)
            for seed in range(5):
                mgr.audit(rand_bdd(mgr, GenConfig(n, pr, seed)))


def test_sat_count_in_range():
    for seed in range(50):
        mgr = Manager(5)
        r = rand_bdd(mgr, GenConfig(5, 0, seed))
        assert 0 <= mgr.sat_count(r) <= 32


def test_full_density_is_often_false():
    falses = sum(
        rand_bdd(Manager(12), GenConfig(12, 12, s)) == FALSE
        for s in range(200))
    assert falses > 50


@pytest.mark.parametrize('n,pr', [(6, 1), (8, 3), (10, 6)])
def test_density_matches_calibration(n, pr):
    draws = [density(GenConfig(n, pr, s)) for s in range(3000)]
    mean = sum(draws) / len(draws)
    var = sum((d - mean) ** 2 for d in draws) / (len(draws) - 1)
    assert abs(mean - 2 ** -pr) < 3 * math.sqrt(var / len(draws))


def test_density_decreases_with_pr():
    n = 8
    means = []
    for pr in range(1, n + 1):
        draws = [density(GenConfig(n, pr, s)) for s in range(2000)]
        means.append(sum(draws) / len(draws))
    assert all(a >= b for a, b in zip(means, means[1:]))


def test_derive_seed_is_stable_and_distinct():
    assert derive_seed(1, 12, 0) == derive_seed(1, 12, 0)
    seeds = {derive_seed(1, n, k) for n in range(5) for k in range(50)}
    assert len(seeds) == 250
    assert all(0 <= s < 2 ** 64 for s in seeds)
