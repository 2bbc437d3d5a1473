"""Seeded random Boolean functions as ROBDDs.

The top `num_vars - pr` levels form a complete tree. Below that,
each child continues with probability 1/2 and is `FALSE`
otherwise; the last level gets random sinks. A valuation is
therefore a model with probability `2 ** -pr` (for `pr >= 1`).

Randomness comes from `random.Random` (MT19937) seeded with
`GenConfig.seed`. Draws happen depth first, then-branch before
else-branch, so equal configurations give equal functions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from affenv.bdd import FALSE, TRUE, Manager


RNG_NAME = 'mt19937'


@dataclass(frozen=True)
class GenConfig:
    num_vars: int
    pr: int
    seed: int = 0

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError(f'num_vars must be >= 1, got {self.num_vars}')
        if not 0 <= self.pr <= self.num_vars:
            raise ValueError(
                f'pr must lie in [0, {self.num_vars}], got {self.pr}')


def rand_bdd(mgr: Manager, cfg: GenConfig) -> int:
    """Build the random function described by `cfg` in `mgr`."""
    n = cfg.num_vars
    if mgr.num_vars != n:
        raise ValueError(
            f'manager has {mgr.num_vars} variables, config wants {n}')
    coin = random.Random(cfg.seed).getrandbits
    mk = mgr.mk_node
    last = n - 1
    complete = n - cfg.pr

    def make(m):
        if m == last:
            t = FALSE if coin(1) else TRUE
            e = FALSE if coin(1) else TRUE
        elif m < complete:
            t = make(m + 1)
            e = make(m + 1)
        else:
            t = make(m + 1) if coin(1) else FALSE
            e = make(m + 1) if coin(1) else FALSE
        return mk(m, t, e)

    return make(0)


def derive_seed(seed: int, *key: int) -> int:
    """64-bit seed for the stream identified by `key` under `seed`."""
    ss = np.random.SeedSequence([seed, *key])
    return int(ss.generate_state(1, dtype=np.uint64)[0])
