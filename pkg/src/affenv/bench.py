"""Timing harness: mean envelope time per engine and size.

All engines see the same random functions: repetition `k` at
`n` variables uses the generator seeded by
`derive_seed(seed, n, k)`. Only the envelope computation is
timed; generation and, for set engines, model extraction are
not.
"""
from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from affenv.bdd import Manager
from affenv.envelope import to_aff
from affenv.models import BudgetExceeded, modelset_from_bdd
from affenv.engines import ENGINE_NAMES, SET_ENGINES
from affenv.randgen import RNG_NAME, GenConfig, derive_seed, rand_bdd


logger = logging.getLogger(__name__)

BENCH_TAG = 'bench-v1'
COLUMNS = ('engine', 'n', 'pr', 'reps', 'mean_ms')
SKIP = '-'
ERROR = 'error'
# enough for 2**15 models, too little for 2**18
DEFAULT_BUDGET = 1 << 16


@dataclass(frozen=True)
class BenchRecord:
    engine: str
    num_vars: int
    pr: int
    reps: int
    mean_ms: float | None
    status: str = 'ok'  # 'ok', 'skip' or 'error'

    def row(self) -> tuple[str, ...]:
        if self.status == 'ok':
            mean = f'{self.mean_ms:.3f}'
        else:
            mean = SKIP if self.status == 'skip' else ERROR
        return (self.engine, str(self.num_vars), str(self.pr),
                str(self.reps), mean)


def _timer(engine: str, max_models: int | None) -> Callable[[Manager, int], float]:
    if engine == 'robdd':
        def run(mgr, root):
            t0 = time.perf_counter()
            to_aff(mgr, root)
            return time.perf_counter() - t0
        return run
    fn = SET_ENGINES[engine]

    def run(mgr, root):
        models = modelset_from_bdd(mgr, root)
        t0 = time.perf_counter()
        fn(models, max_models)
        return time.perf_counter() - t0
    return run


def bench_cell(engine: str, num_vars: int, pr: int, reps: int, seed: int,
               max_models: int | None = DEFAULT_BUDGET) -> BenchRecord:
    """Time `reps` envelopes of random functions for one engine and size."""
    if engine not in ENGINE_NAMES:
        raise ValueError(f'unknown engine {engine!r}')
    if reps < 1:
        raise ValueError('reps must be >= 1')
    run = _timer(engine, max_models)
    total = 0.0
    for k in range(reps):
        cfg = GenConfig(num_vars, pr, derive_seed(seed, num_vars, k))
        mgr = Manager(num_vars)
        root = rand_bdd(mgr, cfg)
        try:
            total += run(mgr, root)
        except (BudgetExceeded, MemoryError) as e:
            logger.info('%s n=%d: skipped (%s)', engine, num_vars, e)
            return BenchRecord(engine, num_vars, pr, reps, None, 'skip')
        except Exception:
            logger.exception('%s n=%d: failed at rep %d', engine, num_vars, k)
            return BenchRecord(engine, num_vars, pr, reps, None, 'error')
    return BenchRecord(engine, num_vars, pr, reps, 1e3 * total / reps)


def run_bench(vars_list: Iterable[int], pr: int, reps: int, seed: int,
              engines: Iterable[str],
              max_models: int | None = DEFAULT_BUDGET) -> list[BenchRecord]:
    engines = list(engines)
    records = []
    for n in vars_list:
        for engine in engines:
            records.append(bench_cell(engine, n, pr, reps, seed, max_models))
            logger.info('%s', records[-1])
    return records


def format_records(records: Iterable[BenchRecord], seed: int,
                   sep: str = ',') -> str:
    lines = [f'# {BENCH_TAG} rng={RNG_NAME} seed={seed}', sep.join(COLUMNS)]
    lines.extend(sep.join(r.row()) for r in records)
    return '\n'.join(lines) + '\n'


def parse_records(text: str, sep: str = ',') -> list[BenchRecord]:
    """Inverse of `format_records` (timings rounded to microseconds)."""
    rows = [line for line in text.splitlines()
            if line and not line.startswith('#')]
    if not rows or tuple(rows[0].split(sep)) != COLUMNS:
        raise ValueError('missing bench header row')
    out = []
    for line in rows[1:]:
        engine, n, pr, reps, mean = line.split(sep)
        if mean == SKIP:
            out.append(BenchRecord(engine, int(n), int(pr), int(reps), None, 'skip'))
        elif mean == ERROR:
            out.append(BenchRecord(engine, int(n), int(pr), int(reps), None, 'error'))
        else:
            out.append(BenchRecord(engine, int(n), int(pr), int(reps), float(mean)))
    return out
