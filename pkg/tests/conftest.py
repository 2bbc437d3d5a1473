import itertools
import random

import pytest

from affenv.bdd import FALSE, TRUE, Manager


FOUR_MODELS = ['01011', '01100', '10111', '11001']
FOUR_ENVELOPE = ['01011', '01100', '10111', '11001',
                 '10000', '11110', '00010', '00101']
FIVE_MODELS = ['00011', '00110', '01001', '01101', '10101']
# variable names used in the worked example
V, W, X, Y, Z = range(5)


def bits(i, n):
    """Tuple of the n bits of i, most significant first."""
    return tuple((i >> (n - 1 - k)) & 1 for k in range(n))


def valuations(n):
    return itertools.product((0, 1), repeat=n)


def from_table(mgr, table):
    """ROBDD of a truth table indexed by valuation integer.

    Shannon expansion using nothing but `mk_node`.
    """
    n = mgr.num_vars

    def build(level, base):
        if level == n:
            return TRUE if table[base] else FALSE
        bit = 1 << (n - 1 - level)
        return mgr.mk_node(
            level, build(level + 1, base | bit), build(level + 1, base))

    return build(0, 0)


def from_models(mgr, models):
    n = mgr.num_vars
    want = {int(m, 2) if isinstance(m, str) else m for m in models}
    return from_table(mgr, [i in want for i in range(1 << n)])


def table_of(mgr, r):
    n = mgr.num_vars
    return [mgr.eval(r, bits(i, n)) for i in range(1 << n)]


def models_of(mgr, r):
    return {i for i, b in enumerate(table_of(mgr, r)) if b}


def brute_xor3(models):
    """Three-way-xor closure of a set of ints, by plain iteration."""
    closed = set(models)
    while True:
        pairs = {a ^ b for a in closed for b in closed}
        new = {p ^ c for p in pairs for c in closed}
        if new <= closed:
            return closed
        closed |= new


def random_table(rng, n, density=0.5):
    return [rng.random() < density for _ in range(1 << n)]


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def five():
    mgr = Manager(5)
    return mgr, from_models(mgr, FIVE_MODELS)


# acceptance reporting: one line per criterion at the end of the run

_criteria = []


def pytest_configure(config):
    config.addinivalue_line(
        'markers', 'acceptance(name): exit criterion reported at the end')


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker('acceptance')
    if marker is None:
        return
    if rep.when == 'call' or (rep.when == 'setup' and rep.outcome != 'passed'):
        _criteria.append((marker.args[0], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section('acceptance criteria')
    for name, outcome in _criteria:
        status = 'PASS' if outcome == 'passed' else 'FAIL'
        terminalreporter.write_line(f'{status}  {name}')
