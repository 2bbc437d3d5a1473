"""Sets of models as sorted arrays of bitstrings.

A model over `width` variables is stored as an integer whose
most significant of `width` bits is variable 0, so integer
order coincides with the lexicographic order of bitstrings.

Besides the conversions to and from ROBDDs, the module holds
two envelope engines working on explicit model sets
(`aff_fixpoint`, `aff_incremental`) and a brute-force
three-way-xor closure (`xor3_closure`) used as ground truth.
"""
from __future__ import annotations

import bisect
from collections.abc import Iterable

import numpy as np

from affenv.bdd import FALSE, TRUE, Manager


MAX_WIDTH = 24
# pairwise products are formed in blocks of about this many entries
_BLOCK = 1 << 22


class WidthError(ValueError):
    """Model width outside what the set engines support."""


class BudgetExceeded(MemoryError):
    """A set engine would hold more models than allowed."""


def _parse_bits(s: str) -> int:
    if not s or set(s) - {'0', '1'}:
        raise ValueError(f'not a bitstring: {s!r}')
    return int(s, 2)


def xor_bits(a: str, b: str) -> str:
    """Pointwise xor of two bitstrings of equal length."""
    if len(a) != len(b):
        raise ValueError(f'width mismatch: {len(a)} vs {len(b)}')
    return format(_parse_bits(a) ^ _parse_bits(b), f'0{len(a)}b')


class ModelSet:
    """Sorted, duplicate-free set of bitstrings of one width."""

    __slots__ = ('width', 'members')

    def __init__(self, width: int, members: Iterable = ()):
        if not 0 <= width <= MAX_WIDTH:
            raise WidthError(
                f'width {width} outside [0, {MAX_WIDTH}]')
        self.width = width
        arr = np.unique(np.asarray(list(members) if not isinstance(
            members, np.ndarray) else members, dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= 1 << width):
            raise ValueError(f'member does not fit in {width} bits')
        self.members = arr

    @classmethod
    def from_strings(cls, bitstrings: Iterable[str], width: int | None = None):
        strings = list(bitstrings)
        if width is None:
            if not strings:
                raise ValueError('width needed for an empty set')
            width = len(strings[0])
        for s in strings:
            if len(s) != width:
                raise ValueError(f'{s!r} does not have width {width}')
        return cls(width, [_parse_bits(s) for s in strings])

    def to_strings(self) -> list[str]:
        fmt = f'0{self.width}b'
        return [format(int(m), fmt) if self.width else ''
                for m in self.members]

    def __len__(self):
        return int(self.members.size)

    def __iter__(self):
        return iter(self.to_strings())

    def __contains__(self, item) -> bool:
        x = _parse_bits(item) if isinstance(item, str) else int(item)
        i = np.searchsorted(self.members, x)
        return bool(i < self.members.size and self.members[i] == x)

    def __eq__(self, other):
        if not isinstance(other, ModelSet):
            return NotImplemented
        return (self.width == other.width
                and np.array_equal(self.members, other.members))

    def __hash__(self):
        return hash((self.width, self.members.tobytes()))

    def __repr__(self):
        shown = self.to_strings()
        if len(shown) > 8:
            shown = shown[:8] + ['...']
        return f'ModelSet({self.width}, {{{", ".join(shown)}}})'

    def issubset(self, other: ModelSet) -> bool:
        return bool(np.isin(self.members, other.members).all())


def _shift_value(mu, width: int) -> int:
    if isinstance(mu, str):
        if len(mu) != width:
            raise ValueError(f'width mismatch: {len(mu)} vs {width}')
        return _parse_bits(mu)
    return int(mu)


def translate_set(m: ModelSet, mu) -> ModelSet:
    """The set `{mu ^ nu | nu in m}`."""
    return ModelSet(m.width, m.members ^ np.int64(_shift_value(mu, m.width)))


def _rows(width: int, cols: int) -> int:
    # blocks near the universe size, so a full universe is noticed early
    return max(1, min(_BLOCK, 1 << width) // cols)


def _check_budget(count: int, max_models: int | None):
    if max_models is not None and count > max_models:
        raise BudgetExceeded(
            f'{count} models exceed the budget of {max_models}')


def aff_fixpoint(m: ModelSet, max_models: int | None = None,
                 mu: int | str | None = None) -> ModelSet:
    """Envelope by closing a translated copy under pairwise xor.

    Translates `m` by one of its members (the least, unless
    `mu` is given), then adds all pairwise xors not yet present
    until nothing new appears, and translates back.
    """
    if not len(m):
        return m
    size = 1 << m.width
    mu = int(m.members[0]) if mu is None else _shift_value(mu, m.width)
    if mu not in m:
        raise ValueError('mu must be a member of the set')
    closed = np.zeros(size, dtype=bool)
    new = m.members ^ mu
    count = 0
    while new.size:
        closed[new] = True
        count += new.size
        _check_budget(count, max_models)
        if count == size:
            break
        n_set = np.flatnonzero(closed)
        # pairs inside the previous set were covered last round
        found = np.zeros(size, dtype=bool)
        rows = _rows(m.width, n_set.size)
        for start in range(0, new.size, rows):
            block = (new[start:start + rows, None] ^ n_set[None, :]).ravel()
            found[block[~closed[block]]] = True
            extra = np.count_nonzero(found)
            _check_budget(count + extra, max_models)
            if count + extra == size:
                break
        new = np.flatnonzero(found)
    n_set = np.flatnonzero(closed)
    return ModelSet(m.width, n_set ^ mu)


def aff_incremental(m: ModelSet, max_models: int | None = None,
                    mu: int | str | None = None) -> ModelSet:
    """Envelope by folding the translated models into a vector space.

    Starts from the zero vector and, for each translated model
    `nu`, replaces the space `N` by `N | (N ^ nu)`.
    """
    if not len(m):
        return m
    mu = int(m.members[0]) if mu is None else _shift_value(mu, m.width)
    if mu not in m:
        raise ValueError('mu must be a member of the set')
    size = 1 << m.width
    space = np.zeros(1, dtype=np.int64)
    for nu in np.unique(m.members ^ mu):
        if space.size == size:
            break
        if nu == 0:
            continue
        i = np.searchsorted(space, nu)
        if i < space.size and space[i] == nu:
            # space is a vector space, so space ^ nu == space
            continue
        _check_budget(2 * space.size, max_models)
        space = np.sort(np.concatenate((space, space ^ nu)))
    return ModelSet(m.width, space ^ mu)


def xor3_closure(m: ModelSet, max_models: int | None = None) -> ModelSet:
    """Smallest superset of `m` closed under three-way xor.

    Plain fixpoint iteration over all triples, with no
    translation step.
    """
    size = 1 << m.width
    closed = np.zeros(size, dtype=bool)
    members = m.members
    closed[members] = True
    while members.size and members.size < size:
        pairs = np.zeros(size, dtype=bool)
        rows = _rows(m.width, members.size)
        for start in range(0, members.size, rows):
            pairs[(members[start:start + rows, None]
                   ^ members[None, :]).ravel()] = True
            if pairs.all():
                break
        pair_vals = np.flatnonzero(pairs)
        grown = closed.copy()
        rows = _rows(m.width, members.size)
        for start in range(0, pair_vals.size, rows):
            grown[(pair_vals[start:start + rows, None]
                   ^ members[None, :]).ravel()] = True
            if grown.all():
                break
        if np.array_equal(grown, closed):
            break
        closed = grown
        members = np.flatnonzero(closed)
        _check_budget(members.size, max_models)
    return ModelSet(m.width, np.flatnonzero(closed))


def modelset_from_bdd(mgr: Manager, r: int) -> ModelSet:
    """Models of `r` over all of the manager's variables."""
    if mgr.num_vars > MAX_WIDTH:
        raise WidthError(
            f'{mgr.num_vars} variables exceed the limit of {MAX_WIDTH}')
    return ModelSet(mgr.num_vars, mgr.model_array(r))


def modelset_to_bdd(mgr: Manager, m: ModelSet) -> int:
    """Canonical ROBDD whose models are exactly `m`.

    Splits the sorted members on one variable at a time; a
    range holding every completion of its prefix becomes `TRUE`.
    """
    n = mgr.num_vars
    if m.width != n:
        raise WidthError(
            f'model width {m.width} does not match {n} variables')
    vals = m.members.tolist()
    mk = mgr.mk_node

    def build(start, end, level, base):
        if start == end:
            return FALSE
        if end - start == 1 << (n - level):
            return TRUE
        bit = 1 << (n - 1 - level)
        mid = bisect.bisect_left(vals, base | bit, start, end)
        return mk(level,
                  build(mid, end, level + 1, base | bit),
                  build(start, mid, level + 1, base))

    return build(0, len(vals), 0, 0)
