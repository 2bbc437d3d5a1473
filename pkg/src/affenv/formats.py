"""Line-oriented text formats for ROBDDs and model sets.

BDD file::

    bdd-v1
    vars 5
    2 4 1 0
    3 3 0 2
    root 3

Each node line is ``id var then else``. Ids 0 and 1 are the
sinks; every child must be defined on an earlier line. Ids are
local to the file and renumbered on load.

Model file::

    models-v1
    vars 5
    01011
    01100

One bitstring per line, leftmost character is variable 0.
Blank lines and lines starting with ``#`` are ignored in both.
"""
from __future__ import annotations

import sys
from pathlib import Path

from affenv.bdd import FALSE, TRUE, Manager, OrderingError
from affenv.models import ModelSet


BDD_TAG = 'bdd-v1'
MODELS_TAG = 'models-v1'


class ParseError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith('#'):
            out.append((no, line))
    return out


def _header(lines, tag):
    if not lines or lines[0][1] != tag:
        raise ParseError(f'expected leading tag line {tag!r}')
    if len(lines) < 2:
        raise ParseError('missing "vars" line')
    no, line = lines[1]
    parts = line.split()
    if len(parts) != 2 or parts[0] != 'vars' or not parts[1].isdigit():
        raise ParseError(f'line {no}: expected "vars <n>", got {line!r}')
    return int(parts[1])


def detect_format(text: str) -> str:
    """Return ``'bdd'`` or ``'models'`` from the tag line."""
    lines = _content_lines(text)
    if lines and lines[0][1] == BDD_TAG:
        return 'bdd'
    if lines and lines[0][1] == MODELS_TAG:
        return 'models'
    raise ParseError('unknown format: no bdd-v1 or models-v1 tag line')


def parse_bdd(text: str, mgr: Manager | None = None) -> tuple[Manager, int]:
    """Load a BDD file into `mgr` (a fresh manager if `None`)."""
    lines = _content_lines(text)
    num_vars = _header(lines, BDD_TAG)
    if mgr is None:
        mgr = Manager(num_vars)
    elif mgr.num_vars != num_vars:
        raise ParseError(
            f'file has {num_vars} variables, manager has {mgr.num_vars}')
    ids = {0: FALSE, 1: TRUE}
    root = None
    for no, line in lines[2:]:
        parts = line.split()
        if root is not None:
            raise ParseError(f'line {no}: content after root line')
        if parts[0] == 'root':
            if len(parts) != 2:
                raise ParseError(f'line {no}: expected "root <id>"')
            root = _lookup(ids, parts[1], no)
            continue
        if len(parts) != 4:
            raise ParseError(f'line {no}: expected "id var then else"')
        try:
            uid, var = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f'line {no}: non-integer field') from None
        if uid in ids:
            raise ParseError(f'line {no}: id {uid} already defined')
        if not 0 <= var < num_vars:
            raise ParseError(f'line {no}: variable {var} out of range')
        hi = _lookup(ids, parts[2], no)
        lo = _lookup(ids, parts[3], no)
        try:
            ids[uid] = mgr.mk_node(var, hi, lo)
        except OrderingError as e:
            raise ParseError(f'line {no}: {e}') from None
    if root is None:
        raise ParseError('missing "root" line')
    return mgr, root


def _lookup(ids, token, no):
    try:
        return ids[int(token)]
    except (ValueError, KeyError):
        raise ParseError(
            f'line {no}: {token!r} is not a previously defined id') from None


def format_bdd(mgr: Manager, root: int) -> str:
    """Serialize the diagram below `root`, children first."""
    order: list[int] = []
    seen = {FALSE, TRUE}
    stack = [(root, False)]
    while stack:
        u, expanded = stack.pop()
        if expanded:
            order.append(u)
            continue
        if u in seen:
            continue
        seen.add(u)
        stack.append((u, True))
        stack.append((mgr.lo(u), False))
        stack.append((mgr.hi(u), False))
    local = {FALSE: 0, TRUE: 1}
    out = [BDD_TAG, f'vars {mgr.num_vars}']
    for u in order:
        local[u] = len(local)
        out.append(
            f'{local[u]} {mgr.var_of(u)} {local[mgr.hi(u)]} {local[mgr.lo(u)]}')
    out.append(f'root {local[root]}')
    return '\n'.join(out) + '\n'


def parse_models(text: str) -> ModelSet:
    lines = _content_lines(text)
    width = _header(lines, MODELS_TAG)
    if width < 1:
        raise ParseError('model files need at least one variable')
    seen = set()
    for no, line in lines[2:]:
        if len(line) != width or set(line) - {'0', '1'}:
            raise ParseError(
                f'line {no}: {line!r} is not a bitstring of width {width}')
        if line in seen:
            raise ParseError(f'line {no}: duplicate model {line}')
        seen.add(line)
    return ModelSet.from_strings(seen, width)


def format_models(m: ModelSet) -> str:
    return '\n'.join([MODELS_TAG, f'vars {m.width}', *m.to_strings()]) + '\n'


def read_text(path: str | Path) -> str:
    if str(path) == '-':
        return sys.stdin.read()
    return Path(path).read_text()


def write_text(path: str | Path, text: str):
    if str(path) == '-':
        sys.stdout.write(text)
        return
    Path(path).write_text(text)
