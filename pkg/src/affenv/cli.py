"""Command-line interface.

Subcommands: envelope, random, check, entails, bench.

Exit statuses:

    0  success (entails: the entailment holds)
    1  entails: no entailment; check: a property failed
    2  bad command-line usage
    3  malformed input file
    4  input beyond an engine's limits (width or memory budget)
    5  file could not be read or written
"""
from __future__ import annotations

import argparse
import logging
import sys

from affenv import formats
from affenv.bdd import AuditError, Manager
from affenv.bench import DEFAULT_BUDGET, format_records, run_bench
from affenv.engines import ENGINE_NAMES, envelope
from affenv.envelope import is_affine, path_variables
from affenv.models import (
    BudgetExceeded, WidthError, modelset_from_bdd, modelset_to_bdd)
from affenv.randgen import GenConfig, rand_bdd


EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_LIMIT = 4
EXIT_IO = 5

log = logging.getLogger('affenv')


class _Fail(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status


def _load(path, mgr=None):
    """Read a BDD or model file; return (manager, root, format)."""
    try:
        text = formats.read_text(path)
    except OSError as e:
        raise _Fail(EXIT_IO, f'cannot read {path}: {e}') from None
    try:
        kind = formats.detect_format(text)
        if kind == 'bdd':
            mgr, root = formats.parse_bdd(text, mgr)
            return mgr, root, kind
        models = formats.parse_models(text)
    except WidthError as e:
        raise _Fail(EXIT_LIMIT, f'{path}: {e}') from None
    except formats.ParseError as e:
        raise _Fail(EXIT_PARSE, f'{path}: {e}') from None
    if mgr is None:
        mgr = Manager(models.width)
    elif mgr.num_vars != models.width:
        raise _Fail(EXIT_PARSE, f'{path}: has {models.width} variables, '
                                f'expected {mgr.num_vars}')
    return mgr, modelset_to_bdd(mgr, models), kind


def _write(path, text):
    try:
        formats.write_text(path, text)
    except OSError as e:
        raise _Fail(EXIT_IO, f'cannot write {path}: {e}') from None


def _dump(mgr, root, kind):
    if kind == 'models':
        return formats.format_models(modelset_from_bdd(mgr, root))
    return formats.format_bdd(mgr, root)


def cmd_envelope(args):
    mgr, root, kind = _load(args.in_path)
    try:
        env = envelope(args.engine, mgr, root, args.memory_budget)
    except (WidthError, BudgetExceeded) as e:
        raise _Fail(EXIT_LIMIT, f'{args.engine}: {e}') from None
    try:
        text = _dump(mgr, env, args.format or kind)
    except WidthError as e:
        raise _Fail(EXIT_LIMIT, str(e)) from None
    _write(args.out_path, text)
    return EXIT_OK


def cmd_random(args):
    try:
        cfg = GenConfig(args.num_vars, args.pr, args.seed)
    except ValueError as e:
        raise _Fail(EXIT_USAGE, str(e)) from None
    mgr = Manager(cfg.num_vars)
    root = rand_bdd(mgr, cfg)
    _write(args.out_path, formats.format_bdd(mgr, root))
    return EXIT_OK


def check_report(mgr: Manager, root: int) -> tuple[list[str], bool]:
    """Report lines for `check` and whether every check passed."""
    ok = True
    lines = [f'num_vars: {mgr.num_vars}', f'nodes: {mgr.node_count(root)}']
    try:
        mgr.audit(root)
        lines.append('audit: pass')
    except AuditError as e:
        ok = False
        lines.append(f'audit: fail ({e})')
    lines.append(f'sat_count: {mgr.sat_count(root)}')
    lines.append('vars: ' + ' '.join(map(str, sorted(mgr.vars_of(root)))))
    affine = is_affine(mgr, root)
    lines.append(f'is_affine: {"true" if affine else "false"}')
    if affine:
        uniform = path_variables(mgr, root) is not None
        ok = ok and uniform
        lines.append(f'path_property: {"pass" if uniform else "fail"}')
    else:
        lines.append('path_property: n/a')
    return lines, ok


def cmd_check(args):
    mgr, root, _ = _load(args.in_path)
    lines, ok = check_report(mgr, root)
    print('\n'.join(lines))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_entails(args):
    mgr, lhs, _ = _load(args.lhs_path)
    _, rhs, _ = _load(args.rhs_path, mgr)
    holds = mgr.entails(lhs, rhs)
    print('entails: true' if holds else 'entails: false')
    return EXIT_OK if holds else EXIT_FALSE


def _int_list(text):
    try:
        return [int(t) for t in text.split(',') if t]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'expected comma-separated integers, got {text!r}') from None


def _engine_list(text):
    names = [t for t in text.split(',') if t]
    for name in names:
        if name not in ENGINE_NAMES:
            raise argparse.ArgumentTypeError(
                f'unknown engine {name!r}; choose from {", ".join(ENGINE_NAMES)}')
    return names


def cmd_bench(args):
    for n in args.vars_list:
        try:
            GenConfig(n, args.pr)
        except ValueError as e:
            raise _Fail(EXIT_USAGE, str(e)) from None
    records = run_bench(args.vars_list, args.pr, args.reps, args.seed,
                        args.engines, args.memory_budget)
    _write(args.out_path, format_records(records, args.seed))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog='affenv', description='Affine envelopes of Boolean functions.')
    p.add_argument('-v', '--verbose', action='store_true',
                   help='log progress to stderr')
    sub = p.add_subparsers(dest='command', required=True)

    s = sub.add_parser('envelope', help='compute an affine envelope')
    s.add_argument('--in-path', required=True)
    s.add_argument('--out-path', default='-')
    s.add_argument('--engine', choices=ENGINE_NAMES, default='robdd')
    s.add_argument('--format', choices=('bdd', 'models'),
                   help='output format (default: same as input)')
    s.add_argument('--memory-budget', type=int, default=None,
                   help='max models held by set engines')
    s.set_defaults(func=cmd_envelope)

    s = sub.add_parser('random', help='write a random function')
    s.add_argument('--num-vars', type=int, required=True)
    s.add_argument('--pr', type=int, required=True)
    s.add_argument('--seed', type=int, default=0)
    s.add_argument('--out-path', default='-')
    s.set_defaults(func=cmd_random)

    s = sub.add_parser('check', help='audit a diagram and report properties')
    s.add_argument('--in-path', required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser('entails', help='exit 0 iff lhs entails rhs')
    s.add_argument('--lhs-path', required=True)
    s.add_argument('--rhs-path', required=True)
    s.set_defaults(func=cmd_entails)

    s = sub.add_parser('bench', help='time engines on random functions')
    s.add_argument('--vars-list', type=_int_list, required=True)
    s.add_argument('--pr', type=int, required=True)
    s.add_argument('--reps', type=int, default=100)
    s.add_argument('--seed', type=int, default=0)
    s.add_argument('--engines', type=_engine_list,
                   default=['robdd', 'models-fixpoint'])
    s.add_argument('--out-path', default='-')
    s.add_argument('--memory-budget', type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr, format='%(name)s: %(message)s')
    try:
        return args.func(args)
    except _Fail as e:
        print(f'affenv: {e}', file=sys.stderr)
        return e.status


if __name__ == '__main__':
    sys.exit(main())
