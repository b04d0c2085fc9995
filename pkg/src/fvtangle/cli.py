"""``ft``: command-line front end.

Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys

from . import algebra, census, generate, perm
from .gauss import CanonicalMode, DiagramError, parse, serialize, validate
from .moves import MoveError, bfs_equivalent, format_path
from .sorter import STRATEGIES, canonicalize, fingerprint, format_trace, parse_trace, verify_trace

MODES = [m.value for m in CanonicalMode]


class DomainError(Exception):
    pass


def _read(path):
    try:
        if path == '-':
            return sys.stdin.read()
        with open(path, encoding='utf-8') as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f'{path}: {exc.strerror}') from None


def _load(path, strict=True):
    try:
        return parse(_read(path), strict=strict)
    except DiagramError as exc:
        raise DomainError(f'{path}: {exc}') from None


def cmd_validate(args, out):
    d = _load(args.file, strict=False)
    bad = validate(d)
    if bad is not None:
        raise DomainError(f'{args.file}: {bad.message}')
    out.write('valid\n')


def cmd_canon(args, out):
    d = _load(args.file)
    c, trace = canonicalize(d, args.mode, args.strategy, args.seed, expand=args.trace)
    out.write(serialize(c))
    if args.trace:
        out.write('\n' + format_trace(trace))


def cmd_eq(args, out):
    a, b = _load(args.a), _load(args.b)
    fa = fingerprint(canonicalize(a, args.mode, expand=False)[0])
    fb = fingerprint(canonicalize(b, args.mode, expand=False)[0])
    out.write('equal\n' if fa == fb else 'distinct\n')


def cmd_trace(args, out):
    d = _load(args.file)
    if args.verify is None:
        out.write(format_trace(canonicalize(d, args.mode)[1]))
        return
    try:
        trace = parse_trace(_read(args.verify))
    except (ValueError, MoveError) as exc:
        raise DomainError(f'{args.verify}: {exc}') from None
    check = verify_trace(d, trace)
    if not check.ok:
        raise DomainError(f'trace rejected at step {check.step}: {check.message}')
    out.write(f'ok {check.step} steps\n')


def cmd_census(args, out):
    if args.list:
        records = []
        for k in range(args.max_crossings + 1):
            records += [serialize(d) for d in
                        census.enumerate_canonical(args.strands, k, args.mode)]
        out.write('\n'.join(records))
    else:
        out.write(census.format_census(
            census.census_table(args.strands, args.max_crossings, args.mode)) + '\n')


def cmd_braid(args, out):
    try:
        word = algebra.parse_word(args.word)
        out.write(serialize(algebra.braid_invariant(args.strands, word, args.mode)))
    except algebra.WordError as exc:
        raise DomainError(str(exc)) from None


def cmd_perm(args, out):
    text = _read(args.file)
    try:
        if args.direction == 'encode':
            out.write(perm.format_sperm(perm.encode(parse(text))))
        else:
            out.write(serialize(perm.decode(perm.parse_sperm(text))))
    except ValueError as exc:
        raise DomainError(f'{args.file}: {exc}') from None


def cmd_rand(args, out):
    out.write(serialize(generate.rand(args.seed, args.strands, args.crossings,
                                      args.moves, args.mode)))


def cmd_oracle_eq(args, out):
    a, b = _load(args.a), _load(args.b)
    try:
        res = bfs_equivalent(a, b, args.max_crossings, args.max_states, args.mode)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    out.write(f'{res.verdict}\n')
    if res.equivalent:
        out.write(format_path(res.path))


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError('must be at least 1')
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError('must be non-negative')
    return v


def build_parser():
    p = argparse.ArgumentParser(prog='ft', description='Flat virtual pure tangles.')
    sub = p.add_subparsers(dest='command', required=True)

    def mode_arg(sp, required=False):
        kw = {'required': True} if required else {'default': 'framed'}
        sp.add_argument('--mode', choices=MODES, **kw)

    sp = sub.add_parser('validate', help='parse and check a diagram file')
    sp.add_argument('file')
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser('canon', help='print the canonical form')
    mode_arg(sp)
    sp.add_argument('--trace', action='store_true', help='append the sorting trace')
    sp.add_argument('--strategy', choices=STRATEGIES, default='first_site')
    sp.add_argument('--seed', type=int, default=None)
    sp.add_argument('file')
    sp.set_defaults(func=cmd_canon)

    sp = sub.add_parser('eq', help='compare canonical forms of two diagrams')
    mode_arg(sp, required=True)
    sp.add_argument('a')
    sp.add_argument('b')
    sp.set_defaults(func=cmd_eq)

    sp = sub.add_parser('trace', help='print a sorting trace, or verify one')
    mode_arg(sp)
    sp.add_argument('--verify', metavar='TRACE', help='trace file to replay against FILE')
    sp.add_argument('file')
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser('census', help='count or list canonical diagrams')
    sp.add_argument('--strands', type=_positive, required=True)
    sp.add_argument('--max-crossings', type=_nonneg, required=True)
    mode_arg(sp)
    sp.add_argument('--list', action='store_true')
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser('braid', help='canonical diagram of a pure braid word')
    sp.add_argument('--strands', type=_positive, required=True)
    mode_arg(sp)
    sp.add_argument('word', help="letters like '1>2' (sigma_12) or '1<2' (its inverse)")
    sp.set_defaults(func=cmd_braid)

    sp = sub.add_parser('perm', help='convert between diagrams and signed permutations')
    sp.add_argument('direction', choices=['encode', 'decode'])
    sp.add_argument('file')
    sp.set_defaults(func=cmd_perm)

    sp = sub.add_parser('rand', help='pseudorandom diagram')
    sp.add_argument('--seed', type=int, default=0)
    sp.add_argument('--strands', type=_positive, default=1)
    sp.add_argument('--crossings', type=_nonneg, default=3)
    sp.add_argument('--moves', type=_nonneg, default=5)
    mode_arg(sp)
    sp.set_defaults(func=cmd_rand)

    sp = sub.add_parser('oracle-eq', help='bounded search for a move path')
    sp.add_argument('--max-crossings', type=_positive, default=7)
    sp.add_argument('--max-states', type=_positive, default=100_000)
    mode_arg(sp)
    sp.add_argument('a')
    sp.add_argument('b')
    sp.set_defaults(func=cmd_oracle_eq)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except DomainError as exc:
        err.write(f'ft: {exc}\n')
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
