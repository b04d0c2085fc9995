"""
The sorting map.

Three one-directional sorting moves drive a diagram to its canonical form:

* GF-sort moves the head-run of an illegal interval past the following
  tail-run.  It is realized as a grid of finger moves, sliding each head past
  each tail, so a site with ``p`` heads and ``q`` tails adds ``2pq``
  crossings and removes exactly one illegal interval.
* R2-sort deletes an opposite-sign bigon.
* R1-sort (unframed only) deletes a kink.

Every step strictly lowers ``(N, chi)`` lexicographically, so sorting
terminates; the result does not depend on the order in which sites are
chosen.
"""
from __future__ import annotations

import enum
import hashlib
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .gauss import (
    CanonicalMode, PureTangleDiagram, bigons, illegal_count, illegal_sites, kinks, serialize, validate,
)
from .moves import (
    MoveError, MoveKind, MoveSite, _apply, _f_forward, format_move, parse_move,
)

__all__ = [
    'SortKind', 'SortSite', 'SortStep', 'SortTrace', 'TraceCheck',
    'SortContractError', 'ConfluenceError', 'STRATEGIES',
    'gf_sort', 'r2_sort', 'r1_sort', 'available_sorts', 'apply_sort',
    'canonicalize', 'canonical_form', 'verify_trace', 'fingerprint',
    'format_trace', 'parse_trace',
]

STRATEGIES = ('first_site', 'random', 'exhaustive_check')


class SortKind(str, enum.Enum):
    GF = 'GF'
    R2S = 'R2S'
    R1S = 'R1S'


class SortSite(NamedTuple):
    """``location`` is ``(strand, start, p, q)`` for GF, the bigon arrow pair
    for R2S and ``(arrow,)`` for R1S."""
    kind: SortKind
    location: tuple


class SortStep(NamedTuple):
    site: SortSite
    moves: tuple
    before: tuple   # (N, chi)
    after: tuple


class SortContractError(AssertionError):
    pass


class ConfluenceError(AssertionError):
    pass


def fingerprint(d):
    return hashlib.sha256(serialize(d).encode()).hexdigest()


@dataclass
class SortTrace:
    initial: str
    final: str
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)


class TraceCheck(NamedTuple):
    ok: bool
    step: int = 0
    message: str = ''

    def __bool__(self):
        return self.ok


def _gf_site(d, site):
    strand, start, p, q = site.location
    for s in illegal_sites(d):
        if (s.strand, s.start) == (strand, start):
            if (len(s.heads), len(s.tails)) != (p, q):
                break
            return s
    raise MoveError(f'no illegal interval at strand {strand} position {start}')


def _gf(d, site):
    ill = _gf_site(d, site)
    heads, tails = list(ill.heads), list(ill.tails)
    moves = []
    for i in reversed(range(len(heads))):
        for j in range(len(tails)):
            s, pos = d.locations[-heads[i]]
            if d.strands[s][pos + 1] != tails[j]:
                raise SortContractError('GF slide lost adjacency')
            for xs, ys, sign in _VARIANTS:
                prims = _f_forward(d, s, pos, xs, ys, sign)
                if prims is not None:
                    break
            else:
                raise SortContractError(f'no finger move slides H{heads[i]} past T{tails[j]}')
            for prim in prims:
                d, idmap = _apply(d, prim)
                heads = [idmap[k] for k in heads]
                tails = [idmap[k] for k in tails]
                moves.append(prim)
    return d, tuple(moves)


_VARIANTS = [(xs, ys, sign) for xs in 'LR' for ys in 'LR' for sign in (1, -1)]


def _gf_direct(d, site):
    """Closed form of :func:`_gf`.

    Sliding head H_a past tail T_b by the first admissible finger variant
    adds c' and c around T_a (in that order) and around H_b either
    ``c, b, c'`` (equal signs) or ``c', b, c`` (opposite signs), with
    sign(c) = -sign(b) = -sign(c').
    """
    ill = _gf_site(d, site)
    strands = [list(row) for row in d.strands]
    signs = dict(enumerate(d.signs, 1))
    row = strands[ill.strand - 1]
    p, q = len(ill.heads), len(ill.tails)
    nxt = d.crossings
    for a in reversed(ill.heads):
        for b in ill.tails:
            nxt += 2
            c, c2 = nxt - 1, nxt
            signs[c], signs[c2] = -signs[b], signs[b]
            ws = d.locations[a][0]
            w = strands[ws]
            k = w.index(a)
            w[k:k + 1] = [c2, a, c]
            v = strands[d.locations[-b][0]]
            k = v.index(-b)
            v[k:k + 1] = [-c, -b, -c2] if signs[a] == signs[b] else [-c2, -b, -c]
    k = row.index(-ill.heads[0])
    row[k:k + p + q] = list(ill.tails) + [-a for a in ill.heads]
    return PureTangleDiagram.renumbered(strands, signs, check=False)[0]


def gf_sort(d, site):
    return _gf_direct(d, site)


def r2_sort(d, site):
    move = MoveSite(MoveKind.R2_DELETE, tuple(site.location))
    return _apply(d, move)[0]


def r1_sort(d, site):
    move = MoveSite(MoveKind.R1_DELETE, tuple(site.location))
    return _apply(d, move)[0]


def available_sorts(d, mode=CanonicalMode.FRAMED):
    """Sorting sites in scan order: GF, then R2S, then R1S (unframed)."""
    out = [SortSite(SortKind.GF, (s.strand, s.start, len(s.heads), len(s.tails)))
           for s in illegal_sites(d)]
    out += [SortSite(SortKind.R2S, pair) for pair in bigons(d)]
    if CanonicalMode(mode) is CanonicalMode.UNFRAMED:
        out += [SortSite(SortKind.R1S, (k,)) for k in kinks(d)]
    return out


def _contract(kind, location, before, after):
    """Parameter contract of one sorting step; returns an error or ''."""
    (n0, c0), (n1, c1) = before, after
    if kind is SortKind.GF:
        p, q = location[2], location[3]
        if c1 - c0 != 2 * p * q or n1 - n0 != -1:
            return f'GF changed (N, chi) by ({n1 - n0}, {c1 - c0})'
    elif kind is SortKind.R2S:
        if c1 - c0 != -2 or not -2 <= n1 - n0 <= 0:
            return f'R2S changed (N, chi) by ({n1 - n0}, {c1 - c0})'
    elif c1 - c0 != -1 or not -1 <= n1 - n0 <= 0:
        return f'R1S changed (N, chi) by ({n1 - n0}, {c1 - c0})'
    return ''


def apply_sort(d, site, expand=True):
    """Apply one sorting move; returns ``(diagram, SortStep)``.

    With ``expand`` the step records its primitive moves (a GF-sort is then
    carried out through its finger-move composite); otherwise GF uses the
    closed-form rewrite and ``SortStep.moves`` is ``None``.
    """
    kind = SortKind(site.kind)
    before = (illegal_count(d), d.crossings)
    if kind is SortKind.GF:
        out, moves = _gf(d, site) if expand else (_gf_direct(d, site), None)
    else:
        move = MoveSite(MoveKind.R2_DELETE if kind is SortKind.R2S else MoveKind.R1_DELETE,
                        tuple(site.location))
        out, moves = _apply(d, move)[0], (move,)
    after = (illegal_count(out), out.crossings)
    err = _contract(kind, site.location, before, after)
    if err:
        raise SortContractError(err)
    return out, SortStep(site, moves, before, after)


def canonicalize(d, mode=CanonicalMode.FRAMED, strategy='first_site', seed=None,
                 expand=True):
    """Sort ``d`` to its canonical form; returns ``(canonical, SortTrace)``.

    ``strategy`` picks the next site: ``'first_site'`` takes the first in scan
    order, ``'random'`` draws with ``random.Random(seed)``, and
    ``'exhaustive_check'`` sorts with ``'first_site'`` but first re-sorts after
    every available opening move and raises :class:`ConfluenceError` if any
    result differs.  ``expand=False`` skips recording primitive moves, which
    is much faster but leaves a trace that :func:`verify_trace` cannot replay.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f'unknown strategy {strategy!r}')
    mode = CanonicalMode(mode)
    if strategy == 'exhaustive_check':
        result, trace = canonicalize(d, mode, expand=expand)
        for site in available_sorts(d, mode):
            other = canonicalize(apply_sort(d, site, False)[0], mode, expand=False)[0]
            if other != result:
                raise ConfluenceError(f'opening move {site} sorts to a different diagram')
        return result, trace
    rng = random.Random(seed) if strategy == 'random' else None
    trace = SortTrace(fingerprint(d), '')
    while True:
        sites = available_sorts(d, mode)
        if not sites:
            break
        site = rng.choice(sites) if rng else sites[0]
        d, step = apply_sort(d, site, expand)
        trace.steps.append(step)
    trace.final = fingerprint(d)
    return d, trace


def canonical_form(d, mode=CanonicalMode.FRAMED):
    return canonicalize(d, mode, expand=False)[0]


def _replay_step(d, step):
    kind = SortKind(step.site.kind)
    before = (illegal_count(d), d.crossings)
    kinds = [MoveKind(m.kind) for m in step.moves]
    if kind is SortKind.R2S and kinds != [MoveKind.R2_DELETE]:
        return d, 'R2S must expand to one R2 deletion'
    if kind is SortKind.R1S and kinds != [MoveKind.R1_DELETE]:
        return d, 'R1S must expand to one R1 deletion'
    if kind is SortKind.GF:
        if not kinds or any(k not in (MoveKind.R2_INSERT, MoveKind.R3) for k in kinds):
            return d, 'GF must expand to R2 insertions and R3 moves'
    for move in step.moves:
        try:
            d = _apply(d, move)[0]
        except MoveError as exc:
            return d, str(exc)
        bad = validate(d)
        if bad is not None:
            return d, bad.message
    after = (illegal_count(d), d.crossings)
    return d, _contract(kind, step.site.location, before, after)


def verify_trace(d, trace):
    """Replay a trace move by move, checking validity and the per-move
    parameter contracts; ok iff the final fingerprint matches."""
    if trace.initial and fingerprint(d) != trace.initial:
        return TraceCheck(False, 0, 'initial fingerprint mismatch')
    for n, step in enumerate(trace.steps, 1):
        if step.moves is None:
            return TraceCheck(False, n, 'step has no primitive expansion')
        d, err = _replay_step(d, step)
        if err:
            return TraceCheck(False, n, err)
    if fingerprint(d) != trace.final:
        return TraceCheck(False, len(trace.steps), 'final fingerprint mismatch')
    return TraceCheck(True, len(trace.steps))


def format_trace(trace):
    lines = ['fttrace v1', f'initial {trace.initial}']
    for step in trace.steps:
        loc = ' '.join(str(x) for x in step.site.location)
        lines.append(f'sort {SortKind(step.site.kind).value} {loc}')
        lines += ['  ' + format_move(m) for m in step.moves]
    lines.append(f'final {trace.final}')
    return '\n'.join(lines) + '\n'


def parse_trace(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != 'fttrace v1':
        raise ValueError("expected header 'fttrace v1'")
    trace = SortTrace('', '')
    site, moves = None, []

    def flush():
        if site is not None:
            trace.steps.append(SortStep(site, tuple(moves), None, None))

    for ln in lines[1:]:
        toks = ln.split()
        if toks[0] == 'initial':
            trace.initial = toks[1]
        elif toks[0] == 'final':
            flush()
            site = None
            trace.final = toks[1]
        elif toks[0] == 'sort':
            flush()
            site = SortSite(SortKind(toks[1]), tuple(int(t) for t in toks[2:]))
            moves = []
        else:
            moves.append(parse_move(ln))
    flush()
    return trace
