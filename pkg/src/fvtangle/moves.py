"""
Reidemeister moves on descending Gauss diagrams.

Moves are described by :class:`MoveSite` records whose anchors refer to the
diagram the move is applied to (arrow ids and 1-based positions of that
diagram).  Virtual moves do not exist at this level: a Gauss diagram already
forgets virtual crossings.

R3 is admitted on three arrows whose six endpoints form three adjacent
pairs, one pair per two arrows, subject to the planar realizability rule in
:func:`r3_admissible`.  The finger move is a composite: an R2 insertion
followed by an R3 on a triangle containing exactly one of the new arrows.
"""
from __future__ import annotations

import enum
from collections import deque
from typing import NamedTuple

from .gauss import (
    CanonicalMode, DiagramError, PureTangleDiagram, bigons, kinks, validate,
)

__all__ = [
    'MoveKind', 'MoveSite', 'MoveError', 'EquivalenceResult',
    'r1_delete_sites', 'r1_insert_sites', 'r1_apply',
    'r2_delete_sites', 'r2_insert_sites', 'r2_apply',
    'r3_sites', 'r3_apply', 'r3_admissible',
    'f_sites', 'f_inverse_sites', 'f_move', 'f_expand',
    'apply_move', 'expand', 'neighbors', 'replay',
    'bfs_equivalent', 'bfs_search', 'bfs_reachable',
    'format_move', 'parse_move', 'format_path', 'parse_path',
]


class MoveKind(str, enum.Enum):
    R1_INSERT = 'R1_insert'
    R1_DELETE = 'R1_delete'
    R2_INSERT = 'R2_insert'
    R2_DELETE = 'R2_delete'
    R3 = 'R3'
    F = 'F'


class MoveSite(NamedTuple):
    kind: MoveKind
    anchors: tuple
    params: tuple = ()


class MoveError(ValueError):
    pass


def _lists(d):
    return [list(s) for s in d.strands], dict(enumerate(d.signs, 1))


def _rebuild(strands, signs):
    return PureTangleDiagram.renumbered(strands, signs, check=False)


# -- R1 ---------------------------------------------------------------------

def r1_delete_sites(d):
    return [MoveSite(MoveKind.R1_DELETE, (k,)) for k in kinks(d)]


def r1_insert_sites(d):
    return [MoveSite(MoveKind.R1_INSERT, (s, pos), (sign,))
            for s, strand in enumerate(d.strands, 1)
            for pos in range(1, len(strand) + 2)
            for sign in (1, -1)]


def _r1(d, site):
    strands, signs = _lists(d)
    if site.kind is MoveKind.R1_DELETE:
        (k,) = site.anchors
        if k not in kinks(d):
            raise MoveError(f'arrow {k} is not a kink')
        s, i = d.locations[k]
        del strands[s][i:i + 2]
        del signs[k]
    elif site.kind is MoveKind.R1_INSERT:
        s, pos = site.anchors
        (sign,) = site.params
        if not (1 <= s <= d.n_strands and 1 <= pos <= len(d.strands[s - 1]) + 1):
            raise MoveError(f'no gap at strand {s} position {pos}')
        k = d.crossings + 1
        strands[s - 1][pos - 1:pos - 1] = [k, -k]
        signs[k] = sign
    else:
        raise MoveError(f'not an R1 move: {site.kind}')
    return _rebuild(strands, signs)


def r1_apply(d, site):
    return _r1(d, site)[0]


# -- R2 ---------------------------------------------------------------------

def r2_delete_sites(d):
    return [MoveSite(MoveKind.R2_DELETE, pair) for pair in bigons(d)]


def r2_insert_sites(d, max_crossings=None):
    """Every R2 insertion.

    Anchors are ``(tail_strand, tail_gap, head_strand, head_gap)`` where a gap
    counts the endpoints preceding the insertion point.  Params are
    ``(sign of the first tail, heads reversed)``.
    """
    if max_crossings is not None and d.crossings + 2 > max_crossings:
        return []
    gaps = [(s, g) for s, strand in enumerate(d.strands, 1)
            for g in range(len(strand) + 1)]
    out = []
    for i, (ts, tg) in enumerate(gaps):
        for hs, hg in gaps[i:]:
            for sign in (1, -1):
                for rev in (0, 1):
                    out.append(MoveSite(MoveKind.R2_INSERT, (ts, tg, hs, hg), (sign, rev)))
    return out


def _is_bigon(d, a, b):
    n = d.crossings
    if not (1 <= a <= n and 1 <= b <= n) or d.signs[a - 1] == d.signs[b - 1]:
        return False
    loc = d.locations
    for x, y in ((a, b), (-a, -b)):
        (sx, ix), (sy, iy) = loc[x], loc[y]
        if sx != sy or abs(ix - iy) != 1:
            return False
    return True


def _r2(d, site):
    strands, signs = _lists(d)
    if site.kind is MoveKind.R2_DELETE:
        a, b = site.anchors
        if not _is_bigon(d, a, b):
            raise MoveError(f'arrows {a}, {b} do not bound a bigon')
        drop = {a, -a, b, -b}
        strands = [[t for t in s if t not in drop] for s in strands]
        del signs[a], signs[b]
    elif site.kind is MoveKind.R2_INSERT:
        ts, tg, hs, hg = site.anchors
        sign, rev = site.params
        if (ts, tg) > (hs, hg) or not (1 <= ts <= d.n_strands and 1 <= hs <= d.n_strands):
            raise MoveError(f'bad R2 insertion anchors {site.anchors}')
        if not (0 <= tg <= len(strands[ts - 1]) and 0 <= hg <= len(strands[hs - 1])):
            raise MoveError(f'bad R2 insertion anchors {site.anchors}')
        x, y = d.crossings + 1, d.crossings + 2
        strands[hs - 1][hg:hg] = [-y, -x] if rev else [-x, -y]
        strands[ts - 1][tg:tg] = [x, y]
        signs[x], signs[y] = sign, -sign
    else:
        raise MoveError(f'not an R2 move: {site.kind}')
    return _rebuild(strands, signs)


def r2_apply(d, site):
    return _r2(d, site)[0]


# -- R3 ---------------------------------------------------------------------

def r3_admissible(d, pairs):
    """Planar realizability of a triangle of adjacent endpoint pairs.

    ``pairs`` holds three ``(left token, right token)`` pairs.  Label the pair
    of two tails A, the mixed pair B and the pair of two heads C, and let
    alpha, beta, gamma be the arrows A->B, A->C, B->C.  With orientation bits
    ``oA = [tail alpha first]``, ``oB = [head alpha first]``,
    ``oC = [head beta first]`` and sign bits ``s = [sign > 0]``, an
    immersion of three lines exists iff

        s_alpha ^ s_beta  == oB ^ oC
        s_alpha ^ s_gamma == oA ^ oC
    """
    tt = hh = mixed = None
    for p in pairs:
        if p[0] > 0 and p[1] > 0:
            tt = p
        elif p[0] < 0 and p[1] < 0:
            hh = p
        else:
            mixed = p
    if tt is None or hh is None or mixed is None:
        return False
    mixed_head = -(mixed[0] if mixed[0] < 0 else mixed[1])
    gamma = mixed[0] if mixed[0] > 0 else mixed[1]
    alpha = mixed_head
    beta = tt[0] if tt[1] == alpha else tt[1]
    if {alpha, beta} != {tt[0], tt[1]} or {-beta, -gamma} != {hh[0], hh[1]}:
        return False
    o_a = tt[0] == alpha
    o_b = mixed[0] == -alpha
    o_c = hh[0] == -beta
    s = {k: d.signs[k - 1] > 0 for k in (alpha, beta, gamma)}
    return (s[alpha] ^ s[beta]) == (o_b ^ o_c) and (s[alpha] ^ s[gamma]) == (o_a ^ o_c)


def _triangles(d):
    """Triangles as sorted tuples of 0-based ``(strand, left index)`` pairs."""
    loc = d.locations
    strands = d.strands
    found = set()
    for s, row in enumerate(strands):
        for i in range(len(row) - 1):
            u, v = row[i], row[i + 1]
            if u == -v:
                continue
            su, iu = loc[-u]
            sv, iv = loc[-v]
            ru = strands[su]
            for pu in (iu - 1, iu):
                if pu < 0 or pu + 1 >= len(ru):
                    continue
                du = ru[pu] if pu != iu else ru[pu + 1]
                if du == -u or du == u or du == v or du == -v:
                    continue
                sd, idx = loc[-du]
                if sd != sv or abs(idx - iv) != 1:
                    continue
                found.add(tuple(sorted(((s, i), (su, pu), (sv, min(idx, iv))))))
    return sorted(found)


def _is_triangle(d, tri):
    """Whether three 0-based adjacent-pair positions form a triangle."""
    count = {}
    for s, i in tri:
        row = d.strands[s] if 0 <= s < d.n_strands else ()
        if not 0 <= i < len(row) - 1:
            return False
        u, v = row[i], row[i + 1]
        if abs(u) == abs(v):
            return False
        for t in (u, v):
            count[t] = count.get(t, 0) + 1
    if len(count) != 6 or len({abs(t) for t in count}) != 3:
        return False
    arrow_pairs = {frozenset(abs(t) for t in d.strands[s][i:i + 2]) for s, i in tri}
    return len(arrow_pairs) == 3


def _pair_tokens(d, pos):
    s, i = pos
    return d.strands[s][i], d.strands[s][i + 1]


def r3_sites(d):
    out = []
    for tri in _triangles(d):
        if r3_admissible(d, [_pair_tokens(d, p) for p in tri]):
            out.append(MoveSite(MoveKind.R3, tuple((s + 1, i + 1) for s, i in tri)))
    return out


def _r3(d, site):
    tri = tuple(sorted((s - 1, i - 1) for s, i in site.anchors))
    if len(tri) != 3 or len(set(tri)) != 3 or not _is_triangle(d, tri):
        raise MoveError(f'no R3 triangle at {site.anchors}')
    if not r3_admissible(d, [_pair_tokens(d, p) for p in tri]):
        raise MoveError(f'R3 triangle at {site.anchors} is not realizable')
    strands, signs = _lists(d)
    for s, i in tri:
        strands[s][i], strands[s][i + 1] = strands[s][i + 1], strands[s][i]
    return _rebuild(strands, signs)


def r3_apply(d, site):
    return _r3(d, site)[0]


# -- finger moves -----------------------------------------------------------

def _f_forward(d, s, i, x_side, y_side, sign):
    """Expand a forward finger move into ``(r2 site, r3 site)`` or ``None``.

    The endpoints at ``(s, i)`` and ``(s, i + 1)`` (0-based) belong to arrows
    a and b.  A new pair c, c' is inserted by R2 with c adjacent to the other
    endpoint of a (on side ``x_side``) and of b (on side ``y_side``); then the
    triangle a, b, c is moved by R3.  ``sign`` is the sign of c.
    """
    row = d.strands[s]
    u, v = row[i], row[i + 1]
    if abs(u) == abs(v):
        return None
    ends = [(d.locations[-u], x_side), (d.locations[-v], y_side)]
    ends.sort()
    (ts, ti), t_side = ends[0]
    (hs, hi), h_side = ends[1]
    tg = ti if t_side == 'L' else ti + 1
    hg = hi if h_side == 'L' else hi + 1
    if (ts, tg) > (hs, hg):
        return None
    # tails of the new pair: c next to the earlier endpoint, c' on the far side
    c_first_tail = t_side == 'R'
    c_first_head = h_side == 'R'
    first_sign = sign if c_first_tail else -sign
    rev = int(c_first_tail != c_first_head)
    r2 = MoveSite(MoveKind.R2_INSERT, (ts + 1, tg, hs + 1, hg), (first_sign, rev))
    d1, idmap = _r2(d, r2)
    c = idmap[d.crossings + 1] if c_first_tail else idmap[d.crossings + 2]
    a, b = idmap[abs(u)], idmap[abs(v)]
    ua = a if u > 0 else -a
    vb = b if v > 0 else -b
    ends = ((ua, vb), (-ua, None), (-vb, None))
    loc = d1.locations
    pairs = []
    for x, y in ends:
        if y is None:
            # c's endpoint next to x
            y = c if loc[c][0] == loc[x][0] and abs(loc[c][1] - loc[x][1]) == 1 else -c
        (sx, ix), (sy, iy) = loc[x], loc[y]
        if sx != sy or abs(ix - iy) != 1:
            return None
        pairs.append((sx, min(ix, iy)))
    if len(set(pairs)) != 3:
        return None
    if not r3_admissible(d1, [_pair_tokens(d1, p) for p in pairs]):
        return None
    return r2, MoveSite(MoveKind.R3, tuple(sorted((s + 1, i + 1) for s, i in pairs)))


def f_sites(d, max_crossings=None):
    """All forward finger moves (each adds two crossings)."""
    if max_crossings is not None and d.crossings + 2 > max_crossings:
        return []
    out = []
    for s, row in enumerate(d.strands):
        for i in range(len(row) - 1):
            for xs in 'LR':
                for ys in 'LR':
                    for sign in (1, -1):
                        if _f_forward(d, s, i, xs, ys, sign) is not None:
                            out.append(MoveSite(MoveKind.F, (s + 1, i + 1), (xs, ys, sign)))
    return out


def f_inverse_sites(d):
    """Inverse finger moves: an R3 followed by deleting a bigon that contains
    exactly one arrow of the moved triangle."""
    out = []
    for t in r3_sites(d):
        tri_arrows = {abs(x) for s, i in t.anchors
                      for x in d.strands[s - 1][i - 1:i + 1]}
        d1, idmap = _r3(d, t)
        back = {v: k for k, v in idmap.items()}
        for x, y in bigons(d1):
            x0, y0 = back[x], back[y]
            if (x0 in tri_arrows) != (y0 in tri_arrows):
                out.append(MoveSite(MoveKind.F, t.anchors, ('inv', x0, y0)))
    return out


def f_expand(d, site):
    """Primitive realization of a finger move as a list of move sites."""
    if site.kind is not MoveKind.F:
        raise MoveError(f'not a finger move: {site.kind}')
    if site.params and site.params[0] == 'inv':
        _, x, y = site.params
        r3 = MoveSite(MoveKind.R3, site.anchors)
        d1, idmap = _r3(d, r3)
        tri_arrows = {abs(t) for s, i in site.anchors
                      for t in d.strands[s - 1][i - 1:i + 1]}
        if (x in tri_arrows) == (y in tri_arrows):
            raise MoveError('inverse finger bigon must contain one triangle arrow')
        a, b = sorted((idmap[x], idmap[y]))
        return [r3, MoveSite(MoveKind.R2_DELETE, (a, b))]
    (s, pos), (xs, ys, sign) = site.anchors, site.params
    if not (1 <= s <= d.n_strands and 1 <= pos < len(d.strands[s - 1])):
        raise MoveError(f'no adjacent pair at strand {s} position {pos}')
    res = _f_forward(d, s - 1, pos - 1, xs, ys, sign)
    if res is None:
        raise MoveError(f'finger move not applicable at {site}')
    return list(res)


def f_move(d, site):
    for prim in f_expand(d, site):
        d = apply_move(d, prim)
    return d


# -- dispatch ---------------------------------------------------------------

def _apply(d, site):
    kind = MoveKind(site.kind)
    site = site._replace(kind=kind)
    if kind in (MoveKind.R1_INSERT, MoveKind.R1_DELETE):
        return _r1(d, site)
    if kind in (MoveKind.R2_INSERT, MoveKind.R2_DELETE):
        return _r2(d, site)
    if kind is MoveKind.R3:
        return _r3(d, site)
    return f_move(d, site), None


def apply_move(d, site):
    return _apply(d, site)[0]


def expand(d, site):
    """Primitive moves realizing ``site`` (itself, unless it is a finger)."""
    if MoveKind(site.kind) is MoveKind.F:
        return f_expand(d, site)
    return [site]


def replay(d, path):
    """Apply a path of moves, validating every intermediate diagram."""
    for step, site in enumerate(path, 1):
        d = apply_move(d, site)
        bad = validate(d)
        if bad is not None:
            raise MoveError(f'step {step}: {bad.message}')
    return d


MOVESETS = ('primitive', 'finger')


def neighbors(d, mode=CanonicalMode.FRAMED, max_crossings=None, moveset='primitive'):
    """Yield ``(site, diagram)`` for every single move from ``d``.

    ``moveset='primitive'`` uses R2 both ways and R3; ``'finger'`` replaces R3
    by finger moves both ways.  R1 both ways is added in unframed mode.
    """
    if moveset not in MOVESETS:
        raise ValueError(f'unknown move set {moveset!r}')
    sites = r2_delete_sites(d) + r2_insert_sites(d, max_crossings)
    if moveset == 'primitive':
        sites += r3_sites(d)
    else:
        sites += f_sites(d, max_crossings) + f_inverse_sites(d)
    if CanonicalMode(mode) is CanonicalMode.UNFRAMED:
        sites += r1_delete_sites(d)
        if max_crossings is None or d.crossings + 1 <= max_crossings:
            sites += r1_insert_sites(d)
    for site in sites:
        yield site, apply_move(d, site)


# -- bounded search ---------------------------------------------------------

class EquivalenceResult(NamedTuple):
    verdict: str          # 'equivalent' or 'unknown'
    path: tuple = ()
    states: int = 0

    @property
    def equivalent(self):
        return self.verdict == 'equivalent'


def bfs_equivalent(a, b, max_crossings, max_states, mode=CanonicalMode.FRAMED,
                   moveset='primitive'):
    """Breadth-first search for a move path from ``a`` to ``b``.

    States above ``max_crossings`` are pruned and the search gives up after
    ``max_states`` distinct states.  Only a replayable path is ever reported
    as ``'equivalent'``.
    """
    return bfs_search(a, [b], max_crossings, max_states, mode, moveset)[b]


def bfs_search(a, targets, max_crossings, max_states, mode=CanonicalMode.FRAMED,
               moveset='primitive'):
    """One breadth-first search from ``a`` answering several targets.

    Returns a dict mapping each target to the :class:`EquivalenceResult` that
    :func:`bfs_equivalent` would give for it: the search order does not
    depend on the target, so a target's verdict is fixed by the moment it is
    first reached, if ever.
    """
    if max_crossings < 1 or max_states < 1:
        raise ValueError('bounds must be positive')
    targets = list(targets)
    out = {}
    if a in targets:
        out[a] = EquivalenceResult('equivalent', (), 1)
    pending = {b for b in targets if b not in out and b.n_strands == a.n_strands}
    parent = {a: None}
    queue = deque([a])
    exhausted = False
    while queue and pending and not exhausted:
        cur = queue.popleft()
        for site, nxt in neighbors(cur, mode, max_crossings, moveset):
            if nxt in parent or nxt.crossings > max_crossings:
                continue
            parent[nxt] = (cur, site)
            if nxt in pending:
                pending.discard(nxt)
                path = _path_to(parent, nxt)
                if replay(a, path) != nxt:
                    raise AssertionError('bfs path does not replay')
                out[nxt] = EquivalenceResult('equivalent', tuple(path), len(parent))
            if len(parent) >= max_states:
                exhausted = True
                break
            queue.append(nxt)
        cur.drop_caches()
    for b in targets:
        out.setdefault(b, EquivalenceResult('unknown', (), len(parent)))
    return out


def _path_to(parent, node):
    path = []
    while parent[node] is not None:
        node, site = parent[node]
        path.append(site)
    path.reverse()
    return path


def bfs_reachable(d, max_crossings, mode=CanonicalMode.FRAMED, moveset='primitive',
                  max_states=None):
    """The full set of diagrams reachable from ``d`` within the crossing bound."""
    seen = {d}
    queue = deque([d])
    while queue:
        cur = queue.popleft()
        for _, nxt in neighbors(cur, mode, max_crossings, moveset):
            if nxt not in seen and nxt.crossings <= max_crossings:
                seen.add(nxt)
                if max_states is not None and len(seen) > max_states:
                    raise RuntimeError(f'more than {max_states} states reachable')
                queue.append(nxt)
        cur.drop_caches()
    return seen


# -- text form --------------------------------------------------------------

def _anchor_text(x):
    return ':'.join(str(v) for v in x) if isinstance(x, tuple) else str(x)


def _sign_slots(site):
    """Indices of the params that hold a crossing sign."""
    kind = MoveKind(site.kind)
    if kind is MoveKind.R1_INSERT or kind is MoveKind.R2_INSERT:
        return {0}
    if kind is MoveKind.F and site.params and site.params[0] != 'inv':
        return {2}
    return set()


def format_move(site):
    """One line: ``<kind> <anchors...> [/ <params...>]``."""
    parts = [MoveKind(site.kind).value] + [_anchor_text(a) for a in site.anchors]
    if site.params:
        signs = _sign_slots(site)
        parts.append('/')
        for i, p in enumerate(site.params):
            if i in signs:
                parts.append('+' if p > 0 else '-')
            else:
                parts.append(str(int(p)) if isinstance(p, bool) else str(p))
    return ' '.join(parts)


def _int_or_pair(tok):
    if ':' in tok:
        return tuple(int(x) for x in tok.split(':'))
    return int(tok)


def parse_move(line):
    toks = line.split()
    if not toks:
        raise MoveError('empty move line')
    try:
        kind = MoveKind(toks[0])
    except ValueError:
        raise MoveError(f'unknown move kind {toks[0]!r}') from None
    if '/' in toks:
        cut = toks.index('/')
        anchor_toks, param_toks = toks[1:cut], toks[cut + 1:]
    else:
        anchor_toks, param_toks = toks[1:], []
    try:
        anchors = tuple(_int_or_pair(t) for t in anchor_toks)
    except ValueError:
        raise MoveError(f'bad anchors in {line!r}') from None
    params = []
    for i, t in enumerate(param_toks):
        if t in ('+', '-'):
            params.append(1 if t == '+' else -1)
        elif t in ('L', 'R', 'inv'):
            params.append(t)
        else:
            try:
                params.append(int(t))
            except ValueError:
                raise MoveError(f'bad parameter {t!r} in {line!r}') from None
    return MoveSite(kind, anchors, tuple(params))


def format_path(path):
    return ''.join(format_move(s) + '\n' for s in path)


def parse_path(text):
    return [parse_move(ln) for ln in text.splitlines() if ln.strip() and not ln.startswith('#')]

