"""
Descending Gauss diagrams of pure tangles.

A diagram lives on ``n`` ordered, oriented strands.  Each strand is a
sequence of arrow endpoints; an arrow runs from its tail (the over passage)
to its head (the under passage) and carries a sign.  Internally an endpoint
is stored as a signed integer token: ``+k`` is the tail of arrow ``k`` and
``-k`` its head.  Arrows are always renumbered ``1..chi`` in order of first
appearance along the skeleton, so two diagrams are positionally equal exactly
when their dataclass values are equal.
"""
from __future__ import annotations

import enum
import re
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

__all__ = [
    'TAIL', 'HEAD', 'BEFORE', 'EQUAL', 'AFTER',
    'CanonicalMode', 'Endpoint', 'Arrow', 'IllegalSite', 'Violation',
    'DiagramError', 'ParseError', 'PureTangleDiagram',
    'total_order', 'validate', 'illegal_sites', 'illegal_count', 'bigons',
    'kinks', 'is_canonical', 'parse', 'serialize', 'flatten', 'empty',
]

TAIL = 'tail'
HEAD = 'head'

BEFORE, EQUAL, AFTER = -1, 0, 1


class CanonicalMode(str, enum.Enum):
    FRAMED = 'framed'
    UNFRAMED = 'unframed'


class Endpoint(NamedTuple):
    strand: int
    position: int
    role: str
    arrow_id: int


class Arrow(NamedTuple):
    id: int
    tail: Endpoint
    head: Endpoint
    sign: int


class IllegalSite(NamedTuple):
    """A head-run immediately followed by a tail-run on one strand.

    ``start`` is the 1-based position of the first head; ``heads`` and
    ``tails`` list the arrow ids of the two maximal runs in strand order.
    """
    strand: int
    start: int
    heads: tuple[int, ...]
    tails: tuple[int, ...]


class Violation(NamedTuple):
    arrow_id: int
    message: str


class DiagramError(ValueError):
    pass


class ParseError(DiagramError):
    def __init__(self, line, token, message):
        self.line = line
        self.token = token
        super().__init__(f'line {line}, token {token!r}: {message}')


def _sign_value(s):
    if s in (1, '+', '+1'):
        return 1
    if s in (-1, '-', '-1'):
        return -1
    raise DiagramError(f'bad sign {s!r}')


def _normalize(strands, signs):
    """Renumber arrows by first appearance.

    Returns ``(strands, signs, idmap)`` with ``idmap`` sending old ids to new.
    """
    idmap = {}
    new_strands = []
    tails_seen = set()
    heads_seen = set()
    for strand in strands:
        row = []
        for t in strand:
            t = int(t)
            if t == 0:
                raise DiagramError('arrow ids must be nonzero')
            k = abs(t)
            seen = tails_seen if t > 0 else heads_seen
            if k in seen:
                role = TAIL if t > 0 else HEAD
                raise DiagramError(f'arrow {k} has more than one {role}')
            seen.add(k)
            if k not in idmap:
                idmap[k] = len(idmap) + 1
            row.append(idmap[k] if t > 0 else -idmap[k])
        new_strands.append(tuple(row))
    if tails_seen != heads_seen:
        k = min(tails_seen ^ heads_seen)
        raise DiagramError(f'arrow {k} is missing an endpoint')
    new_signs = [0] * len(idmap)
    for old, new in idmap.items():
        try:
            s = signs[old] if isinstance(signs, Mapping) else signs[old - 1]
        except (KeyError, IndexError):
            raise DiagramError(f'arrow {old} has no sign') from None
        new_signs[new - 1] = _sign_value(s)
    return tuple(new_strands), tuple(new_signs), idmap


def _renumber(strands, signs):
    """Unchecked version of :func:`_normalize` for trusted input."""
    idmap = {}
    rows = []
    for strand in strands:
        row = []
        for t in strand:
            k = t if t > 0 else -t
            new = idmap.get(k)
            if new is None:
                new = idmap[k] = len(idmap) + 1
            row.append(new if t > 0 else -new)
        rows.append(tuple(row))
    new_signs = [0] * len(idmap)
    for old, new in idmap.items():
        new_signs[new - 1] = signs[old]
    return tuple(rows), tuple(new_signs), idmap


@dataclass(frozen=True)
class PureTangleDiagram:
    """Gauss diagram on ordered strands.

    ``strands`` is a sequence of token sequences, ``signs`` either a mapping
    from arrow id to sign or a sequence indexed by ``id - 1``.  Values are
    normalized on construction.  Descendingness is not enforced here; see
    :func:`validate`.
    """
    strands: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.strands) < 1:
            raise DiagramError('a diagram needs at least one strand')
        strands, signs, _ = _normalize(self.strands, self.signs)
        object.__setattr__(self, 'strands', strands)
        object.__setattr__(self, 'signs', signs)

    @classmethod
    def renumbered(cls, strands, signs, check=True):
        """Build a diagram and also return the old-to-new arrow id map.

        ``check=False`` skips the well-formedness checks; callers must pass
        paired endpoints and a sign mapping with values +1/-1.
        """
        strands, signs, idmap = (_normalize if check else _renumber)(strands, signs)
        d = cls.__new__(cls)
        object.__setattr__(d, 'strands', strands)
        object.__setattr__(d, 'signs', signs)
        return d, idmap

    @property
    def n_strands(self):
        return len(self.strands)

    @property
    def crossings(self):
        """chi(D), the number of arrows."""
        return len(self.signs)

    def sign(self, arrow_id):
        return self.signs[arrow_id - 1]

    @cached_property
    def locations(self):
        """Map token -> (strand index, position), both 0-based."""
        return {t: (s, i) for s, strand in enumerate(self.strands)
                for i, t in enumerate(strand)}

    def drop_caches(self):
        """Forget cached lookups; useful when holding very many diagrams."""
        self.__dict__.pop('locations', None)
        self.__dict__.pop('n_illegal', None)

    def endpoint(self, token):
        s, i = self.locations[token]
        return Endpoint(s + 1, i + 1, TAIL if token > 0 else HEAD, abs(token))

    def arrows(self):
        return [Arrow(k, self.endpoint(k), self.endpoint(-k), self.signs[k - 1])
                for k in range(1, self.crossings + 1)]

    @cached_property
    def n_illegal(self):
        return illegal_count(self)

    def __str__(self):
        return serialize(self)


def empty(n_strands=1):
    return PureTangleDiagram(((),) * n_strands, ())


def total_order(e1, e2):
    """Compare two endpoints along the skeleton: strand first, then position."""
    k1 = (e1.strand, e1.position)
    k2 = (e2.strand, e2.position)
    if k1 < k2:
        return BEFORE
    return EQUAL if k1 == k2 else AFTER


def validate(d):
    """Return ``None`` if ``d`` is a valid descending diagram, else the first
    :class:`Violation` found (in arrow id order)."""
    loc = d.locations
    for k in range(1, d.crossings + 1):
        if k not in loc or -k not in loc:
            return Violation(k, f'arrow {k} is missing an endpoint')
        if loc[k] > loc[-k]:
            return Violation(k, f'arrow {k} not descending')
    if len(loc) != 2 * d.crossings:
        return Violation(0, 'stray endpoints')
    return None


def _runs(strand):
    runs = []
    for i, t in enumerate(strand):
        kind = t > 0
        if runs and runs[-1][0] == kind:
            runs[-1][2] += 1
        else:
            runs.append([kind, i, 1])
    return runs


def illegal_sites(d):
    """All illegal intervals: maximal head-run followed by maximal tail-run."""
    sites = []
    for s, strand in enumerate(d.strands):
        runs = _runs(strand)
        for r, nxt in zip(runs, runs[1:]):
            if not r[0] and nxt[0]:
                heads = tuple(-t for t in strand[r[1]:r[1] + r[2]])
                tails = strand[nxt[1]:nxt[1] + nxt[2]]
                sites.append(IllegalSite(s + 1, r[1] + 1, heads, tuple(tails)))
    return sites


def illegal_count(d):
    """N(D): number of head-to-tail boundaries."""
    n = 0
    for strand in d.strands:
        for a, b in zip(strand, strand[1:]):
            if a < 0 < b:
                n += 1
    return n


def bigons(d):
    """Opposite-sign arrow pairs with adjacent tails and adjacent heads.

    Returns sorted ``(a, b)`` pairs with ``a < b``.
    """
    loc = d.locations
    out = []
    for strand in d.strands:
        for x, y in zip(strand, strand[1:]):
            if x > 0 and y > 0 and d.signs[x - 1] != d.signs[y - 1]:
                (sx, ix), (sy, iy) = loc[-x], loc[-y]
                if sx == sy and abs(ix - iy) == 1:
                    out.append((min(x, y), max(x, y)))
    return sorted(out)


def kinks(d):
    """Arrows whose tail is immediately followed by their own head."""
    out = []
    for strand in d.strands:
        for x, y in zip(strand, strand[1:]):
            if x > 0 and y == -x:
                out.append(x)
    return sorted(out)


def is_canonical(d, mode=CanonicalMode.FRAMED):
    mode = CanonicalMode(mode)
    if illegal_count(d) or bigons(d):
        return False
    return mode is CanonicalMode.FRAMED or not kinks(d)


def _token_text(t):
    return f'T{t}' if t > 0 else f'H{-t}'


def serialize(d):
    lines = ['ftangle v1', f'strands {d.n_strands}']
    for s, strand in enumerate(d.strands, 1):
        lines.append(' '.join([f'strand {s}:'] + [_token_text(t) for t in strand]))
    signs = ' '.join(f'{k}:{"+" if e > 0 else "-"}'
                     for k, e in enumerate(d.signs, 1))
    lines.append(f'signs: {signs}' if signs else 'signs:')
    return '\n'.join(lines) + '\n'


_TOKEN = re.compile(r'([TH])([1-9][0-9]*)$')
_SIGN = re.compile(r'([1-9][0-9]*):([+-])$')


def parse(text, strict=True):
    """Read the ``ftangle v1`` text format.

    With ``strict`` the result must also be descending.  Errors are raised
    as :class:`ParseError` carrying the 1-based line number and the token.
    """
    lines = [ln.strip() for ln in text.strip('\n').split('\n')]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0].split() != ['ftangle', 'v1']:
        raise ParseError(1, lines[0] if lines else '', "expected header 'ftangle v1'")
    if len(lines) < 2:
        raise ParseError(2, '', "expected 'strands <n>'")
    head = lines[1].split()
    if len(head) != 2 or head[0] != 'strands' or not head[1].isdigit() or int(head[1]) < 1:
        raise ParseError(2, lines[1], "expected 'strands <n>' with n >= 1")
    n = int(head[1])
    if len(lines) != n + 3:
        raise ParseError(min(len(lines), n + 3), lines[-1],
                         f'expected {n} strand lines followed by a signs line')
    strands = []
    ends = {}
    for s in range(1, n + 1):
        lineno = s + 2
        label, _, rest = lines[lineno - 1].partition(':')
        if label.split() != ['strand', str(s)]:
            raise ParseError(lineno, label, f"expected 'strand {s}:'")
        row = []
        for tok in rest.split():
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError(lineno, tok, 'expected T<k> or H<k>')
            k = int(m.group(2))
            key = (m.group(1), k)
            if key in ends:
                raise ParseError(lineno, tok, f'duplicate endpoint for arrow {k}')
            ends[key] = lineno
            row.append(k if m.group(1) == 'T' else -k)
        strands.append(row)
    lineno = n + 3
    label, _, rest = lines[-1].partition(':')
    if label.strip() != 'signs':
        raise ParseError(lineno, label, "expected 'signs:'")
    signs = {}
    for tok in rest.split():
        m = _SIGN.match(tok)
        if not m:
            raise ParseError(lineno, tok, 'expected <k>:<+|->')
        k = int(m.group(1))
        if k in signs:
            raise ParseError(lineno, tok, f'duplicate sign for arrow {k}')
        signs[k] = 1 if m.group(2) == '+' else -1
    ids = {k for _, k in ends}
    for k in sorted(ids):
        for role in 'TH':
            if (role, k) not in ends:
                other = 'H' if role == 'T' else 'T'
                raise ParseError(ends[(other, k)], f'{other}{k}',
                                 f'arrow {k} has no {"tail" if role == "T" else "head"}')
        if k not in signs:
            raise ParseError(lineno, rest.strip(), f'arrow {k} has no sign')
    for k in signs:
        if k not in ids:
            raise ParseError(lineno, f'{k}:', f'sign for unknown arrow {k}')
    d, idmap = PureTangleDiagram.renumbered(strands, signs)
    if strict:
        bad = validate(d)
        if bad is not None:
            back = {v: k for k, v in idmap.items()}[bad.arrow_id]
            raise ParseError(ends[('H', back)], f'H{back}', f'arrow {back} not descending')
    return d


def flatten(d):
    """Project to the descending representative.

    Every arrow whose head precedes its tail is reversed and its sign
    negated; descending arrows are kept as they are.
    """
    loc = d.locations
    flip = {k for k in range(1, d.crossings + 1) if loc[k] > loc[-k]}
    if not flip:
        return d
    strands = [[-t if abs(t) in flip else t for t in strand] for strand in d.strands]
    signs = {k: -e if k in flip else e for k, e in enumerate(d.signs, 1)}
    return PureTangleDiagram(strands, signs)
