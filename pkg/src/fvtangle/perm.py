"""Signed permutations and one-strand canonical diagrams."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .gauss import CanonicalMode, DiagramError, PureTangleDiagram, is_canonical

__all__ = [
    'SignedPermutation', 'is_reduced', 'encode', 'decode', 'count_reduced',
    'signed_permutations', 'format_sperm', 'parse_sperm',
]


@dataclass(frozen=True)
class SignedPermutation:
    """``images[i - 1] == (rho(i), sign)`` for ``i = 1..n``."""
    images: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        images = tuple((int(j), int(e)) for j, e in self.images)
        if sorted(j for j, _ in images) != list(range(1, len(images) + 1)):
            raise ValueError(f'not a permutation: {[j for j, _ in images]}')
        if any(e not in (1, -1) for _, e in images):
            raise ValueError('signs must be +1 or -1')
        object.__setattr__(self, 'images', images)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]


def is_reduced(sp):
    """No two consecutive inputs map to consecutive values of opposite sign."""
    for (j1, e1), (j2, e2) in zip(sp.images, sp.images[1:]):
        if abs(j1 - j2) == 1 and e1 != e2:
            return False
    return True


def signed_permutations(n):
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(zip(perm, signs)))


def count_reduced(n):
    """Brute-force count of reduced signed permutations of size ``n``."""
    return sum(1 for sp in signed_permutations(n) if is_reduced(sp))


def encode(c):
    """Read off the signed permutation of a one-strand framed canonical diagram.

    Tails are labelled 1..n along the strand, heads likewise; tail label i maps
    to the head label of the same arrow together with its sign.
    """
    if c.n_strands != 1:
        raise DiagramError('encode needs a one-strand diagram')
    if not is_canonical(c, CanonicalMode.FRAMED):
        raise DiagramError('encode needs a framed canonical diagram')
    heads = [-t for t in c.strands[0] if t < 0]
    label = {k: j for j, k in enumerate(heads, 1)}
    # arrows are numbered by tail order, so arrow i has tail label i
    return SignedPermutation(tuple((label[i], c.signs[i - 1])
                                   for i in range(1, c.crossings + 1)))


def decode(sp):
    if not is_reduced(sp):
        raise ValueError('decode needs a reduced signed permutation')
    n = sp.n
    heads = [0] * n
    for i, (j, _) in enumerate(sp.images, 1):
        heads[j - 1] = -i
    return PureTangleDiagram((tuple(range(1, n + 1)) + tuple(heads),),
                             tuple(e for _, e in sp.images))


def format_sperm(sp):
    body = ' '.join(f'{i}:({j},{"+" if e > 0 else "-"})'
                    for i, (j, e) in enumerate(sp.images, 1))
    return f'sperm {sp.n}\n{body}\n'


_ENTRY = re.compile(r'([1-9][0-9]*):\(([1-9][0-9]*),([+-])\)$')


def parse_sperm(text):
    lines = [ln.strip() for ln in text.strip('\n').split('\n')]
    head = lines[0].split() if lines else []
    if len(head) != 2 or head[0] != 'sperm' or not head[1].isdigit():
        raise ValueError("expected header 'sperm <n>'")
    n = int(head[1])
    toks = ' '.join(lines[1:]).split()
    if len(toks) != n:
        raise ValueError(f'expected {n} entries, got {len(toks)}')
    images = []
    for i, tok in enumerate(toks, 1):
        m = _ENTRY.match(tok)
        if not m or int(m.group(1)) != i:
            raise ValueError(f'bad entry {tok!r} at index {i}')
        images.append((int(m.group(2)), 1 if m.group(3) == '+' else -1))
    return SignedPermutation(tuple(images))
