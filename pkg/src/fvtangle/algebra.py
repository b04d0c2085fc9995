"""Composition of pure tangles and the invariant of virtual pure braids."""
from __future__ import annotations

import re

from .gauss import CanonicalMode, DiagramError, PureTangleDiagram
from .sorter import canonical_form

__all__ = ['compose', 'braid_generator', 'braid_word_diagram', 'braid_invariant',
           'parse_word', 'format_word', 'WordError']


class WordError(ValueError):
    pass


def compose(d1, d2):
    """Stack ``d2`` after ``d1`` strand by strand."""
    if d1.n_strands != d2.n_strands:
        raise DiagramError(f'cannot compose {d1.n_strands} strands with {d2.n_strands}')
    off = d1.crossings
    strands = [r1 + tuple(t + off if t > 0 else t - off for t in r2)
               for r1, r2 in zip(d1.strands, d2.strands)]
    return PureTangleDiagram(strands, d1.signs + d2.signs)


def braid_generator(n, i, j):
    """sigma_ij: strand i crosses over strand j positively.

    The descending representative keeps a positive arrow from strand i to j
    when i < j; otherwise the crossing is flipped and becomes a negative arrow
    from j to i.
    """
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise WordError(f'no generator sigma_{i},{j} on {n} strands')
    lo, hi = min(i, j), max(i, j)
    strands = [()] * n
    strands[lo - 1] = (1,)
    strands[hi - 1] = (-1,)
    return PureTangleDiagram(strands, (1 if i < j else -1,))


def _letters(word):
    for letter in word:
        if len(letter) == 3:
            i, j, inv = letter
        elif len(letter) == 2:
            (i, j), inv = letter, False
        else:
            raise WordError(f'bad letter {letter!r}')
        yield (j, i) if inv else (i, j)


def braid_word_diagram(n, word):
    strands = [[] for _ in range(n)]
    signs = []
    for i, j in _letters(word):
        g = braid_generator(n, i, j)
        k = len(signs) + 1
        strands[min(i, j) - 1].append(k)
        strands[max(i, j) - 1].append(-k)
        signs.append(g.signs[0])
    return PureTangleDiagram(strands, signs)


def braid_invariant(n, word, mode=CanonicalMode.FRAMED):
    """Canonical diagram of the pure braid word.

    ``word`` is a sequence of ``(i, j)`` letters for sigma_ij, or
    ``(i, j, inverse)`` triples; an inverse letter is read as sigma_ji.
    """
    return canonical_form(braid_word_diagram(n, word), mode)


_LETTER = re.compile(r'([1-9][0-9]*)([<>])([1-9][0-9]*)$')


def parse_word(text):
    """``'1>2 2<3'`` -> ``[(1, 2, False), (2, 3, True)]``."""
    out = []
    for tok in text.split():
        m = _LETTER.match(tok)
        if not m:
            raise WordError(f'bad braid letter {tok!r}')
        out.append((int(m.group(1)), int(m.group(3)), m.group(2) == '<'))
    return out


def format_word(word):
    return ' '.join(f'{i}{"<" if inv else ">"}{j}' for i, j, inv in
                    ((lt + (False,)) if len(lt) == 2 else lt for lt in word))
