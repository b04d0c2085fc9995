"""Enumeration of canonical diagrams.

A canonical diagram has no illegal interval, so every strand reads as a block
of tails followed by a block of heads.  We enumerate block sizes, then the
head order compatible with descent, then sign patterns: an opposite-sign
bigon can only sit on a pair of adjacent tails whose heads are also adjacent,
so those pairs must carry equal signs.
"""
from __future__ import annotations

import itertools

from .gauss import CanonicalMode, PureTangleDiagram

__all__ = ['enumerate_canonical', 'count_canonical', 'census_table', 'format_census']


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _layouts(n, k, mode):
    """Yield ``(tail_counts, head_rows, linked)`` for each admissible head order.

    ``head_rows[s]`` lists the arrow ids of the heads on strand ``s`` (arrows are
    numbered by tail order) and ``linked`` lists arrow pairs forced to share a
    sign.
    """
    unframed = CanonicalMode(mode) is CanonicalMode.UNFRAMED
    for tails in _compositions(k, n):
        tail_strand = [s for s in range(n) for _ in range(tails[s])]
        for heads in _compositions(k, n):
            head_strand = [s for s in range(n) for _ in range(heads[s])]
            # slot j (0-based, skeleton order) receives arrow order[j]
            for order in _head_orders(tail_strand, head_strand):
                rows, slot = [], 0
                for s in range(n):
                    rows.append(order[slot:slot + heads[s]])
                    slot += heads[s]
                if unframed and _has_kink(tails, rows):
                    continue
                yield tails, rows, _linked(tails, rows)


def _head_orders(tail_strand, head_strand):
    k = len(tail_strand)
    used = [False] * k
    order = []

    def rec(j):
        if j == k:
            yield tuple(order)
            return
        for a in range(k):
            if not used[a] and tail_strand[a] <= head_strand[j]:
                used[a] = True
                order.append(a + 1)
                yield from rec(j + 1)
                order.pop()
                used[a] = False

    yield from rec(0)


def _has_kink(tails, rows):
    first = 0
    for s, t in enumerate(tails):
        first += t
        if t and rows[s] and rows[s][0] == first:
            return True
    return False


def _linked(tails, rows):
    pos = {}
    for s, row in enumerate(rows):
        for i, a in enumerate(row):
            pos[a] = (s, i)
    out, first = [], 1
    for t in tails:
        for a in range(first, first + t - 1):
            (s1, i1), (s2, i2) = pos[a], pos[a + 1]
            if s1 == s2 and abs(i1 - i2) == 1:
                out.append((a, a + 1))
        first += t
    return out


def _components(k, linked):
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in linked:
        parent[find(a)] = find(b)
    return [find(a) for a in range(1, k + 1)]


def enumerate_canonical(n, k, mode=CanonicalMode.FRAMED, start=0):
    """Stream all canonical diagrams with ``n`` strands and ``k`` arrows.

    The order is deterministic, so ``start`` resumes an interrupted stream.
    Each diagram appears exactly once.
    """
    gen = _enumerate(n, k, mode)
    return itertools.islice(gen, start, None) if start else gen


def _enumerate(n, k, mode):
    for tails, rows, linked in _layouts(n, k, mode):
        strands, first = [], 1
        for s in range(n):
            strands.append(tuple(range(first, first + tails[s])) + tuple(-a for a in rows[s]))
            first += tails[s]
        comp = _components(k, linked)
        roots = sorted(set(comp))
        for bits in itertools.product((1, -1), repeat=len(roots)):
            sign_of = dict(zip(roots, bits))
            yield PureTangleDiagram(strands, tuple(sign_of[c] for c in comp))


def count_canonical(n, k, mode=CanonicalMode.FRAMED):
    """Size of :func:`enumerate_canonical` without building the diagrams."""
    total = 0
    for _, _, linked in _layouts(n, k, mode):
        total += 2 ** len(set(_components(k, linked)))
    return total


def census_table(n, max_crossings, mode=CanonicalMode.FRAMED):
    return {k: count_canonical(n, k, mode) for k in range(max_crossings + 1)}


def format_census(table):
    return ' '.join(f'{k}:{v}' for k, v in sorted(table.items()))
