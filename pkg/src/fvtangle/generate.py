"""Pseudorandom diagrams and move walks, deterministic given the generator."""
from __future__ import annotations

import random

from .gauss import CanonicalMode, PureTangleDiagram
from .moves import (
    apply_move, r1_delete_sites, r1_insert_sites, r2_delete_sites, r2_insert_sites, r3_sites,
)
from .sorter import canonical_form

__all__ = ['random_diagram', 'random_canonical', 'primitive_sites', 'random_move',
           'random_walk', 'rand']


def random_diagram(rng, n_strands, crossings, signs=None):
    """Uniform endpoint slots on ``n_strands`` strands, random pairing, the
    earlier endpoint of each pair as tail; signs random unless given."""
    k = crossings
    slots = sorted(rng.randrange(n_strands) for _ in range(2 * k))
    order = list(range(2 * k))
    rng.shuffle(order)
    tokens = [0] * (2 * k)
    for a in range(k):
        i, j = sorted(order[2 * a:2 * a + 2])
        tokens[i], tokens[j] = a + 1, -(a + 1)
    strands = [[] for _ in range(n_strands)]
    for s, t in zip(slots, tokens):
        strands[s].append(t)
    if signs is None:
        signs = [rng.choice((1, -1)) for _ in range(k)]
    return PureTangleDiagram(strands, signs)


def random_canonical(rng, n_strands, crossings, mode=CanonicalMode.FRAMED):
    return canonical_form(random_diagram(rng, n_strands, crossings), mode)


def primitive_sites(d, mode=CanonicalMode.FRAMED, max_crossings=None):
    """Applicable primitive moves grouped by kind (empty groups dropped)."""
    groups = [r2_delete_sites(d), r2_insert_sites(d, max_crossings), r3_sites(d)]
    if CanonicalMode(mode) is CanonicalMode.UNFRAMED:
        groups.append(r1_delete_sites(d))
        if max_crossings is None or d.crossings < max_crossings:
            groups.append(r1_insert_sites(d))
    return [g for g in groups if g]


def random_move(rng, d, mode=CanonicalMode.FRAMED, max_crossings=None):
    """A random primitive move: first a kind, then a site of that kind.

    Choosing the kind first keeps the many R2 insertion sites from swamping
    deletions and R3 moves.
    """
    groups = primitive_sites(d, mode, max_crossings)
    if not groups:
        return None
    return rng.choice(rng.choice(groups))


def random_walk(d, rng, steps, mode=CanonicalMode.FRAMED, max_crossings=None):
    """Apply ``steps`` random primitive moves; returns ``(diagram, path)``."""
    path = []
    for _ in range(steps):
        site = random_move(rng, d, mode, max_crossings)
        if site is None:
            break
        d = apply_move(d, site)
        path.append(site)
    return d, path


def rand(seed, n_strands, crossings, moves, mode=CanonicalMode.FRAMED):
    """Random canonical seed with ``crossings`` arrows before sorting, then a
    walk of ``moves`` primitive moves."""
    rng = random.Random(seed)
    d = random_canonical(rng, n_strands, crossings, mode)
    return random_walk(d, rng, moves, mode)[0]
