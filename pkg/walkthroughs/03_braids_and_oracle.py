"""Walkthrough: pure braid words as diagrams, and the bounded search that
cross-checks canonical forms against raw Reidemeister moves."""
from __future__ import annotations

import random

from fvtangle import serialize
from fvtangle.algebra import braid_invariant, parse_word
from fvtangle.generate import random_canonical, random_walk
from fvtangle.moves import bfs_equivalent, format_path
from fvtangle.sorter import canonical_form

# A generator followed by its reverse vanishes in the flat theory.
print(serialize(braid_invariant(3, parse_word('1>2 2>1'))))

# The triangle relation holds as an equality of canonical diagrams.
lhs = braid_invariant(3, parse_word('1>2 1>3 2>3'))
rhs = braid_invariant(3, parse_word('2>3 1>3 1>2'))
print('triangle relation:', lhs == rhs)

# Scramble a canonical diagram with random moves, then let the search find
# a path back using primitive moves only.
rng = random.Random(4)
a = random_canonical(rng, 1, 2, 'framed')
b, path = random_walk(a, rng, 3, 'framed', max_crossings=4)
print('scrambled by:', format_path(path), sep='\n')
print('same canonical form:', canonical_form(b) == a)
res = bfs_equivalent(b, a, 4, 50_000)
print('search verdict:', 'equivalent' if res.equivalent else 'not found',
      f'({res.states} states)')
print(format_path(res.path))
