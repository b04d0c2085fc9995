"""Walkthrough: enumerate canonical diagrams and match the one-strand
framed case against reduced signed permutations."""
from __future__ import annotations

from fvtangle import serialize
from fvtangle.census import census_table, enumerate_canonical, format_census
from fvtangle.perm import count_reduced, decode, encode, format_sperm

# Counts of canonical one-strand diagrams, by number of crossings.
framed = census_table(1, 5, 'framed')
print('framed   ', format_census(framed))
print('unframed ', format_census(census_table(1, 5, 'unframed')))
print('reduced  ', ' '.join(f'{k}:{count_reduced(k)}' for k in range(6)))

# Every framed one-strand canonical diagram is a block of tails then a block
# of heads; reading off where each head sits gives a signed permutation.
for c in enumerate_canonical(1, 2, 'framed'):
    sp = encode(c)
    assert decode(sp) == c
    print(serialize(c).splitlines()[2], '->', format_sperm(sp).split('\n')[1])

# Tables for more strands.
for n in (2, 3):
    print(f'{n} strands', format_census(census_table(n, 3, 'framed')))
