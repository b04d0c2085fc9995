"""Walkthrough: build a descending diagram, look at its illegal sites, and
sort it to canonical form while recording a replayable trace."""
from __future__ import annotations

import random

from fvtangle import illegal_count, illegal_sites, parse, serialize
from fvtangle.sorter import available_sorts, canonicalize, format_trace, verify_trace

# Two strands, three arrows; tokens T<k>/H<k> mark the tail and head of arrow k.
text = """ftangle v1
strands 2
strand 1: T1 H1 T2 T3 H2
strand 2: H3
signs: 1:+ 2:- 3:+
"""
d = parse(text)
print('crossings:', d.crossings, ' illegal boundaries:', illegal_count(d))
print('illegal sites:', illegal_sites(d))

# Sorting moves currently available (group finger, bigon and kink removal).
for site in available_sorts(d, 'framed'):
    print('  available:', site.kind.value, site.location)

# Sort with the deterministic default, then check the trace move by move.
c, trace = canonicalize(d, 'framed')
print(serialize(c))
print(format_trace(trace))
print('trace replays:', bool(verify_trace(d, trace)))

# The unframed theory also removes kinks, so it can sort further.
print(serialize(canonicalize(d, 'unframed')[0]))

# Different random choices of sorting move always land on the same diagram.
rng = random.Random(0)
forms = {canonicalize(d, 'framed', 'random', rng.getrandbits(32), expand=False)[0]
         for _ in range(20)}
print('distinct results over 20 random strategies:', len(forms))
