from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fvtangle import DiagramError, PureTangleDiagram, empty, serialize
from fvtangle.algebra import (
    WordError, braid_generator, braid_invariant, braid_word_diagram, compose, format_word,
    parse_word,
)
from fvtangle.sorter import canonical_form

from conftest import diagrams


def test_braid_generator_examples():
    assert braid_generator(2, 1, 2) == PureTangleDiagram([[1], [-1]], [1])
    assert braid_generator(2, 2, 1) == PureTangleDiagram([[1], [-1]], [-1])
    assert braid_generator(3, 1, 3) == PureTangleDiagram([[1], [], [-1]], [1])
    for bad in ((2, 1, 1), (2, 0, 1), (2, 1, 3)):
        with pytest.raises(WordError):
            braid_generator(*bad)


def test_compose_identity_and_mismatch():
    d = PureTangleDiagram([[1, 2], [-1, -2]], [1, -1])
    assert compose(d, empty(2)) == d
    assert compose(empty(2), d) == d
    with pytest.raises(DiagramError):
        compose(d, empty(3))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*[diagrams(n_strands=n, max_crossings=4)] * 3)))
def test_compose_associative(ds):
    a, b, c = ds
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*[diagrams(n_strands=n, max_crossings=5)] * 2)),
       st.sampled_from(['framed', 'unframed']))
def test_compose_respects_canonical_forms(ds, mode):
    a, b = ds
    lhs = canonical_form(compose(a, b), mode)
    rhs = canonical_form(compose(canonical_form(a, mode), canonical_form(b, mode)), mode)
    assert lhs == rhs


def test_braid_invariant_examples():
    assert braid_invariant(2, [(1, 2), (2, 1)]) == empty(2)
    assert braid_invariant(3, [(1, 2), (1, 3), (2, 3)]) == braid_invariant(3, [(2, 3), (1, 3), (1, 2)])
    assert braid_invariant(4, [(1, 2), (3, 4)]) == braid_invariant(4, [(3, 4), (1, 2)])


def test_inverse_letters_read_as_reversed_generators():
    assert braid_word_diagram(3, [(1, 3, True)]) == braid_generator(3, 3, 1)
    assert braid_invariant(2, [(1, 2), (1, 2, True)]) == empty(2)


def test_word_syntax():
    word = parse_word('1>2  2<3\n3>1')
    assert word == [(1, 2, False), (2, 3, True), (3, 1, False)]
    assert format_word(word) == '1>2 2<3 3>1'
    for bad in ('1-2', '0>1', '1>', 'a>b'):
        with pytest.raises(WordError):
            parse_word(bad)


def test_unframed_kills_nothing_on_braids():
    # pure braid diagrams have no kinks, so both modes agree on generators
    d = braid_invariant(3, [(2, 1), (3, 2)], 'unframed')
    assert serialize(d) == serialize(braid_invariant(3, [(2, 1), (3, 2)], 'framed'))
