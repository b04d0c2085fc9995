from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fvtangle import PureTangleDiagram, empty, parse, serialize, validate
from fvtangle.moves import (
    MoveError, MoveKind, MoveSite, _lists, _rebuild, _triangles, apply_move, bfs_equivalent,
    bfs_reachable, bfs_search, expand, f_expand, f_inverse_sites, f_move, f_sites, format_move,
    format_path, neighbors, parse_move, parse_path, r1_apply, r1_delete_sites, r1_insert_sites,
    r2_apply, r2_delete_sites, r2_insert_sites, r3_apply, r3_sites, replay,
)
from fvtangle.sorter import canonical_form

from conftest import diagrams, one_strand


def test_r1_examples():
    kink = PureTangleDiagram([[1, -1]], [1])
    (site,) = r1_delete_sites(kink)
    assert r1_apply(kink, site) == empty(1)
    d = one_strand(['Ta', 'Tb', 'Hb', 'Ha'], {'a': 1, 'b': -1})
    assert r1_delete_sites(d) == [MoveSite(MoveKind.R1_DELETE, (2,))]
    assert r1_apply(d, r1_delete_sites(d)[0]) == kink
    ins = r1_apply(empty(1), MoveSite(MoveKind.R1_INSERT, (1, 1), (-1,)))
    assert ins == PureTangleDiagram([[1, -1]], [-1])


@pytest.mark.parametrize('tokens', [['Ta', 'Tb', 'Ha', 'Hb'], ['Ta', 'Tb', 'Hb', 'Ha']])
def test_r2_delete_examples(tokens):
    d = one_strand(tokens, {'a': 1, 'b': -1})
    (site,) = r2_delete_sites(d)
    assert r2_apply(d, site) == empty(1)
    assert r2_delete_sites(one_strand(tokens, {'a': 1, 'b': 1})) == []


def test_r2_delete_refuses_non_bigon():
    d = one_strand(['Ta', 'Ha', 'Tb', 'Hb'], {'a': 1, 'b': -1})
    with pytest.raises(MoveError):
        r2_apply(d, MoveSite(MoveKind.R2_DELETE, (1, 2)))


def test_r3_example_on_three_strands():
    d = PureTangleDiagram([[1, 2], [-1, 3], [-2, -3]], [1, 1, 1])
    (site,) = r3_sites(d)
    out = r3_apply(d, site)
    # a=1, b=2, c=3 before renumbering
    assert out == PureTangleDiagram([[2, 1], [3, -1], [-3, -2]], {1: 1, 2: 1, 3: 1})
    assert r3_apply(out, r3_sites(out)[0]) == d


def test_r3_realizability_fixes_signs_up_to_mirror():
    import itertools
    ok = [sg for sg in itertools.product((1, -1), repeat=3)
          if r3_sites(PureTangleDiagram([[1, 2], [-1, 3], [-2, -3]], sg))]
    assert ok == [(1, 1, 1), (-1, -1, -1)]


def test_unrealizable_r3_would_change_the_class():
    # The same transposition with a forbidden sign pattern is geometrically
    # impossible, and it does change the canonical form.
    d = parse('ftangle v1\nstrands 1\nstrand 1: T1 T2 H1 T3 H3 H2\nsigns: 1:- 2:- 3:-\n')
    assert _triangles(d) and not r3_sites(d)
    strands, signs = _lists(d)
    for s, i in _triangles(d)[0]:
        strands[s][i], strands[s][i + 1] = strands[s][i + 1], strands[s][i]
    swapped = _rebuild(strands, signs)[0]
    assert validate(swapped) is None
    assert canonical_form(swapped) != canonical_form(d)


def test_no_r3_below_three_crossings():
    for d in (empty(1), PureTangleDiagram([[1, 2, -2, -1]], [1, 1])):
        assert r3_sites(d) == []


def all_sites(d, max_crossings=None):
    return (r1_delete_sites(d) + r1_insert_sites(d) + r2_delete_sites(d)
            + r2_insert_sites(d, max_crossings) + r3_sites(d)
            + f_sites(d, max_crossings) + f_inverse_sites(d))


@given(diagrams(max_crossings=5))
def test_every_site_yields_a_valid_diagram(d):
    for site in all_sites(d):
        out = apply_move(d, site)
        assert validate(out) is None, format_move(site)


@given(diagrams(max_crossings=5), st.data())
def test_insert_then_delete_is_identity(d, data):
    site = data.draw(st.sampled_from(r2_insert_sites(d)))
    out = apply_move(d, site)
    k = d.crossings
    assert d in {apply_move(out, b) for b in r2_delete_sites(out)}
    r1 = data.draw(st.sampled_from(r1_insert_sites(d)))
    out = apply_move(d, r1)
    assert out.crossings == k + 1
    assert any(apply_move(out, s) == d for s in r1_delete_sites(out))


@given(diagrams(max_crossings=6))
def test_r3_is_an_involution(d):
    for site in r3_sites(d):
        out = r3_apply(d, site)
        assert out.crossings == d.crossings
        assert any(r3_apply(out, s) == d for s in r3_sites(out))


@given(diagrams(max_crossings=4))
def test_finger_moves(d):
    for site in f_sites(d):
        out = f_move(d, site)
        assert out.crossings == d.crossings + 2
        prims = f_expand(d, site)
        assert [p.kind for p in prims] == [MoveKind.R2_INSERT, MoveKind.R3]
        assert replay(d, prims) == out
        assert d in {apply_move(out, s) for s in f_inverse_sites(out)}


def test_expand_passes_primitives_through():
    site = MoveSite(MoveKind.R1_INSERT, (1, 1), (1,))
    assert expand(empty(1), site) == [site]


def test_move_text_round_trip():
    d = PureTangleDiagram([[1, 2, -1, 3, -2, -3]], [1, 1, -1])
    sites = all_sites(d) + r3_sites(d)
    assert sites
    for site in sites:
        assert parse_move(format_move(site)) == site
    assert parse_path(format_path(sites)) == sites
    assert format_move(MoveSite(MoveKind.R2_INSERT, (1, 0, 1, 1), (1, 0))) == 'R2_insert 1 0 1 1 / + 0'
    with pytest.raises(MoveError):
        parse_move('R9 1 2')


def test_bfs_examples():
    a = one_strand(['Ta', 'Tb', 'Ha', 'Hb'], {'a': 1, 'b': -1})
    assert bfs_equivalent(a, a, 3, 10) == ('equivalent', (), 1)
    res = bfs_equivalent(a, empty(1), 4, 1000)
    assert res.equivalent and [s.kind for s in res.path] == [MoveKind.R2_DELETE]
    kink = PureTangleDiagram([[1, -1]], [1])
    for bound in (1, 3, 5):
        assert bfs_equivalent(kink, empty(1), bound, 10 ** 5).verdict == 'unknown'
    assert bfs_equivalent(kink, empty(1), 3, 10 ** 5, mode='unframed').equivalent


def test_bfs_state_cap_gives_unknown():
    res = bfs_equivalent(empty(1), PureTangleDiagram([[1, -1, 2, -2]], [1, -1]), 4, 3)
    assert res.verdict == 'unknown' and res.states == 3


def test_bfs_search_agrees_with_pairwise():
    seeds = [empty(1), PureTangleDiagram([[1, 2, -1, -2]], [1, -1]),
             PureTangleDiagram([[1, 2, -2, -1]], [1, 1]),
             PureTangleDiagram([[1, -1, 2, -2]], [1, 1])]
    many = bfs_search(seeds[0], seeds[1:], 4, 10 ** 5)
    for b in seeds[1:]:
        single = bfs_equivalent(seeds[0], b, 4, 10 ** 5)
        assert many[b].verdict == single.verdict
        if single.equivalent:
            assert replay(seeds[0], many[b].path) == b


@pytest.mark.parametrize('seed, bound', [
    (empty(1), 4),
    (PureTangleDiagram([[1, -1]], [1]), 3),
    (PureTangleDiagram([[1], [-1]], [-1]), 3),
])
def test_finger_and_r3_closures(seed, bound):
    """{F, R2} and {R3, R2} reach the same diagrams once the finger closure
    gets two extra crossings of room; within one bound they agree below the
    top crossing level."""
    prim = bfs_reachable(seed, bound, moveset='primitive')
    fing = bfs_reachable(seed, bound, moveset='finger')
    assert fing <= prim
    assert {d for d in prim if d.crossings < bound - 1} == \
        {d for d in fing if d.crossings < bound - 1}
    assert prim <= bfs_reachable(seed, bound + 2, moveset='finger')


@given(diagrams(max_crossings=4))
def test_neighbors_respect_bound(d):
    for site, out in neighbors(d, 'unframed', d.crossings + 1):
        assert out.crossings <= d.crossings + 1
        assert serialize(apply_move(d, site)) == serialize(out)
