from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fvtangle import PureTangleDiagram

settings.register_profile('default', deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('default')


@st.composite
def diagrams(draw, max_strands=3, max_crossings=7, min_crossings=0, n_strands=None):
    """Descending diagrams: endpoint slots spread over strands, a random
    pairing, and the earlier endpoint of each pair as the tail."""
    n = n_strands or draw(st.integers(1, max_strands))
    k = draw(st.integers(min_crossings, max_crossings))
    slots = sorted(draw(st.lists(st.integers(0, n - 1), min_size=2 * k, max_size=2 * k)))
    order = draw(st.permutations(range(2 * k)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k))
    tokens = [0] * (2 * k)
    for a in range(k):
        i, j = sorted(order[2 * a:2 * a + 2])
        tokens[i], tokens[j] = a + 1, -(a + 1)
    strands = [[] for _ in range(n)]
    for s, t in zip(slots, tokens):
        strands[s].append(t)
    return PureTangleDiagram(strands, signs)


def one_strand(tokens, signs):
    """Diagram from a list like ['Ta', 'Hb', ...] with signs keyed by letter."""
    ids = {}
    row = []
    for tok in tokens:
        k = ids.setdefault(tok[1:], len(ids) + 1)
        row.append(k if tok[0] == 'T' else -k)
    return PureTangleDiagram([row], {ids[name]: e for name, e in signs.items()})


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get('test_acceptance')
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section('acceptance criteria')
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
