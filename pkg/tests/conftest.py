from collections import deque

import pytest

from adlv.adlv_sets import s_adm_nonempty
from adlv.affine_weyl import AffineWeylGroup
from adlv.reduction import stratification

MU = {2: (1, 1, 0, 0), 3: (1, 1, 1, 0, 0, 0), 4: (1, 1, 1, 1, 0, 0, 0, 0)}

# lines collected by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def groups():
    return {n: AffineWeylGroup.of("gsp", n) for n in (2, 3, 4)}


@pytest.fixture(scope="session")
def G3(groups):
    return groups[3]


@pytest.fixture(scope="session")
def G4(groups):
    return groups[4]


@pytest.fixture(scope="session")
def records(groups):
    return {n: s_adm_nonempty(groups[n], MU[n]) for n in (2, 3, 4)}


@pytest.fixture(scope="session")
def strats(groups):
    return {n: stratification(groups[n], MU[n]) for n in (3, 4)}


def cayley_ball(G, radius, start=None):
    """Exact word-length distance from ``start`` in the Cayley graph of S~ (right multiplication)."""
    start = G.identity if start is None else start
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if dist[x] == radius:
            continue
        for s in G.simple_reflections:
            y = G.compose(x, s)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def subword_products(G, w):
    """All products of subwords of one reduced word of w (the Bruhat ideal below w)."""
    word = G.reduced_word(w)
    out = {G.tau_power(word.omega)}
    for i in reversed(word.letters):
        s = G.s(i)
        out |= {G.compose(s, x) for x in out}
    return out
