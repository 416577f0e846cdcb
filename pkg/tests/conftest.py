import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperdeligne import PositivePath, build_graph, generator  # noqa: E402

# a length-10 path in the four-line arrangement whose normal form has four factors
WORKED_PATH = "++++:0,2,3,3,2,2,3,1,0,2"


@pytest.fixture(scope="session")
def arr26():
    return generator("example-2-6")


@pytest.fixture(scope="session")
def arr23():
    return generator("example-2-3")


@pytest.fixture(scope="session")
def g26(arr26):
    return build_graph(arr26)


@pytest.fixture(scope="session")
def g23(arr23):
    return build_graph(arr23)


def walls_of(g):
    return {c.id: c.walls for c in g.chambers}


def paths_upto(g, max_len, starts=None):
    """All positive paths of length <= max_len from the given chambers (default: all)."""
    out = []
    for c in starts or g.ids:
        frontier = [(c, ())]
        for _ in range(max_len + 1):
            out.extend(PositivePath(c, cr) for _, cr in frontier)
            frontier = [(g.step(x, h), cr + (h,)) for x, cr in frontier for h in sorted(g.walls(x))]
    return out


def random_path(g, rng, max_len, min_len=1):
    c = rng.choice(g.ids)
    cur, cr = c, []
    for _ in range(rng.randint(min_len, max_len)):
        h = rng.choice(sorted(g.walls(cur)))
        cr.append(h)
        cur = g.step(cur, h)
    return PositivePath(c, cr)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
