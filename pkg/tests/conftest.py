import pytest
from hypothesis import strategies as st

from striped.atlas import GluingPair, Strip, StripedAtlas
from striped.generator import GenParams, enumerate_small, random_atlas


@st.composite
def atlases(draw, max_strips=4, max_ivals=3):
    """Valid atlases with arbitrary (but distinct) ids and random gluings."""
    n = draw(st.integers(1, max_strips))
    shapes = draw(st.lists(st.tuples(st.integers(0, max_ivals), st.integers(0, max_ivals)),
                           min_size=n, max_size=n))
    total = sum(lo + up for lo, up in shapes)
    names = draw(st.lists(st.text("abcxyz019", min_size=1, max_size=4),
                          min_size=n + total, max_size=n + total, unique=True))
    strip_ids, interval_ids = names[:n], iter(names[n:])
    strips = []
    for sid, (lo, up) in zip(strip_ids, shapes):
        strips.append(Strip(sid, tuple(next(interval_ids) for _ in range(lo)),
                            tuple(next(interval_ids) for _ in range(up))))
    intervals = [i for s in strips for i in (*s.lower, *s.upper)]
    order = draw(st.permutations(intervals))
    pairs = []
    for k in range(0, len(order) - 1, 2):
        if draw(st.booleans()):
            sign = draw(st.sampled_from((1, -1)))
            pairs.append(GluingPair(f"p{len(pairs)}", order[k], order[k + 1], sign))
    return StripedAtlas(tuple(strips), tuple(pairs))


def _random_corpus():
    return [random_atlas(GenParams(seed, 6, 3, 0.5)) for seed in range(1, 1001)]


@pytest.fixture(scope="session")
def small_corpus():
    return list(enumerate_small(2, 2))


@pytest.fixture(scope="session")
def random_corpus():
    return _random_corpus()


@pytest.fixture(scope="session")
def corpus(small_corpus, random_corpus):
    """enumerate_small(2, 2) followed by seeds 1..1000 (<=6 strips,
    <=3 intervals per side, density 1/2)."""
    return small_corpus + random_corpus


# one line per acceptance criterion in the terminal summary

_CRITERIA: dict = {}


@pytest.fixture
def criterion(request):
    def record(number, title, passed, detail=""):
        _CRITERIA[number] = (title, passed, detail)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, passed, detail = _CRITERIA[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}" + (f"  ({detail})" if detail else ""))
