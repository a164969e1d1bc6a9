from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from striped.atlas import serialize, validate
from striped.canonical import canonical_form
from striped.generator import GenParams, _raw_atlases, enumerate_small, random_atlas
from striped.leaves import LeafType, classify_all

from .oracles import brute_equivalent


def test_determinism():
    p = GenParams(42, 5, 3, Fraction(1, 2))
    assert serialize(random_atlas(p)) == serialize(random_atlas(p))


def test_seeds_differ():
    texts = {serialize(random_atlas(GenParams(s))) for s in range(50)}
    assert len(texts) > 40


@pytest.mark.parametrize("seed", range(20))
def test_density_zero_has_no_pairs(seed):
    a = random_atlas(GenParams(seed, 5, 3, 0))
    assert a.pairs == ()
    assert set(classify_all(a).values()) <= {LeafType.A, LeafType.B1, LeafType.B2}


def test_density_one_glues_all_couples():
    a = random_atlas(GenParams(3, 4, 3, 1))
    assert len(a.pairs) == len(list(a.intervals())) // 2


def test_ten_thousand_draws_are_valid():
    for seed in range(10_000):
        assert validate(random_atlas(GenParams(seed, 6, 3, Fraction(1, 2)))) == []


@given(st.integers(0, 2**64 - 1), st.integers(0, 6), st.integers(0, 3),
       st.fractions(0, 1))
def test_random_atlas_respects_bounds(seed, k, m, d):
    a = random_atlas(GenParams(seed, k, m, d))
    assert validate(a) == []
    assert len(a.strips) <= k
    assert all(len(s.lower) <= m and len(s.upper) <= m for s in a.strips)


@pytest.mark.parametrize("kwargs", [
    dict(seed=-1), dict(seed=2**64), dict(seed=0, max_strips=-1),
    dict(seed=0, gluing_density=Fraction(3, 2)),
])
def test_bad_params(kwargs):
    with pytest.raises(ValueError):
        GenParams(**kwargs)


# one strip, at most one interval per side, enumerated by hand
HAND_CLASSES_1_1 = ("bare", "one interval", "two unglued", "cylinder", "moebius")


def test_enumerate_one_strip_one_interval():
    out = list(enumerate_small(1, 1))
    assert len(out) == len(HAND_CLASSES_1_1)
    unglued = [a for a in out if not a.pairs]
    assert sorted((len(a.strips[0].lower), len(a.strips[0].upper)) for a in unglued) \
        == [(0, 0), (0, 1), (1, 1)]
    signs = sorted(a.pairs[0].sign for a in out if a.pairs)
    assert signs == [-1, 1]


def test_enumerate_has_no_duplicates_and_is_deterministic():
    a = [serialize(x) for x in enumerate_small(2, 2)]
    assert len(a) == len(set(a))
    assert len({canonical_form(x) for x in enumerate_small(2, 2)}) == len(a)
    assert a == [serialize(x) for x in enumerate_small(2, 2)]


def test_enumerate_classes_match_brute_force():
    reps = list(enumerate_small(2, 1))
    for a in _raw_atlases(2, 1):
        assert sum(brute_equivalent(r, a) for r in reps) == 1
