"""The nine acceptance criteria, each checked exactly over the corpus of
enumerate_small(2, 2) plus 1000 seeded random atlases.  Every test records
a pass/fail line that is printed in the terminal summary."""
import io
import json
import random

import pytest

from striped.atlas import components, serialize
from striped.canonical import canonical_form
from striped.cli import main
from striped.finite_model import stable_model_hcl
from striped.fixtures import CYL, MOB
from striped.leafspace import (build_leaf_space, hcl, leafspace_isomorphic, regular_oracle,
                               smooth, special_points)
from striped.leaves import (REGULAR_TYPES, SINGULAR_TYPES, SPECIAL_TYPES, BoundaryLeaf,
                            LeafType, classify, classify_all, enumerate_leaves, is_singular,
                            is_special)
from striped.surgery import (ComponentKind, Extraction, c2_pairs, cut, merge_c2, reduce,
                             reduction_outcomes, reglue)
from striped.theorems import (check_families, check_fibration_criterion,
                              check_strip_characterization)

from .oracles import literal_cases

pytestmark = pytest.mark.acceptance


def _finish(criterion, number, title, failures, checked):
    detail = f"{checked} checked, {len(failures)} failures"
    if failures:
        detail += f"; first: {failures[0]}"
    criterion(number, title, not failures, detail)
    assert not failures, failures[:5]


def test_1_taxonomy_partition(corpus, criterion):
    failures, n = [], 0
    for a in corpus:
        for leaf in enumerate_leaves(a):
            n += 1
            t = classify(a, leaf)
            ok = (literal_cases(a, leaf) == {t}
                  and is_special(a, leaf) == (t in SPECIAL_TYPES)
                  and is_singular(a, leaf) == (t in SINGULAR_TYPES)
                  and (not is_special(a, leaf) or is_singular(a, leaf)))
            if not ok:
                failures.append((serialize(a).strip(), leaf.label))
    ok_sets = SPECIAL_TYPES == {LeafType.B2, LeafType.C32, LeafType.C33} and \
        SINGULAR_TYPES == {LeafType.B2, LeafType.C31, LeafType.C32, LeafType.C33}
    if not ok_sets:
        failures.append("type families")
    _finish(criterion, 1, "taxonomy partition and equivalences", failures, n)


def test_2_hcl_oracle(corpus, criterion):
    failures = []
    for a in corpus:
        ls = build_leaf_space(a)
        model = stable_model_hcl(a, (3, 4, 5))
        closed = {n: hcl(ls, n) for n in ls.nodes}
        special = {n for n in ls.nodes if is_special(a, n)}
        if model is None or model != closed or special_points(ls) != special:
            failures.append(serialize(a).strip())
    _finish(criterion, 2, "hcl equals finite-model closure (m = 3, 4, 5)", failures, len(corpus))


def test_3_regularity_oracle(corpus, criterion):
    failures, n = [], 0
    for a in corpus:
        ls = build_leaf_space(a)
        for leaf in ls.nodes:
            n += 1
            if regular_oracle(ls, leaf) != (classify(a, leaf) in REGULAR_TYPES):
                failures.append((serialize(a).strip(), leaf.label))
    _finish(criterion, 3, "regular_oracle matches types A/B1/C1/C2", failures, n)


def _count_merges(a):
    merges = 0
    while c2_pairs(a):
        a = merge_c2(a, min(c2_pairs(a)))
        merges += 1
    return a, merges


def test_4_reduction(corpus, small_corpus, criterion):
    failures = []
    for a in corpus:
        reduced, report = reduce(a)
        replay, merges = _count_merges(a)
        closed = {e.strip for e in report}
        c1_ok = all(len(c.strips) == 1 and c.strips[0].id in closed
                    for c in components(reduced)
                    for t in classify_all(c).values() if t is LeafType.C1)
        ok = (replay == reduced
              and merges == len(a.strips) - len(reduced.strips)
              and merges <= max(len(a.strips) - 1, 0)
              and not c2_pairs(reduced)
              and c1_ok
              and leafspace_isomorphic(smooth(build_leaf_space(a)),
                                       smooth(build_leaf_space(reduced))))
        if not ok:
            failures.append(serialize(a).strip())
    confluent = 0
    for a in small_corpus:
        outcomes = reduction_outcomes(a)
        if outcomes != {canonical_form(reduce(a)[0])}:
            failures.append(("not confluent", serialize(a).strip()))
        else:
            confluent += 1
    _finish(criterion, 4, "reduction terminates, is complete, keeps the smoothed leaf space "
            f"and is confluent ({confluent} atlases, all merge orders)", failures, len(corpus))


def test_5_cutting_contract(corpus, criterion):
    rng = random.Random(20240611)
    failures, n = [], 0
    for a in corpus:
        ids = [p.id for p in a.pairs]
        before = classify_all(a)
        for _ in range(10):
            n += 1
            P = {pid for pid in ids if rng.random() < 0.5}
            b, cm = cut(a, P)
            touched = {i for r in cm.removed for i in (r.pair.x, r.pair.y)}
            after = classify_all(b)
            kept = all(after[leaf] is t for leaf, t in before.items()
                       if not (isinstance(leaf, BoundaryLeaf) and leaf.rep & touched))
            new = [x for x in after if x not in before]
            doubled = len(new) == 2 * len(P) and all(
                isinstance(x, BoundaryLeaf) and not x.glued for x in new)
            if not (reglue(b, cm) == a and kept and doubled):
                failures.append((serialize(a).strip(), sorted(P)))
    _finish(criterion, 5, "cut/reglue round trip, locality and doubling", failures, n)


def _check_corpus(corpus, check):
    return [r.witness for r in map(check, corpus) if not r.passed]


def test_6_characterization_pipeline(corpus, criterion):
    failures = _check_corpus(corpus, check_strip_characterization)
    _finish(criterion, 6, "cut singular leaves + reduce leaves strips, cylinders, "
            "Moebius bands", failures, len(corpus))


def test_7_fibration_criterion(corpus, criterion):
    failures = _check_corpus(corpus, check_fibration_criterion)
    _finish(criterion, 7, "cross sections everywhere iff no c31/c32", failures, len(corpus))


def test_8_families(corpus, criterion):
    failures = _check_corpus(corpus, check_families)
    _finish(criterion, 8, "special in singular, dZ u special in D, reduced iff D = dZ u Sing",
            failures, len(corpus))


def _iso_cli(tmp_path, *flags):
    a, b = tmp_path / "cyl.json", tmp_path / "mob.json"
    a.write_text(serialize(CYL))
    b.write_text(serialize(MOB))
    out = io.StringIO()
    code = main(["iso", str(a), str(b), *flags], io.StringIO(), out, io.StringIO())
    return code, json.loads(out.getvalue())


def test_9_fixtures(tmp_path, criterion):
    failures = []
    if reduce(CYL)[1] != (Extraction("A", ComponentKind.CYLINDER),):
        failures.append("CYL not reported as cylinder")
    if reduce(MOB)[1] != (Extraction("A", ComponentKind.MOEBIUS),):
        failures.append("MOB not reported as Moebius band")
    for name, a in (("CYL", CYL), ("MOB", MOB)):
        s = smooth(build_leaf_space(a))
        if not (len(s.edges) == 1 and s.loops == set(s.edges) and not s.nodes):
            failures.append(f"smoothed {name} is not a single loop")
    if canonical_form(CYL) == canonical_form(MOB):
        failures.append("canonical forms agree")
    if _iso_cli(tmp_path, "--leafspace") != (0, {"equal": True, "by": "leafspace"}):
        failures.append("iso --leafspace does not report equal")
    if _iso_cli(tmp_path) != (1, {"equal": False, "by": "canonical"}):
        failures.append("iso does not separate CYL and MOB")
    _finish(criterion, 9, "cylinder and Moebius fixtures", failures, 6)
