"""The characterization results run as falsifiable checks on one atlas.

Each check compares two independently computed sides wherever possible:
leaf-type predicates against the leaf-space oracles (Hausdorff closure,
slot-based regularity and cross-section criteria).  A failing report
carries the serialized atlas so it can be replayed from the command line.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .atlas import StripedAtlas, components, serialize
from .leafspace import (build_leaf_space, cross_section_oracle, regular_oracle,
                        special_points)
from .leaves import (NO_CROSS_SECTION_TYPES, SINGULAR_TYPES, boundary_leaves_D,
                     boundary_of_Z, classify, classify_all, is_reduced,
                     leaf_of_pair)
from .surgery import cut, reduce


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    verdict: Verdict
    witness: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_obj(self) -> dict:
        return {"theorem": self.theorem, "verdict": self.verdict.value,
                "witness": self.witness, "details": self.details}


def _report(theorem, atlas, failures, **details) -> TheoremReport:
    if failures:
        details["failures"] = failures
        return TheoremReport(theorem, Verdict.FAIL, serialize(atlas).strip(), details)
    return TheoremReport(theorem, Verdict.PASS, None, details)


def _labels(leaves) -> list[str]:
    return sorted(x.label for x in leaves)


def check_families(atlas: StripedAtlas) -> TheoremReport:
    """Special leaves are singular, boundary and special leaves lie in D, and
    the atlas is reduced exactly when D = dZ u Sing."""
    ls = build_leaf_space(atlas)
    special = special_points(ls)
    singular = frozenset(n for n in ls.nodes if not regular_oracle(ls, n))
    D, dZ = boundary_leaves_D(atlas), boundary_of_Z(atlas)
    reduced = is_reduced(atlas)
    failures = []
    if not special <= singular:
        failures.append(f"special but regular: {_labels(special - singular)}")
    if not (dZ | special) <= D:
        failures.append(f"outside D: {_labels((dZ | special) - D)}")
    if reduced != (D == dZ | singular):
        failures.append(f"reduced={reduced} disagrees with D = dZ u Sing")
    return _report("families", atlas, failures, reduced=reduced,
                   special=_labels(special), singular=_labels(singular),
                   D=_labels(D), boundary=_labels(dZ))


def check_fibration_criterion(atlas: StripedAtlas) -> TheoremReport:
    """Every leaf admits a cross section iff no leaf is of type c31 or c32."""
    ls = build_leaf_space(atlas)
    all_sections = all(cross_section_oracle(ls, n) for n in ls.nodes)
    types = classify_all(atlas)
    no_folds = not any(t in NO_CROSS_SECTION_TYPES for t in types.values())
    failures = []
    if all_sections != no_folds:
        failures.append(f"cross sections everywhere={all_sections}, "
                        f"no c31/c32 leaves={no_folds}")
    return _report("fibration", atlas, failures, cross_sections=all_sections)


def check_strip_characterization(atlas: StripedAtlas) -> TheoremReport:
    """Cut every singular glued leaf, reduce, and expect only bare strips,
    cylinders and Moebius bands, with every singular leaf on the boundary."""
    singular_pairs = [p.id for p in atlas.pairs
                      if classify(atlas, leaf_of_pair(p)) in SINGULAR_TYPES]
    cut_atlas, _ = cut(atlas, singular_pairs)
    failures = []
    for p in cut_atlas.pairs:
        t = classify(cut_atlas, leaf_of_pair(p))
        if t in SINGULAR_TYPES:
            failures.append(f"pair {p.id} still {t.name} after cutting")
    reduced, extracted = reduce(cut_atlas)
    closed = {e.strip for e in extracted}
    for comp in components(reduced):
        bare = len(comp.strips) == 1 and not comp.pairs
        if not bare and not (len(comp.strips) == 1 and comp.strips[0].id in closed):
            failures.append(f"component {[s.id for s in comp.strips]} is not a strip, "
                            "cylinder or Moebius band")
    dZ = boundary_of_Z(reduced)
    for leaf, t in classify_all(reduced).items():
        if t in SINGULAR_TYPES and leaf not in dZ:
            failures.append(f"singular leaf {leaf.label} is interior after reduction")
    return _report("strips", atlas, failures, cut=sorted(singular_pairs),
                   strips=len(reduced.strips),
                   closed=[{"strip": e.strip, "kind": e.kind.value} for e in extracted])


CHECKS = {
    "families": check_families,
    "fibration": check_fibration_criterion,
    "strips": check_strip_characterization,
}


def check_all(atlas: StripedAtlas) -> list[TheoremReport]:
    return [check(atlas) for check in CHECKS.values()]
