"""Combinatorial engine for striped surfaces: strips glued along boundary
intervals, their leaves, leaf spaces, reduction and cutting."""

from .atlas import (AtlasParseError, GluingPair, InvalidAtlas, Side, Strip, StripedAtlas,
                    components, is_valid, parse, serialize, validate)
from .canonical import canonical_form
from .leafspace import (EdgeEnd, LeafSpace, build_leaf_space, export_dot, export_json, hcl,
                        leafspace_isomorphic, regular_oracle, smooth, special_points)
from .leaves import (BoundaryLeaf, InteriorFamily, LeafType, admits_cross_section,
                     boundary_leaves_D, boundary_of_Z, classify, enumerate_leaves, is_reduced,
                     is_regular, is_singular, is_special)
from .surgery import CutMap, cut, flip_strip, merge_c2, reduce, reglue, swap_sides
from .theorems import (TheoremReport, check_families, check_fibration_criterion,
                       check_strip_characterization)

__all__ = [
    "AtlasParseError", "GluingPair", "InvalidAtlas", "Side", "Strip", "StripedAtlas",
    "components", "is_valid", "parse", "serialize", "validate", "canonical_form",
    "EdgeEnd", "LeafSpace", "build_leaf_space", "export_dot", "export_json", "hcl",
    "leafspace_isomorphic", "regular_oracle", "smooth", "special_points",
    "BoundaryLeaf", "InteriorFamily", "LeafType", "admits_cross_section",
    "boundary_leaves_D", "boundary_of_Z", "classify", "enumerate_leaves", "is_reduced",
    "is_regular", "is_singular", "is_special", "CutMap", "cut", "flip_strip", "merge_c2",
    "reduce", "reglue", "swap_sides", "TheoremReport", "check_families",
    "check_fibration_criterion", "check_strip_characterization",
]
__version__ = "0.1.0"
