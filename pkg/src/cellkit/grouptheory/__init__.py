"""Finite-group engine: permutation groups, exact character tables,
Schur multipliers via mod-n cochain elimination, central extensions, and
projective-representation counting."""

from .permgroup import (
    FiniteGroup,
    SubgroupClass,
    subgroup_classes,
    sylow_subgroup,
)
from .chartable import CharacterTable, character_table
from .cohomology import (
    CentralExtension,
    H2Result,
    TwoCocycle,
    are_cohomologous,
    central_extension_from_cocycle,
    cocycle_class_key,
    cocycle_is_trivial,
    common_modulus,
    h2_classes,
    irrep_count_with_central_character,
    projective_irrep_count,
    projective_irrep_degrees,
    regular_classes,
)


def group_from_permutations(gens, degree=None, guards=None):
    """Enumerate the permutation group generated by `gens` (0-based images)."""
    from ..guards import DEFAULT

    return FiniteGroup.from_generators(gens, degree, guards or DEFAULT)


__all__ = [
    "FiniteGroup",
    "SubgroupClass",
    "subgroup_classes",
    "sylow_subgroup",
    "CharacterTable",
    "character_table",
    "TwoCocycle",
    "H2Result",
    "h2_classes",
    "CentralExtension",
    "central_extension_from_cocycle",
    "projective_irrep_count",
    "projective_irrep_degrees",
    "irrep_count_with_central_character",
    "regular_classes",
    "are_cohomologous",
    "cocycle_is_trivial",
    "cocycle_class_key",
    "common_modulus",
    "group_from_permutations",
]
