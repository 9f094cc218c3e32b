"""Finite-group computation engine for centralizer structure.

Construct groups of orders pqr, p^2 q, and p^3 (plus covers and named
families), compute centralizer structure, Sylow data, the non-commuting
clique number, and capability verdicts, and verify a registry of claims
over exhaustive small catalogs.
"""

from .catalog import (
    FamilySpec,
    alternating,
    build,
    catalog_by_order,
    catalog_up_to,
    central_quotient_examples,
    cyclic,
    dicyclic,
    dihedral,
    elementary,
    groups_of_covered_order,
    groups_of_order_p2q,
    groups_of_order_p3,
    groups_of_order_pqr,
    heisenberg,
    heisenberg_cover,
    metacyclic,
    modular_p3,
    sl23,
    symmetric,
    witness_h,
)
from .claims import (
    CapabilityVerdict,
    ClaimReport,
    WitnessResult,
    capable,
    claim_ids,
    claim_index,
    verify_claim,
    witness_check,
)
from .core import (
    ActionSpec,
    Group,
    SubsetMask,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    quotient,
    quotient_with_cosets,
    semidirect_product,
    subgroup_as_group,
    subgroup_generated,
)
from .enumeration import count_groups, enumerate_groups
from .errors import CentAtlasError
from .invariants import (
    AbelianProfile,
    CentStructure,
    FrobeniusStructure,
    SylowData,
    abelian_profile,
    cent_structure,
    center,
    centralizer,
    conjugacy_classes,
    derived_subgroup,
    find_isomorphism,
    frobenius_structure,
    is_isomorphic,
    omega,
    sylow,
)
from .report import AnalysisReport, analyze, read_group_file, write_group_file

__version__ = "0.1.0"

__all__ = [
    "AbelianProfile",
    "ActionSpec",
    "AnalysisReport",
    "CapabilityVerdict",
    "CentAtlasError",
    "CentStructure",
    "ClaimReport",
    "FamilySpec",
    "FrobeniusStructure",
    "Group",
    "SubsetMask",
    "SylowData",
    "WitnessResult",
    "abelian_profile",
    "alternating",
    "analyze",
    "build",
    "capable",
    "catalog_by_order",
    "catalog_up_to",
    "cent_structure",
    "center",
    "central_quotient_examples",
    "centralizer",
    "claim_ids",
    "claim_index",
    "conjugacy_classes",
    "count_groups",
    "cyclic",
    "derived_subgroup",
    "dicyclic",
    "dihedral",
    "direct_product",
    "elementary",
    "enumerate_groups",
    "find_isomorphism",
    "frobenius_structure",
    "from_cayley_table",
    "from_permutation_generators",
    "groups_of_covered_order",
    "groups_of_order_p2q",
    "groups_of_order_p3",
    "groups_of_order_pqr",
    "heisenberg",
    "heisenberg_cover",
    "is_isomorphic",
    "metacyclic",
    "modular_p3",
    "omega",
    "quotient",
    "quotient_with_cosets",
    "read_group_file",
    "semidirect_product",
    "sl23",
    "subgroup_as_group",
    "subgroup_generated",
    "sylow",
    "symmetric",
    "verify_claim",
    "witness_check",
    "witness_h",
    "write_group_file",
]
