"""Finite semimodules over based and finite semirings: presets, cells,
extremality predicates and bounded classification."""
from .catalogs import builtin_catalog, builtin_fixtures, verify_suite
from .cells import (
    BoolSupportAlgebra,
    CellDecomposition,
    annihilator_cells,
    apex,
    booleanize,
    cell_decomposition,
    cell_semimodule,
    collapse_map,
    km_incomparability_violations,
    reduced_cell_semimodule,
)
from .classify import (
    EnumConfig,
    IsoClassCatalog,
    abelian_groups,
    classify_extreme,
    enumerate_monoids,
    enumerate_semimodules,
    quotients_up_to_iso,
)
from .presets import (
    DihedralGroup,
    GroupTable,
    boolean_semiring,
    group_semiring,
    kl_dihedral,
    kl_generator_oracle,
    kl_hat_s2,
    nat_rees,
    preset,
    z_nonneg,
)
from .semimodule import (
    Congruence,
    FinMonoid,
    Hom,
    Semimodule,
    all_congruences,
    all_subsemimodules,
    are_isomorphic,
    canonical_form,
    direct_sum,
    generated_subsemimodule,
    homs,
    invertible_elements,
    is_elementary,
    is_minimal,
    is_proper,
    is_simple,
    kernel_image,
    module_fixture,
    principal_congruence,
    quotient,
    validate_semimodule,
)
from .semiring import BasedSemiring, FiniteSemiring, add, mul, support, validate_semiring

__version__ = "0.1.0"
