"""Quantum vs classical random-variable laws of F(A, B).

Thin Python face of the C++ core: operators and states, tolerance-grouped
spectral decompositions, the two distribution pipelines (spectral projection
vs independent/dependent combination), the four-branch classifier, and the
canonical scenarios.
"""

from ._core import (
    CaseBranch,
    CaseLabel,
    ComparisonReport,
    ComparisonSettings,
    DiscreteDistribution,
    Factor,
    FunctionalTable,
    Operator,
    OracleCheck,
    PredictedRelation,
    ScenarioConfig,
    SchmidtDecomposition,
    SpectralBranch,
    SpectralDecomposition,
    State,
    Tolerances,
    __version__,
    align_supports,
    build_fock_xp,
    build_grid_xp,
    classify,
    commutator,
    commutator_norm,
    decompose,
    dependent_combine,
    expectation,
    fock_coherent,
    fock_vacuum,
    grid_gaussian,
    independent_combine,
    joint_function_projectors,
    list_scenarios_text,
    marginal_distribution,
    observable_distribution,
    operator_function,
    predicted_relation,
    pushforward,
    qm_distribution_of_function,
    qm_free_particle_variance,
    qm_moment,
    real_expectation,
    run_comparison,
    run_scenario,
    rv_moment,
    rv_variance,
    sample_oracle,
    scenario_ids,
    schmidt,
    squeezed_rotated_state,
    tensor_product,
    total_variation,
    wasserstein1,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
