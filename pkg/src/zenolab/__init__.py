"""zenolab: numerical laboratory for zone invariance under unitary flows.

Builds periodic-grid and dense state spaces, spectral propagators, zone
projectors and selective-measurement protocols, then packages the headline
experiments (translation counterexample, measurement-invariant survival,
Rabi Zeno control, series-validity diagnostics) as reproducible scenarios
with machine-checkable verdict bundles.
"""

from .analytic import (
    AnalyticityReport,
    ConvergenceCurve,
    HnNorms,
    ResolutionComparison,
    analyticity_report,
    compare_resolutions,
    hn_norms,
    series_vs_spectral_curve,
)
from .errors import DomainError, PreconditionError, SpaceMismatchError
from .operators import (
    Propagator,
    SeriesResult,
    ShiftPropagator,
    SpectralOperator,
    coordinate_operator,
    dense_hermitian,
    evolve_exact_shift,
    evolve_series,
    evolve_spectral,
    momentum_operator,
    stone_residual,
)
from .scenarios import (
    SCENARIOS,
    CurveTable,
    FlagRecord,
    ScenarioSpec,
    VerdictBundle,
    run_scenario,
    scenario_counterexample,
    scenario_hm_invariance,
    scenario_rabi_control,
    scenario_series_validity,
)
from .statespace import (
    DenseSpace,
    Grid,
    WaveFunction,
    inner_product,
    make_bump,
    make_gaussian,
    make_plane_wave,
)
from .subspaces import (
    ConditionReport,
    ConditionSample,
    SubspaceProjector,
    check_condition_I,
    check_condition_IA,
    check_condition_II,
    core_zone_state,
    generator_coupling,
    halfline_pair,
    leakage,
    span_projector,
)
from .zeno import (
    MeasurementSchedule,
    SurvivalReport,
    deficit_ladder,
    deficit_slope,
    measured_chain,
    survival_free,
    survival_measured,
    survival_report,
    zeno_scaling,
)

__all__ = [
    "AnalyticityReport",
    "ConditionReport",
    "ConditionSample",
    "ConvergenceCurve",
    "CurveTable",
    "DenseSpace",
    "DomainError",
    "FlagRecord",
    "Grid",
    "HnNorms",
    "MeasurementSchedule",
    "PreconditionError",
    "Propagator",
    "ResolutionComparison",
    "SCENARIOS",
    "ScenarioSpec",
    "SeriesResult",
    "ShiftPropagator",
    "SpaceMismatchError",
    "SpectralOperator",
    "SubspaceProjector",
    "SurvivalReport",
    "VerdictBundle",
    "WaveFunction",
    "analyticity_report",
    "check_condition_I",
    "check_condition_IA",
    "check_condition_II",
    "compare_resolutions",
    "coordinate_operator",
    "core_zone_state",
    "deficit_ladder",
    "deficit_slope",
    "dense_hermitian",
    "evolve_exact_shift",
    "evolve_series",
    "evolve_spectral",
    "generator_coupling",
    "halfline_pair",
    "hn_norms",
    "inner_product",
    "leakage",
    "make_bump",
    "make_gaussian",
    "make_plane_wave",
    "measured_chain",
    "momentum_operator",
    "run_scenario",
    "scenario_counterexample",
    "scenario_hm_invariance",
    "scenario_rabi_control",
    "scenario_series_validity",
    "series_vs_spectral_curve",
    "span_projector",
    "stone_residual",
    "survival_free",
    "survival_measured",
    "survival_report",
    "zeno_scaling",
]
