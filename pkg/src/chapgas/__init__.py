"""Exact Riemann solutions for the sticky-particle gas with friction and
its Chaplygin-type flux perturbation, plus the machinery to check them:
distributional residuals, generalized jump conditions, amplitude-limit
sweeps, and an independent finite-volume cross-check.
"""

from .delta import (
    DeltaShockWave,
    c_identity_residual,
    delta_speed,
    delta_weight_rate,
    entropy_check,
    grh_residual,
    make_delta_wave,
    speed_quadratic_residual,
    trajectory_inverse,
)
from .errors import (
    AlphaOutOfRange,
    CaseMismatch,
    CflViolation,
    ChapgasError,
    NegativeAmplitude,
    NegativeTime,
    NonFiniteInput,
    NonPositiveDensity,
    OutsideFan,
    PressurelessNotApplicable,
    RegionMismatch,
    TimeMismatch,
    Unreachable,
    UnsupportedQuadOrder,
    ValidationError,
    WindowOutOfDomain,
)
from .fv import (
    FvConfig,
    FvState,
    compare_to_exact,
    grid,
    init_state,
    locate_jump,
    locate_kink,
    locate_peak,
    measure_delta_mass,
    primitive_recover,
    run,
    step,
    wave_offsets,
)
from .limits import (
    LimitReport,
    concentration_integrals,
    default_sweep,
    limit_study,
    thresholds,
)
from .states import (
    GasParams,
    ParabolicPath,
    PrimState,
    Region,
    RiemannProblem,
    classify_region,
    eigenvalues,
    pressureless_case,
    problem_scale,
    riemann_invariants,
    validate_params,
    validate_problem,
    validate_state,
)
from .verify import CheckRow, checks_pass, fan_checks
from .waves import (
    DeltaShock,
    RarefactionContact,
    SampleKind,
    ShockContact,
    SingleContact,
    SolutionSample,
    TwoContactsVacuum,
    WaveFan,
    evaluate,
    intermediate_state,
    rarefaction_state,
    rh_residual,
    solve,
    wave_paths,
    wave_positions,
)
from .weakform import TestFunction, residual_battery, weak_residual

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRange",
    "CaseMismatch",
    "CflViolation",
    "ChapgasError",
    "CheckRow",
    "DeltaShock",
    "DeltaShockWave",
    "FvConfig",
    "FvState",
    "GasParams",
    "LimitReport",
    "NegativeAmplitude",
    "NegativeTime",
    "NonFiniteInput",
    "NonPositiveDensity",
    "OutsideFan",
    "ParabolicPath",
    "PressurelessNotApplicable",
    "PrimState",
    "RarefactionContact",
    "Region",
    "RegionMismatch",
    "RiemannProblem",
    "SampleKind",
    "ShockContact",
    "SingleContact",
    "SolutionSample",
    "TestFunction",
    "TimeMismatch",
    "TwoContactsVacuum",
    "Unreachable",
    "UnsupportedQuadOrder",
    "ValidationError",
    "WaveFan",
    "WindowOutOfDomain",
    "c_identity_residual",
    "checks_pass",
    "classify_region",
    "compare_to_exact",
    "concentration_integrals",
    "default_sweep",
    "delta_speed",
    "delta_weight_rate",
    "entropy_check",
    "evaluate",
    "fan_checks",
    "grh_residual",
    "grid",
    "init_state",
    "intermediate_state",
    "limit_study",
    "locate_jump",
    "locate_kink",
    "locate_peak",
    "make_delta_wave",
    "measure_delta_mass",
    "pressureless_case",
    "primitive_recover",
    "problem_scale",
    "rarefaction_state",
    "residual_battery",
    "rh_residual",
    "riemann_invariants",
    "run",
    "solve",
    "speed_quadratic_residual",
    "step",
    "thresholds",
    "trajectory_inverse",
    "validate_params",
    "validate_problem",
    "validate_state",
    "wave_offsets",
    "wave_paths",
    "wave_positions",
    "weak_residual",
]
