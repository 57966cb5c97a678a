"""Scanner vs Invader spectrum-scanning games: tiling strategies, equilibria and oracles."""

from .bayesian import (
    BayesianEquilibrium,
    ClampPolicy,
    aggregate_best_response,
    invert_aggregate_best_response,
    solve_bayesian,
)
from .errors import ConfigError, ConsistencyError, DomainError, UndefinedThresholdError
from .linear import (
    EquilibriumReport,
    best_response_invader,
    best_response_scanner,
    detect_jumps,
    solve_known_characteristics,
)
from .oracle import (
    GridSpec,
    bayesian_grid_search,
    grid_equilibrium_search,
    monte_carlo_detection,
    overlap_value_oracle,
)
from .params import (
    ILLUSTRATION,
    Band,
    NetworkParams,
    payoff_invader,
    payoff_scanner,
    payoff_scanner_expected,
    response_line,
)
from .priors import TypeDistribution
from .simulate import ValidationReport, validate_tiling
from .tiling import TilingSolution, build_tiling, detection_value, guarantee_check

__version__ = "0.1.0"
