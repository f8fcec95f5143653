"""Entanglement of a GHZ state seen by uniformly accelerated observers."""
from .closed_forms import ClosedFormId, eval_closed_form
from .errors import (
    ConfigError,
    ConvergenceFailure,
    DuplicateParty,
    EmptyInput,
    InvalidParty,
    InvalidState,
    MalformedMatrix,
    NonPhysical,
    NotHermitian,
    NotNormalized,
    UnruhEntError,
    WrongPartyCount,
)
from .linalg import conj_transpose, hermitian_eigenvalues, kron, singular_values, trace_norm
from .measures import (
    PiTangleBreakdown,
    QValue,
    negativity,
    one_tangle,
    pi_tangle,
    q_bipartite,
    q_bipartite_marginal,
    q_tripartite,
    two_tangle,
)
from .states import (
    DensityMatrix,
    PureState,
    basis_state,
    density_from_pure,
    ghz,
    partial_trace,
    partial_transpose,
    realign_bipartite,
    realign_pair_spectator,
    w_state,
)
from .sweep import SweepConfig, SweepRecord, compare_report, run_sweep
from .unruh import (
    accel_param_from_physical,
    apply_unruh,
    ghz_state_under_acceleration,
    rindler_expand,
)

__version__ = "0.1.0"
