"""Negativity and realignment entanglement quantifiers for qubit states."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .errors import WrongPartyCount
from .linalg import SVD_TOL, trace_norm
from .states import (
    DensityMatrix,
    partial_trace,
    partial_transpose,
    realign_bipartite,
    realign_pair_spectator,
)

# negativities within this of zero are reported as exactly zero
NEGATIVITY_FLOOR = 1e-10

PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class QValue:
    """``||R(rho)|| - 1`` for a realigned matrix; negative values are kept."""

    value: float
    kind: Literal["bipartite", "tripartite-partial"]
    pair: Optional[tuple[int, int]] = None

    def __float__(self) -> float:
        return self.value

    @property
    def entangled(self) -> bool:
        return self.value > 0


@dataclass(frozen=True)
class PiTangleBreakdown:
    one_tangles: tuple[float, float, float]
    two_tangles: dict[tuple[int, int], float]
    residuals: tuple[float, float, float]
    pi: float


def _require_parties(rho: DensityMatrix, n: int, what: str):
    if rho.n_parties != n:
        raise WrongPartyCount(f"{what} needs {n} parties, got {rho.n_parties}")


def negativity(rho: DensityMatrix, party: int = 0, tol: float = SVD_TOL) -> float:
    """``||rho^{T_party}|| - 1`` without any clamping."""
    return trace_norm(partial_transpose(rho, party), tol) - 1.0


def one_tangle(rho: DensityMatrix, party: int, tol: float = SVD_TOL) -> float:
    """Negativity of ``party`` against the other two parties."""
    _require_parties(rho, 3, "one_tangle")
    return negativity(rho, party, tol)


def two_tangle(rho: DensityMatrix, pair, tol: float = SVD_TOL) -> float:
    """Negativity of the two-party marginal on ``pair``, floored at zero.

    Values within ``NEGATIVITY_FLOOR`` of zero (round-off) become exactly 0;
    genuinely negative values cannot occur since a trace norm of a unit-trace
    matrix is at least 1.
    """
    _require_parties(rho, 3, "two_tangle")
    a, b = sorted(pair)
    other = 3 - a - b
    n = negativity(partial_trace(rho, {other}), 0, tol)
    return 0.0 if n <= NEGATIVITY_FLOOR else n


def pi_tangle(rho: DensityMatrix, tol: float = SVD_TOL) -> PiTangleBreakdown:
    _require_parties(rho, 3, "pi_tangle")
    ones = tuple(one_tangle(rho, k, tol) for k in range(3))
    twos = {pair: two_tangle(rho, pair, tol) for pair in PAIRS}
    residuals = []
    for k in range(3):
        pairs = [p for p in PAIRS if k in p]
        residuals.append(ones[k] ** 2 - sum(twos[p] ** 2 for p in pairs))
    pi = (residuals[0] + residuals[1] + residuals[2]) / 3
    return PiTangleBreakdown(ones, twos, tuple(residuals), pi)


def q_bipartite(rho: DensityMatrix, tol: float = SVD_TOL) -> QValue:
    _require_parties(rho, 2, "q_bipartite")
    return QValue(trace_norm(realign_bipartite(rho), tol) - 1.0, "bipartite")


def q_bipartite_marginal(rho: DensityMatrix, pair, tol: float = SVD_TOL) -> QValue:
    """Realignment Q of the two-party marginal of a tripartite state."""
    _require_parties(rho, 3, "q_bipartite_marginal")
    a, b = sorted(pair)
    q = q_bipartite(partial_trace(rho, {3 - a - b}), tol)
    return QValue(q.value, "bipartite", (a, b))


def q_tripartite(rho: DensityMatrix, pair, tol: float = SVD_TOL) -> QValue:
    _require_parties(rho, 3, "q_tripartite")
    pair = tuple(pair)
    norm = trace_norm(realign_pair_spectator(rho, pair), tol)
    return QValue(norm - 1.0, "tripartite-partial", pair)
