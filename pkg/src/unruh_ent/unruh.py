"""Single-mode fermionic Unruh channel.

An accelerated party's Minkowski qubit is rewritten in Rindler modes,

    |0>_M -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
    |1>_M -> |1>_I |0>_II

and the region II mode, being causally disconnected from the observer, is
traced out.
"""
from __future__ import annotations

import math
from typing import Mapping

import numpy as np

from .errors import InvalidParty, NonPhysical
from .states import DensityMatrix, PureState, density_from_pure, ghz, partial_trace

R_MAX = math.pi / 4


def check_accel(r: float) -> float:
    """Validate an acceleration parameter, returning it as a float."""
    r = float(r)
    if not math.isfinite(r) or r < 0.0 or r > R_MAX:
        raise NonPhysical(f"acceleration parameter {r!r} outside [0, pi/4]")
    return r


def accel_param_from_physical(omega: float, a: float, c: float = 299_792_458.0) -> float:
    """Acceleration parameter ``r`` with ``cos r = (exp(-2 pi omega c / a) + 1)^(-1/2)``.

    ``a = 0`` (inertial) gives ``r = 0`` and ``a = inf`` gives ``r = pi/4``.
    """
    if not omega > 0:
        raise NonPhysical(f"mode frequency must be positive, got {omega!r}")
    if not c > 0:
        raise NonPhysical(f"speed of light must be positive, got {c!r}")
    if not a >= 0:
        raise NonPhysical(f"acceleration must be non-negative, got {a!r}")
    if a == 0:
        return 0.0
    x = 2.0 * math.pi * omega * c / a
    # equivalent to tan r = exp(-x/2); better conditioned than acos near r = 0,
    # and the exp underflow for tiny a is the correct inertial limit
    return min(math.atan(math.exp(-0.5 * x)), R_MAX)


def _mode_map(r: float) -> np.ndarray:
    # columns: Minkowski |0>, |1>; rows: (I, II) basis 00, 01, 10, 11
    m = np.zeros((4, 2))
    m[0, 0] = math.cos(r)
    m[3, 0] = math.sin(r)
    m[2, 1] = 1.0
    return m


def rindler_expand(s: PureState, party: int, r: float) -> PureState:
    """Split ``party`` into adjacent region I and region II slots."""
    n = s.n_parties
    if not isinstance(party, (int, np.integer)) or not 0 <= party < n:
        raise InvalidParty(f"party {party!r} out of range for {n} parties")
    if s.dims[party] != 2:
        raise InvalidParty(f"party {party} is not a qubit (dim {s.dims[party]})")
    r = check_accel(r)
    t = s.amps.reshape(s.dims)
    t = np.tensordot(_mode_map(r), t, axes=([1], [party]))
    # tensordot puts the new 4-dim axis first; move it back into place
    t = np.moveaxis(t, 0, party)
    dims = s.dims[:party] + (2, 2) + s.dims[party + 1 :]
    return PureState(dims, t.reshape(-1))


def apply_unruh(s: PureState, acc: Mapping[int, float]) -> DensityMatrix:
    """Density matrix seen by the region I observers.

    ``acc`` maps party index to acceleration parameter; parties missing from it
    are inertial. The result has the same parties, in the same order, as ``s``.
    """
    n = s.n_parties
    for p in acc:
        if not isinstance(p, (int, np.integer)) or not 0 <= p < n:
            raise InvalidParty(f"party {p!r} out of range for {n} parties")
    expanded = s
    # highest index first so lower party positions stay put
    for p in sorted(acc, reverse=True):
        expanded = rindler_expand(expanded, p, acc[p])
    region_two = []
    offset = 0
    for p in range(n):
        if p in acc:
            region_two.append(p + offset + 1)
            offset += 1
    rho = density_from_pure(expanded)
    if not region_two:
        return rho
    return partial_trace(rho, region_two)


def ghz_state_under_acceleration(rb: float, rc: float) -> DensityMatrix:
    """GHZ state with Bob (party 1) and Charlie (party 2) accelerated."""
    return apply_unruh(ghz(3), {1: rb, 2: rc})
