"""Multi-party pure and mixed states and the index maps acting on them.

Party 0 is the most significant digit of a composite basis index, so
``|abc>`` with dims ``(2, 2, 2)`` sits at index ``4a + 2b + c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateParty,
    InvalidParty,
    InvalidState,
    NotNormalized,
    WrongPartyCount,
)
from .linalg import as_matrix

NORM_TOL = 1e-12
STATE_TOL = 1e-10


def _check_dims(dims) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise InvalidState(f"bad subsystem dimensions {dims}")
    return dims


@dataclass(frozen=True)
class PureState:
    dims: tuple[int, ...]
    amps: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.asarray(self.amps, dtype=np.complex128).reshape(-1)
        if amps.size != int(np.prod(dims)):
            raise InvalidState(f"{amps.size} amplitudes do not fit dims {dims}")
        if not np.all(np.isfinite(amps)):
            raise InvalidState("amplitudes contain NaN or inf")
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amps", amps)
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"squared norm {norm!r} differs from 1")

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @classmethod
    def from_amplitudes(cls, amps, dims=None, normalize=False) -> PureState:
        amps = np.asarray(amps, dtype=np.complex128).reshape(-1)
        if dims is None:
            n = int(round(np.log2(amps.size)))
            if 2**n != amps.size:
                raise InvalidState("dims required for non-qubit amplitude vectors")
            dims = (2,) * n
        if normalize:
            amps = amps / np.linalg.norm(amps)
        return cls(tuple(dims), amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix over ``dims``.

    Construction validates all three properties at ``STATE_TOL``.
    """

    dims: tuple[int, ...]
    mat: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        mat = as_matrix(self.mat).copy()
        size = int(np.prod(dims))
        if mat.shape != (size, size):
            raise InvalidState(f"matrix shape {mat.shape} does not fit dims {dims}")
        asym = np.max(np.abs(mat - mat.conj().T))
        if asym > STATE_TOL:
            raise InvalidState(f"not Hermitian (max asymmetry {asym:.3e})")
        tr = np.trace(mat)
        if abs(tr - 1.0) > STATE_TOL:
            raise InvalidState(f"trace {tr} differs from 1")
        lam_min = np.linalg.eigvalsh(mat)[0]
        if lam_min < -STATE_TOL:
            raise InvalidState(f"negative eigenvalue {lam_min:.3e}")
        mat.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mat", mat)

    @classmethod
    def _trusted(cls, dims, mat) -> DensityMatrix:
        # for outputs that are valid by construction (projectors, partial traces)
        obj = object.__new__(cls)
        mat = np.array(mat, dtype=np.complex128)
        mat.setflags(write=False)
        object.__setattr__(obj, "dims", tuple(dims))
        object.__setattr__(obj, "mat", mat)
        return obj

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)


def _party(index, n: int) -> int:
    if isinstance(index, (bool, np.bool_)) or not isinstance(index, (int, np.integer)):
        raise InvalidParty(f"party index must be an integer, got {index!r}")
    if not 0 <= index < n:
        raise InvalidParty(f"party {index} out of range for {n} parties")
    return int(index)


def _unpack(rho, dims):
    if isinstance(rho, DensityMatrix):
        return rho.mat, rho.dims
    if dims is None:
        raise InvalidState("dims must be given for a bare matrix")
    dims = _check_dims(dims)
    mat = as_matrix(rho)
    size = int(np.prod(dims))
    if mat.shape != (size, size):
        raise InvalidState(f"matrix shape {mat.shape} does not fit dims {dims}")
    return mat, dims


def basis_state(bits: Sequence[int], dims=None) -> PureState:
    dims = tuple(dims) if dims is not None else (2,) * len(bits)
    amps = np.zeros(int(np.prod(dims)), dtype=np.complex128)
    amps[np.ravel_multi_index(tuple(bits), dims)] = 1.0
    return PureState(dims, amps)


def ghz(n: int = 3) -> PureState:
    """``(|0...0> + |1...1>)/sqrt(2)`` on ``n`` qubits."""
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return PureState((2,) * n, amps)


def w_state(n: int = 3) -> PureState:
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[[2**k for k in range(n)]] = 1 / np.sqrt(n)
    return PureState((2,) * n, amps)


def density_from_pure(s: PureState) -> DensityMatrix:
    if not isinstance(s, PureState):
        raise TypeError("density_from_pure expects a PureState")
    norm = float(np.vdot(s.amps, s.amps).real)
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"squared norm {norm!r} differs from 1")
    return DensityMatrix._trusted(s.dims, np.outer(s.amps, s.amps.conj()))


def partial_trace(rho: DensityMatrix, parties: Iterable[int]) -> DensityMatrix:
    """Trace out ``parties``; the remaining parties keep their relative order."""
    n = rho.n_parties
    traced = {_party(p, n) for p in parties}
    if not traced:
        raise InvalidParty("no parties given to trace out")
    if len(traced) == n:
        raise InvalidParty("cannot trace out every party")
    keep = [k for k in range(n) if k not in traced]
    t = rho.mat.reshape(rho.dims + rho.dims)
    # contract each traced row axis with its column axis
    row = list(range(n))
    col = [n + k if k in keep else k for k in range(n)]
    out = keep + [n + k for k in keep]
    reduced = np.einsum(t, row + col, out)
    size = int(np.prod([rho.dims[k] for k in keep]))
    return DensityMatrix._trusted(tuple(rho.dims[k] for k in keep), reduced.reshape(size, size))


def partial_transpose(rho, party: int, dims=None) -> np.ndarray:
    """Transpose the row and column indices of one party."""
    mat, dims = _unpack(rho, dims)
    n = len(dims)
    k = _party(party, n)
    axes = list(range(2 * n))
    axes[k], axes[n + k] = n + k, k
    size = mat.shape[0]
    return mat.reshape(dims + dims).transpose(axes).reshape(size, size)


def realign_bipartite(rho, dims=None) -> np.ndarray:
    """Realignment ``R[(i,m),(j,n)] = rho[(i,j),(m,n)]``.

    Party 0 supplies the output row index (its row and column digits), party 1
    the output column index. The result is ``d0**2`` by ``d1**2``.
    """
    mat, dims = _unpack(rho, dims)
    if len(dims) != 2:
        raise WrongPartyCount(f"bipartite realignment needs 2 parties, got {len(dims)}")
    d0, d1 = dims
    return mat.reshape(d0, d1, d0, d1).transpose(0, 2, 1, 3).reshape(d0 * d0, d1 * d1)


def realign_pair_spectator(rho, pair: Sequence[int], dims=None) -> np.ndarray:
    """Partial realignment of a tripartite matrix over two parties.

    With ``pair = (x, y)`` and spectator ``s``, the output row index carries
    ``s``'s row digit in slot ``s`` and ``x``'s row then column digit in the
    other two slots (ascending); the output column index carries ``s``'s
    column digit in slot ``s`` and ``y``'s row then column digit likewise.
    For ``pair = (1, 2)`` this is ``sigma[(i,j,n),(m,k,p)] = rho[(i,j,k),(m,n,p)]``.
    Reversing the pair gives the transpose of this map applied to the
    spectator-partial-transposed matrix.
    """
    mat, dims = _unpack(rho, dims)
    if len(dims) != 3:
        raise WrongPartyCount(f"partial realignment needs 3 parties, got {len(dims)}")
    if len(pair) != 2:
        raise WrongPartyCount(f"pair must name exactly 2 parties, got {pair!r}")
    x, y = (_party(p, 3) for p in pair)
    if x == y:
        raise DuplicateParty(f"pair repeats party {x}")
    s = 3 - x - y
    free = [k for k in range(3) if k != s]
    row_axes = [0, 0, 0]
    col_axes = [0, 0, 0]
    # tensor axes: k -> row digit of party k, 3 + k -> column digit
    row_axes[s], col_axes[s] = s, 3 + s
    row_axes[free[0]], row_axes[free[1]] = x, 3 + x
    col_axes[free[0]], col_axes[free[1]] = y, 3 + y
    t = mat.reshape(dims + dims).transpose(row_axes + col_axes)
    n_rows = int(np.prod(t.shape[:3]))
    return t.reshape(n_rows, -1)


def is_density_matrix(mat, tol: float = STATE_TOL) -> bool:
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        return False
    if np.max(np.abs(mat - mat.conj().T)) > tol:
        return False
    if abs(np.trace(mat) - 1.0) > tol:
        return False
    return bool(np.linalg.eigvalsh(mat)[0] >= -tol)


__all__ = [
    "DensityMatrix",
    "PureState",
    "basis_state",
    "density_from_pure",
    "ghz",
    "is_density_matrix",
    "partial_trace",
    "partial_transpose",
    "realign_bipartite",
    "realign_pair_spectator",
    "w_state",
]
