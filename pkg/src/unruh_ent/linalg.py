"""Dense complex matrix kernels.

Matrices are plain 2-D ``numpy`` arrays of ``complex128``. The singular value
routine is a one-sided (Hestenes) Jacobi iteration written here; Hermitian
eigenvalues go through LAPACK (``numpy.linalg.eigvalsh``) so that the two
routes to a trace norm stay independent of each other.
"""
from __future__ import annotations

import numpy as np

from .errors import ConvergenceFailure, MalformedMatrix, NotHermitian

SVD_TOL = 1e-13
HERMITIAN_TOL = 1e-10
MAX_SWEEPS = 60
# squared column norm (at unit scale) below which a column is treated as zero;
# such a column moves any singular value by less than 1e-140 relative
_NEGLIGIBLE = 1e-280


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array, raising on anything else."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise MalformedMatrix(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise MalformedMatrix("matrix has NaN or infinite entries")
    return m


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def conj_transpose(a) -> np.ndarray:
    return as_matrix(a).conj().T


def hermitian_eigenvalues(h, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in descending order.

    Raises NotHermitian if ``max|h - h^dagger| > tol`` or ``h`` is not square.
    """
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise NotHermitian(f"matrix of shape {h.shape} is not square")
    asym = np.max(np.abs(h - h.conj().T))
    if asym > tol:
        raise NotHermitian(f"max |h - h^dagger| = {asym:.3e} exceeds {tol:.1e}")
    return np.linalg.eigvalsh(h)[::-1].copy()


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # n - 1 rounds of n/2 disjoint column pairs covering every pair once
    # (circle method); an odd count gets a dummy column that is dropped.
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p, q = [], []
        for k in range(m // 2):
            i, j = players[k], players[m - 1 - k]
            if i < n and j < n:
                p.append(min(i, j))
                q.append(max(i, j))
        rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


_SCHEDULES: dict[int, list] = {}


def _schedule(n: int):
    if n not in _SCHEDULES:
        _SCHEDULES[n] = _round_robin(n)
    return _SCHEDULES[n]


def singular_values(a, tol: float = SVD_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Singular values of ``a``, descending, via one-sided Jacobi rotations.

    Columns are rotated pairwise until every pair is orthogonal to relative
    precision ``tol`` (``|a_p^H a_q| <= tol * |a_p| |a_q|``). The singular
    values are then the column norms. Wide matrices are handled through their
    conjugate transpose, which has the same spectrum.

    Raises
    ------
    ConvergenceFailure
        If the off-diagonal mass is still above ``tol`` after ``max_sweeps``.
    """
    w = as_matrix(a)
    if w.shape[0] < w.shape[1]:
        w = w.conj().T
    # work at unit scale (exact power of two) so squared column norms neither
    # overflow nor underflow
    peak = float(np.max(np.abs(w)))
    if peak == 0.0:
        return np.zeros(w.shape[1])
    e = int(np.frexp(peak)[1])
    w = np.ldexp(w.real, -e) + 1j * np.ldexp(w.imag, -e)
    n = w.shape[1]
    if n == 1:
        return np.ldexp(np.array([np.linalg.norm(w[:, 0])]), e)

    rounds = _schedule(n)
    for _ in range(max_sweeps):
        rotated = False
        for p, q in rounds:
            ap, aq = w[:, p], w[:, q]
            alpha = (ap.conj() * ap).sum(axis=0).real
            beta = (aq.conj() * aq).sum(axis=0).real
            gamma = (ap.conj() * aq).sum(axis=0)
            g = np.abs(gamma)
            active = (g > tol * np.sqrt(alpha) * np.sqrt(beta)) & (alpha > _NEGLIGIBLE) & (beta > _NEGLIGIBLE)
            if not active.any():
                continue
            if not active.all():
                p, q = p[active], q[active]
                ap, aq = ap[:, active], aq[:, active]
                alpha, beta, gamma, g = alpha[active], beta[active], gamma[active], g[active]

            phase = gamma / g
            # at unit scale g > tol * 1e-280, so |zeta| stays below ~1e293
            zeta = (beta - alpha) / (2.0 * g)
            t = np.copysign(1.0, zeta) / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            # rotate (a_p, e^{-i phi} a_q) as a real Jacobi pair
            bq = aq * phase.conj()
            w[:, p] = c * ap - s * bq
            w[:, q] = (s * ap + c * bq) * phase
            # a rotation angle that rounds to zero cannot make further progress
            rotated = rotated or bool(s.any())
        if not rotated:
            sv = np.ldexp(np.linalg.norm(w, axis=0), e)
            return -np.sort(-sv, kind="stable")
    raise ConvergenceFailure(
        f"one-sided Jacobi did not reach tol={tol:.1e} in {max_sweeps} sweeps"
    )


def trace_norm(a, tol: float = SVD_TOL) -> float:
    """Trace norm ``tr sqrt(a a^dagger)``, i.e. the sum of singular values."""
    return float(np.sum(singular_values(a, tol)))
