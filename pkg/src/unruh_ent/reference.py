"""Brute-force index-loop versions of the state maps.

These are deliberately naive (explicit nested loops over digits) and serve as
a reference for the vectorised reshapes in :mod:`unruh_ent.states`.
"""
from __future__ import annotations

import itertools

import numpy as np


def _index(digits, dims):
    k = 0
    for d, n in zip(digits, dims):
        k = k * n + d
    return k


def realign_bipartite_loop(mat, dims):
    d0, d1 = dims
    out = np.zeros((d0 * d0, d1 * d1), dtype=complex)
    for i, j, m, n in itertools.product(range(d0), range(d1), range(d0), range(d1)):
        out[i * d0 + m, j * d1 + n] = mat[i * d1 + j, m * d1 + n]
    return out


def realign_pair_spectator_loop(mat, pair, dims=(2, 2, 2)):
    """``sigma[(i,j,n),(m,k,p)] = rho[(i,j,k),(m,n,p)]`` style reshuffle.

    The spectator keeps its own slot; the first party of ``pair`` fills the
    remaining row slots with (row, col) digits, the second the column slots.
    """
    x, y = pair
    s = 3 - x - y
    free = [k for k in range(3) if k != s]
    row_dims = [0, 0, 0]
    col_dims = [0, 0, 0]
    row_dims[s], col_dims[s] = dims[s], dims[s]
    row_dims[free[0]], row_dims[free[1]] = dims[x], dims[x]
    col_dims[free[0]], col_dims[free[1]] = dims[y], dims[y]
    out = np.zeros((int(np.prod(row_dims)), int(np.prod(col_dims))), dtype=complex)
    for r in itertools.product(*(range(d) for d in dims)):
        for c in itertools.product(*(range(d) for d in dims)):
            orow = [0, 0, 0]
            ocol = [0, 0, 0]
            orow[s], ocol[s] = r[s], c[s]
            orow[free[0]], orow[free[1]] = r[x], c[x]
            ocol[free[0]], ocol[free[1]] = r[y], c[y]
            out[_index(orow, row_dims), _index(ocol, col_dims)] = mat[
                _index(r, dims), _index(c, dims)
            ]
    return out


def partial_transpose_loop(mat, party, dims):
    out = np.zeros_like(mat, dtype=complex)
    for r in itertools.product(*(range(d) for d in dims)):
        for c in itertools.product(*(range(d) for d in dims)):
            r2, c2 = list(r), list(c)
            r2[party], c2[party] = c[party], r[party]
            out[_index(r2, dims), _index(c2, dims)] = mat[_index(r, dims), _index(c, dims)]
    return out


def partial_trace_loop(mat, traced, dims):
    keep = [k for k in range(len(dims)) if k not in traced]
    kdims = [dims[k] for k in keep]
    size = int(np.prod(kdims))
    out = np.zeros((size, size), dtype=complex)
    for r in itertools.product(*(range(d) for d in dims)):
        for c in itertools.product(*(range(d) for d in dims)):
            if any(r[k] != c[k] for k in traced):
                continue
            out[_index([r[k] for k in keep], kdims), _index([c[k] for k in keep], kdims)] += mat[
                _index(r, dims), _index(c, dims)
            ]
    return out


def random_density_matrix(n_qubits, rng, rank=None):
    """Random mixed state ``G G^dagger / tr`` from a complex Gaussian ``G``."""
    d = 2**n_qubits
    rank = d if rank is None else rank
    g = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_pure_amplitudes(n_qubits, rng):
    v = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return v / np.linalg.norm(v)
