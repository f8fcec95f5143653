"""Randomised invariant checks behind the ``selftest`` subcommand."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import reference as ref
from .linalg import hermitian_eigenvalues, trace_norm
from .states import (
    DensityMatrix,
    PureState,
    density_from_pure,
    is_density_matrix,
    partial_trace,
    partial_transpose,
    realign_bipartite,
    realign_pair_spectator,
)
from .unruh import R_MAX, apply_unruh

ORDERED_PAIRS = ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  (worst {self.worst:.3e}){self.detail}"


def _check_trace_norm(rng, n):
    worst = 0.0
    for k in range(n):
        d = 4 if k % 2 else 8
        a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        h = a + a.conj().T
        worst = max(worst, abs(trace_norm(h) - np.abs(hermitian_eigenvalues(h)).sum()))
    return CheckResult("trace norm equals sum of |eigenvalues| (Hermitian)", worst <= 1e-10, worst)


def _check_realign(rng, n):
    mismatches = 0
    for _ in range(n):
        rho2 = ref.random_density_matrix(2, rng)
        rho3 = ref.random_density_matrix(3, rng)
        r2 = realign_bipartite(rho2, (2, 2))
        if not np.array_equal(r2, ref.realign_bipartite_loop(rho2, (2, 2))):
            mismatches += 1
        if not np.array_equal(realign_bipartite(r2, (2, 2)), rho2):
            mismatches += 1
        for pair in ORDERED_PAIRS:
            if not np.array_equal(
                realign_pair_spectator(rho3, pair, (2, 2, 2)),
                ref.realign_pair_spectator_loop(rho3, pair),
            ):
                mismatches += 1
    return CheckResult("realignment maps match index loops; involution", mismatches == 0, float(mismatches))


def _check_partial_ops(rng, n):
    worst = 0.0
    for _ in range(n):
        rho = DensityMatrix((2, 2, 2), ref.random_density_matrix(3, rng))
        for traced in ({0}, {1}, {2}, {0, 2}):
            red = partial_trace(rho, traced).mat
            worst = max(worst, abs(np.trace(red) - 1), np.abs(red - red.conj().T).max())
        for k in range(3):
            pt = partial_transpose(rho, k)
            back = partial_transpose(pt, k, rho.dims)
            worst = max(worst, np.abs(back - rho.mat).max())
    return CheckResult("partial trace/transpose preserve trace, Hermiticity; PT involution", worst <= 1e-12, worst)


def _check_unruh(rng, n, n_r=11):
    bad = 0
    exact = True
    for _ in range(n):
        s = PureState((2, 2, 2), ref.random_pure_amplitudes(3, rng))
        if not np.array_equal(apply_unruh(s, {0: 0.0, 1: 0.0, 2: 0.0}).mat, density_from_pure(s).mat):
            exact = False
        for r in np.linspace(0.0, R_MAX, n_r):
            rho = apply_unruh(s, {1: r, 2: r})
            if not is_density_matrix(rho.mat):
                bad += 1
    return CheckResult("Unruh channel output is a density matrix; r=0 is identity", bad == 0 and exact, float(bad))


def run_selftest(seed: int = 0, n: int = 200) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    return [
        _check_trace_norm(rng, n),
        _check_realign(rng, n),
        _check_partial_ops(rng, n),
        _check_unruh(rng, max(1, n // 4)),
    ]
