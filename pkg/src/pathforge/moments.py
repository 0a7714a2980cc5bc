"""Monte Carlo cross-check of the limiting eigenvalue moments.

Scaled Wigner matrices have even moments converging to Catalan numbers;
Wishart matrices with aspect ratio gamma = m/n have moments converging to
the Narayana polynomial at gamma.  Estimates are averages of normalized
traces of matrix powers over independent seeded trials, so the exact
combinatorial values from ``numeric`` double as statistical targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Union

import numpy as np

from .numeric import catalan, narayana_poly

Exact = Union[int, Fraction]


@dataclass(frozen=True)
class MomentEstimate:
    """A seeded Monte Carlo estimate next to its exact limiting target."""

    ensemble: str
    k: int
    n: int
    m: int | None
    trials: int
    seed: int
    estimate: float
    stderr: float
    target: Exact


def trace_power(matrix: np.ndarray, k: int) -> float:
    """Trace of the k-th power of a square matrix."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    return float(np.linalg.matrix_power(matrix, k).trace())


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    # independent, reproducible substream per (seed, trial)
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))


def _summarize(values: list[float]) -> tuple[float, float]:
    arr = np.asarray(values)
    estimate = float(arr.mean())
    stderr = float(arr.std(ddof=1) / sqrt(len(arr))) if len(arr) > 1 else 0.0
    return estimate, stderr


def wigner_moment(k: int, n: int, trials: int = 20, seed: int = 0) -> MomentEstimate:
    """Estimate the k-th moment of a scaled symmetric Gaussian matrix.

    Entries are unit Gaussians (independent on and above the diagonal,
    mirrored below), scaled by 1/sqrt(n); each trial contributes
    tr(A^k)/n.  The limit is C_{k/2} for even k and 0 for odd k.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    values = []
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        upper = np.triu(rng.standard_normal((n, n)), 1)
        diag = rng.standard_normal(n)
        a = (upper + upper.T + np.diag(diag)) / sqrt(n)
        values.append(trace_power(a, k) / n)
    estimate, stderr = _summarize(values)
    target = catalan(k // 2) if k % 2 == 0 else 0
    return MomentEstimate("wigner", k, n, None, trials, seed, estimate, stderr, target)


def wishart_moment(k: int, n: int, m: int, trials: int = 20, seed: int = 0) -> MomentEstimate:
    """Estimate the k-th moment of a Wishart matrix W = G G^T / n for an
    m-by-n Gaussian G; each trial contributes tr(W^k)/m.

    The limit as m/n -> gamma is the Narayana polynomial at gamma; the
    normalization makes the k=1 target exactly 1.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 2 or m < 2:
        raise ValueError(f"matrix dimensions must be at least 2, got n={n}, m={m}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    values = []
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        g = rng.standard_normal((m, n))
        w = (g @ g.T) / n
        values.append(trace_power(w, k) / m)
    estimate, stderr = _summarize(values)
    target = narayana_poly(k).evaluate(Fraction(m, n))
    return MomentEstimate("wishart", k, n, m, trials, seed, estimate, stderr, target)
