"""Backend selection and parallel dispatch for the enumeration folds.

The compiled Cython core is used when it imported successfully and the
requested size fits its 64-bit accumulators; otherwise the pure-Python
twin takes over.  ``PATHFORGE_BACKEND=pure`` forces the fallback.
``PATHFORGE_THREADS`` bounds fold parallelism (0 or unset = automatic);
partitioned folds split the enumeration by step prefix and merge the
partial sums in prefix order, so results are independent of scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import _fold_py

try:
    from . import _foldcore  # type: ignore[attr-defined]
except ImportError:
    _foldcore = None

if os.environ.get("PATHFORGE_BACKEND", "").lower() == "pure":
    _default_backend = _fold_py
else:
    _default_backend = _foldcore if _foldcore is not None else _fold_py

HAVE_COMPILED = _foldcore is not None
BACKEND_NAME = "compiled" if _default_backend is not _fold_py else "pure"

# Partitioned folds only pay off once the path count is large.
_PARALLEL_MIN_K = 11
_PREFIX_DEPTH = 8


@dataclass(frozen=True)
class DyckFold:
    """Statistics summed over all Dyck paths of length 2k.

    rise_sums[i] is the total number of rises from altitude i,
    vertex_sums[i] the total number of vertices at altitude i,
    rise_open_sums[i] the total of R_i*(2i+3-R_i) and vertex_pair_sums[i]
    the total of C(V_i+1, 2), per path.
    """

    k: int
    count: int
    rise_sums: tuple[int, ...]
    vertex_sums: tuple[int, ...]
    rise_open_sums: tuple[int, ...]
    vertex_pair_sums: tuple[int, ...]


@dataclass(frozen=True)
class AltMotzkinFold:
    """Rise-count-resolved statistics over all alternating Motzkin paths of
    length 2k.  Matrix fields are indexed [altitude][rises]; level statistics
    count even-step level steps only."""

    k: int
    counts_by_rises: tuple[int, ...]
    rise_sums: tuple[tuple[int, ...], ...]
    vertex_sums: tuple[tuple[int, ...], ...]
    level_sums: tuple[tuple[int, ...], ...]
    weighted_rise_sums: tuple[int, ...]
    weighted_level_sums: tuple[int, ...]
    rise_pair_sums: tuple[int, ...]
    level_pair_sums: tuple[int, ...]

    @property
    def count(self) -> int:
        return sum(self.counts_by_rises)


def _backend_for(k: int):
    limit = getattr(_default_backend, "K_LIMIT", None)
    if limit is not None and k > limit:
        return _fold_py
    return _default_backend


def _resolve_threads(k: int, threads: int | None) -> int:
    if threads is None:
        bound = int(os.environ.get("PATHFORGE_THREADS", "0") or "0")
        if _backend_for(k) is _fold_py or k < _PARALLEL_MIN_K:
            auto = 1
        else:
            auto = min(os.cpu_count() or 1, 8)
        threads = auto if bound <= 0 else min(auto, bound)
    return max(1, threads)


def _merge_vectors(parts: list[list[int]]) -> tuple[int, ...]:
    out = [0] * (len(parts[0]) if parts else 0)
    for p in parts:
        for i, v in enumerate(p):
            out[i] += v
    return tuple(out)


def _merge_matrices(parts: list[list[list[int]]]) -> tuple[tuple[int, ...], ...]:
    if not parts or not parts[0]:
        return ()
    rows, cols = len(parts[0]), len(parts[0][0])
    out = [[0] * cols for _ in range(rows)]
    for p in parts:
        for i in range(rows):
            row = p[i]
            for j in range(cols):
                out[i][j] += row[j]
    return tuple(tuple(row) for row in out)


def _run_partitioned(backend_fn, prefixes, threads):
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(backend_fn, prefixes))


def fold_dyck(k: int, threads: int | None = None) -> DyckFold:
    """Fold per-altitude statistics over all Dyck paths of length 2k."""
    backend = _backend_for(k)
    threads = _resolve_threads(k, threads)
    if threads == 1 or 2 * k <= _PREFIX_DEPTH:
        raw = [backend.dyck_fold(k, ())]
    else:
        prefixes = _fold_py.dyck_prefixes(k, _PREFIX_DEPTH)
        raw = _run_partitioned(lambda p: backend.dyck_fold(k, p), prefixes, threads)
    count = sum(r[0] for r in raw)
    return DyckFold(
        k,
        count,
        _merge_vectors([r[1] for r in raw]),
        _merge_vectors([r[2] for r in raw]),
        _merge_vectors([r[3] for r in raw]),
        _merge_vectors([r[4] for r in raw]),
    )


def fold_alt_motzkin(k: int, threads: int | None = None) -> AltMotzkinFold:
    """Fold rise-resolved statistics over all alternating Motzkin paths of
    length 2k."""
    backend = _backend_for(k)
    threads = _resolve_threads(k, threads)
    if threads == 1 or 2 * k <= _PREFIX_DEPTH:
        raw = [backend.alt_motzkin_fold(k, ())]
    else:
        prefixes = _fold_py.alt_motzkin_prefixes(k, _PREFIX_DEPTH)
        raw = _run_partitioned(lambda p: backend.alt_motzkin_fold(k, p), prefixes, threads)
    return AltMotzkinFold(
        k,
        _merge_vectors([r[0] for r in raw]),
        _merge_matrices([r[1] for r in raw]),
        _merge_matrices([r[2] for r in raw]),
        _merge_matrices([r[3] for r in raw]),
        _merge_vectors([r[4] for r in raw]),
        _merge_vectors([r[5] for r in raw]),
        _merge_vectors([r[6] for r in raw]),
        _merge_vectors([r[7] for r in raw]),
    )


def count_dyck(k: int, threads: int | None = None) -> int:
    """Count Dyck paths of length 2k by exhaustive enumeration."""
    backend = _backend_for(k)
    threads = _resolve_threads(k, threads)
    if threads == 1 or 2 * k <= _PREFIX_DEPTH:
        return backend.dyck_count(k, ())
    prefixes = _fold_py.dyck_prefixes(k, _PREFIX_DEPTH)
    parts = _run_partitioned(lambda p: backend.dyck_count(k, p), prefixes, threads)
    return sum(parts)


def count_alt_motzkin(k: int, threads: int | None = None) -> int:
    """Count alternating Motzkin paths of length 2k by exhaustive enumeration."""
    backend = _backend_for(k)
    threads = _resolve_threads(k, threads)
    if threads == 1 or 2 * k <= _PREFIX_DEPTH:
        return backend.alt_motzkin_count(k, ())
    prefixes = _fold_py.alt_motzkin_prefixes(k, _PREFIX_DEPTH)
    parts = _run_partitioned(lambda p: backend.alt_motzkin_count(k, p), prefixes, threads)
    return sum(parts)
