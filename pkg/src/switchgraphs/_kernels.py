"""Relabelling kernels behind canonical forms and switch-iso keys.

Two interchangeable implementations are kept: numba-compiled loops and a
vectorised numpy path. ``SWITCHGRAPHS_BACKEND=numpy`` forces the numpy path;
the default is numba when it imports. ``SWITCHGRAPHS_WORKERS`` caps the number
of numba threads.

Every graph handled here has ``n <= 10`` so its edge bits fit in a uint64,
and relabelled values stay below 2**45, exact in float64 as well.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
from functools import lru_cache

import numpy as np

from .graph_core import num_pairs, pairs, star_masks

log = logging.getLogger(__name__)

KERNEL_MAX_N = 10

try:
    import numba
    from numba import njit, prange
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_requested = os.environ.get("SWITCHGRAPHS_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"SWITCHGRAPHS_BACKEND must be 'numba' or 'numpy', got {_requested!r}")
BACKEND = "numba" if (_requested == "numba" and HAVE_NUMBA) else "numpy"

if HAVE_NUMBA and "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is often too old and numba warns on every first launch
    numba.config.THREADING_LAYER = "workqueue"

if HAVE_NUMBA and os.environ.get("SWITCHGRAPHS_WORKERS"):
    _workers = max(1, int(os.environ["SWITCHGRAPHS_WORKERS"]))
    numba.set_num_threads(min(_workers, numba.config.NUMBA_NUM_THREADS))

_ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)


@lru_cache(maxsize=None)
def perm_data(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Permutations of ``range(n)`` and their pair-index tables.

    Rows are grouped by the vertex sent to ``n - 1``: rows
    ``v*(n-1)! .. (v+1)*(n-1)! - 1`` are exactly the permutations with
    ``perm[v] == n - 1``. ``table[r, p]`` is the bit position of pair ``p``
    after applying permutation ``r``.
    """
    if n > KERNEL_MAX_N:
        raise ValueError(f"permutation tables are limited to n <= {KERNEL_MAX_N}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(math.factorial(n), n)
    if n:
        order = np.argsort(np.argmax(perms == n - 1, axis=1), kind="stable")
        perms = perms[order]
    m = num_pairs(n)
    table = np.empty((perms.shape[0], m), dtype=np.int8)
    for p, (i, j) in enumerate(pairs(n)):
        a = perms[:, i].astype(np.int64)
        b = perms[:, j].astype(np.int64)
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        table[:, p] = hi * (hi - 1) // 2 + lo
    perms.setflags(write=False)
    table.setflags(write=False)
    return perms, table


@lru_cache(maxsize=None)
def power_table(n: int) -> np.ndarray:
    """``2**table`` as uint64, transposed to ``(pairs, permutations)``."""
    _, table = perm_data(n)
    powers = np.ascontiguousarray((np.uint64(1) << table.astype(np.uint64)).T)
    powers.setflags(write=False)
    return powers


@lru_cache(maxsize=None)
def power_blocks(n: int) -> np.ndarray:
    """``power_table`` split per vertex block: shape ``(n, pairs, (n-1)!)``."""
    powers = power_table(n)
    block = powers.shape[1] // n
    out = np.ascontiguousarray(powers.reshape(powers.shape[0], n, block).transpose(1, 0, 2))
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _pair_ends(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lo = np.array([i for i, _ in pairs(n)], dtype=np.int64)
    hi = np.array([j for _, j in pairs(n)], dtype=np.int64)
    stars = np.array(star_masks(n), dtype=np.uint64)
    return lo, hi, stars


def _as_bits(bits) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(bits, dtype=np.uint64).reshape(-1))


# --------------------------------------------------------------------------
# numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _min_over_rows(b, powers, vals):
        """Smallest relabelled value of ``b`` over the permutation columns of ``powers``."""
        m, rows = powers.shape
        one = np.uint64(1)
        vals[:rows] = 0
        for p in range(m):
            if (b >> np.uint64(p)) & one:
                col = powers[p]
                for r in range(rows):
                    vals[r] |= col[r]
        best = np.uint64(0xFFFFFFFFFFFFFFFF)
        for r in range(rows):
            if vals[r] < best:
                best = vals[r]
        return best

    @njit(cache=True, parallel=True)
    def _canonical_nb(bits, powers):
        out = np.empty(bits.size, np.uint64)
        nperm = powers.shape[1]
        for g in prange(bits.size):
            vals = np.empty(nperm, np.uint64)
            out[g] = _min_over_rows(bits[g], powers, vals)
        return out

    @njit(cache=True, parallel=True)
    def _switch_iso_nb(bits, blocks, lo, hi, stars, n):
        out = np.empty(bits.size, np.uint64)
        m = blocks.shape[1]
        one = np.uint64(1)
        for g in prange(bits.size):
            b = bits[g]
            vals = np.empty(blocks.shape[2], np.uint64)
            best = np.uint64(0xFFFFFFFFFFFFFFFF)
            for v in range(n):
                # switch at the neighbourhood of v, which isolates v
                s = b
                for p in range(m):
                    if (b >> np.uint64(p)) & one:
                        if lo[p] == v:
                            s ^= stars[hi[p]]
                        elif hi[p] == v:
                            s ^= stars[lo[p]]
                val = _min_over_rows(s, blocks[v], vals)
                if val < best:
                    best = val
            out[g] = best
        return out


# --------------------------------------------------------------------------
# numpy path

_CHUNK_CELLS = 1 << 22


def _bit_matrix(bits: np.ndarray, m: int) -> np.ndarray:
    shifts = np.arange(m, dtype=np.uint64)
    return ((bits[:, None] >> shifts) & np.uint64(1)).astype(np.float64)


@lru_cache(maxsize=None)
def _weight_table(n: int) -> np.ndarray:
    # float powers of two for every relabelling; only cached while small
    return np.ldexp(1.0, perm_data(n)[1].astype(np.int64))


def _min_relabel_np(bits: np.ndarray, table: np.ndarray, offset: int = 0,
                    n: int | None = None) -> np.ndarray:
    """Minimum relabelled value of each graph over the rows of ``table``.

    ``offset`` and ``n`` locate ``table`` inside the full relabelling table
    of order ``n`` so cached weights can be reused.
    """
    m = table.shape[1]
    best = np.full(bits.size, np.inf)
    if bits.size == 0:
        return best
    rows_per_chunk = max(1, _CHUNK_CELLS // max(1, bits.size))
    mat = _bit_matrix(bits, m)
    cached = _weight_table(n) if n is not None and n <= 8 else None
    for start in range(0, table.shape[0], rows_per_chunk):
        stop = start + rows_per_chunk
        if cached is not None:
            weights = cached[offset + start:offset + min(stop, table.shape[0])]
        else:
            weights = np.ldexp(1.0, table[start:stop].astype(np.int64))
        gchunk = max(1, _CHUNK_CELLS // weights.shape[0])
        for g0 in range(0, bits.size, gchunk):
            vals = mat[g0:g0 + gchunk] @ weights.T
            np.minimum(best[g0:g0 + gchunk], vals.min(axis=1), out=best[g0:g0 + gchunk])
    return best


def _canonical_np(bits, table, n=None):
    if table.shape[1] == 0:
        return np.zeros(bits.size, np.uint64)
    return _min_relabel_np(bits, table, n=n).astype(np.uint64)


def _switch_iso_np(bits, table, lo, hi, stars, n):
    m = table.shape[1]
    if m == 0:
        return np.zeros(bits.size, np.uint64)
    block = table.shape[0] // n
    mat = _bit_matrix(bits, m).astype(bool)
    best = np.full(bits.size, np.inf)
    for v in range(n):
        # neighbourhood masks of v, then XOR of the stars of each neighbour
        at_v = (lo == v) | (hi == v)
        other = np.where(lo == v, hi, lo)[at_v]
        switched = bits.copy()
        for col, u in zip(np.flatnonzero(at_v), other):
            switched[mat[:, col]] ^= stars[u]
        vals = _min_relabel_np(switched, table[v * block:(v + 1) * block],
                               offset=v * block, n=n)
        np.minimum(best, vals, out=best)
    return best.astype(np.uint64)


# --------------------------------------------------------------------------
# dispatch

def _check_n(n: int) -> None:
    if not 0 <= n <= KERNEL_MAX_N:
        raise ValueError(f"kernels support 0 <= n <= {KERNEL_MAX_N}, got {n}")


def canonical_batch(bits, n: int, backend: str | None = None) -> np.ndarray:
    """Minimum edge bit set over all relabelings, for each graph in ``bits``."""
    _check_n(n)
    arr = _as_bits(bits)
    _, table = perm_data(n)
    if (backend or BACKEND) == "numba" and table.shape[1]:
        return _canonical_nb(arr, power_table(n))
    return _canonical_np(arr, table, n)


def switch_iso_batch(bits, n: int, backend: str | None = None) -> np.ndarray:
    """Minimum edge bit set over all relabelings of all switches, per graph.

    In colex order the smallest member of a labelled switching class is the
    one with vertex ``n-1`` isolated, so it suffices to isolate each vertex
    ``v`` in turn and minimise over the permutations sending ``v`` to ``n-1``.
    """
    _check_n(n)
    arr = _as_bits(bits)
    if n <= 1:
        return np.zeros(arr.size, np.uint64)
    _, table = perm_data(n)
    lo, hi, stars = _pair_ends(n)
    if (backend or BACKEND) == "numba":
        return _switch_iso_nb(arr, power_blocks(n), lo, hi, stars, n)
    return _switch_iso_np(arr, table, lo, hi, stars, n)


def relabel_all(bits: int, n: int) -> np.ndarray:
    """Edge bits of ``bits`` under every permutation, in ``perm_data`` row order."""
    _check_n(n)
    _, table = perm_data(n)
    if table.shape[1] == 0:
        return np.zeros(table.shape[0], np.uint64)
    row = _bit_matrix(_as_bits([bits]), table.shape[1])[0]
    weights = np.ldexp(1.0, table.astype(np.int64))
    return (weights @ row).astype(np.uint64)
