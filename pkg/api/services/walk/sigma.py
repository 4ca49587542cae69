"""
The O(N^2) action of the pseudoprojector and the phase rotation.

2 Sigma |phi> is computed in three vectorized passes over the state matrix:
  1. C_i = <psi_i(phi)|Phi>: column sums of Phi * conj(Psi)
  2. C~_i = (1 - exp(i theta_i)) C_i
  3. column i of Psi scaled by C~_i
No N^2 x N^2 operator is ever formed.
"""
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray

from api.config import settings
from api.errors import DimensionMismatch
from api.services.walk.build_walk import SzegedyWalk
from api.services.walk.state import WalkState, as_matrix

# Edge of the square tiles used when the rotation is written out transposed
TILE = 128


@lru_cache(maxsize=None)
def _executor(workers: int) -> ThreadPoolExecutor:
    return ThreadPoolExecutor(max_workers=workers, thread_name_prefix="szsim-sigma")


def _scaled_coefficients(phi: NDArray[np.complex128], walk: SzegedyWalk, lo: int, hi: int) -> NDArray[np.complex128]:
    """C~_i for columns lo..hi-1."""
    coefficients = np.einsum("ji,ji->i", phi[:, lo:hi], walk.psi_conjugate[:, lo:hi])
    return walk.apr_factors[lo:hi] * coefficients


def _check_shape(phi: NDArray[np.complex128], walk: SzegedyWalk) -> int:
    n = walk.n_nodes
    if phi.shape != (n, n):
        raise DimensionMismatch(f"State shape {phi.shape} does not match a {n}-node walk")
    return n


def _run_chunks(n: int, threads: Optional[int], work: Callable[[int, int], None]) -> None:
    """Call work(lo, hi) over contiguous column chunks, serially or on the shared pool."""
    workers = settings.threads if threads is None else threads
    if workers <= 1 or n < settings.parallel_min_nodes:
        work(0, n)
        return

    bounds = np.linspace(0, n, min(workers, n) + 1).astype(int)
    list(_executor(workers).map(work, bounds[:-1], bounds[1:]))


def apply_sigma_doubled(
    state: WalkState,
    walk: SzegedyWalk,
    threads: Optional[int] = None
) -> NDArray[np.complex128]:
    """
    Matrix of 2 Sigma(theta, phi)|state> (not normalized).

    Columns are independent, so with more than one thread they are split
    into contiguous chunks; each column is written by exactly one worker.

    Raises:
        DimensionMismatch: If the state and walk sizes differ
    """
    phi = as_matrix(state)
    n = _check_shape(phi, walk)
    psi = walk.psi_matrix
    out = np.empty((n, n), dtype=np.complex128)

    def work(lo: int, hi: int) -> None:
        np.multiply(psi[:, lo:hi], _scaled_coefficients(phi, walk, lo, hi)[np.newaxis, :], out=out[:, lo:hi])

    _run_chunks(n, threads, work)
    return out


def apply_phase_rotation(
    state: WalkState,
    walk: SzegedyWalk,
    threads: Optional[int] = None
) -> WalkState:
    """R(theta, phi)|state> = 2 Sigma|state> - |state>."""
    phi = as_matrix(state)
    out = apply_sigma_doubled(phi, walk, threads)
    np.subtract(out, phi, out=out)
    return WalkState(phi=out)


def apply_rotation_swapped(
    state: WalkState,
    walk: SzegedyWalk,
    threads: Optional[int] = None
) -> NDArray[np.complex128]:
    """
    Matrix of S_w R(theta, phi)|state>, written directly in swapped layout.

    Row i of the result is column i of R|state>. The transposed read of the
    state goes tile by tile so each TILE x TILE block stays in cache.

    Raises:
        DimensionMismatch: If the state and walk sizes differ
    """
    phi = as_matrix(state)
    n = _check_shape(phi, walk)
    # cached walk arrays are filled before any worker reads them
    psi_t = walk.psi_transposed
    _ = walk.psi_conjugate
    out = np.empty((n, n), dtype=np.complex128)

    def work(lo: int, hi: int) -> None:
        scale = _scaled_coefficients(phi, walk, lo, hi)[:, np.newaxis]
        for i0 in range(lo, hi, TILE):
            i1 = min(i0 + TILE, hi)
            rows = scale[i0 - lo:i1 - lo]
            for j0 in range(0, n, TILE):
                j1 = min(j0 + TILE, n)
                block = out[i0:i1, j0:j1]
                np.multiply(psi_t[i0:i1, j0:j1], rows, out=block)
                np.subtract(block, phi[j0:j1, i0:i1].T, out=block)

    _run_chunks(n, threads, work)
    return out
