"""Grid-sweep kernels for the brute-force dual-distance oracle.

The sweep enumerates seed value tables on a uniform grid, projects each
seed onto the n-Lipschitz cone (McShane projection against the distance
matrix) and records the largest integral gap between the two measures.
This is the hot loop of the package; the numba backend JIT-compiles it
and a pure-numpy vectorized fallback computes identical values.

Backend selection: numba when importable, unless TROPIMEAS_BACKEND=numpy
is set in the environment (TROPIMEAS_BACKEND=numba forces numba and fails
loudly if it is missing).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised via env flag instead
    numba = None
    HAS_NUMBA = False


def backend_name() -> str:
    choice = os.environ.get("TROPIMEAS_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAS_NUMBA:
            raise RuntimeError("TROPIMEAS_BACKEND=numba but numba is not installed")
        return "numba"
    if choice not in ("", "auto"):
        raise RuntimeError(f"unrecognized TROPIMEAS_BACKEND={choice!r}")
    return "numba" if HAS_NUMBA else "numpy"


def oracle_sweep(dist: np.ndarray, n: int, wmu: np.ndarray, wnu: np.ndarray,
                 half_range: float, step: float, backend: str | None = None) -> float:
    """Max over grid seeds of |mu(tighten(v)) - nu(tighten(v))|.

    Seeds fix the first coordinate at 0 (integral gaps are invariant
    under adding constants, and the Lipschitz projection commutes with
    them) and sweep the remaining coordinates over the symmetric grid
    {-m*step, ..., 0, ..., m*step} covering [-half_range, half_range].

    ``wmu``/``wnu`` are dense weight vectors with -inf at points that
    carry no atom.
    """
    dist = np.ascontiguousarray(dist, dtype=np.float64)
    wmu = np.ascontiguousarray(wmu, dtype=np.float64)
    wnu = np.ascontiguousarray(wnu, dtype=np.float64)
    m = int(np.ceil(half_range / step))
    backend = backend or backend_name()
    if backend == "numba":
        return float(_sweep_numba(dist, float(n), wmu, wnu, m, float(step)))
    return float(_sweep_numpy(dist, float(n), wmu, wnu, m, float(step)))


def _sweep_numpy(dist, n, wmu, wnu, m, step, chunk=262144):
    k = dist.shape[0]
    nfree = k - 1
    axis = (np.arange(2 * m + 1) - m) * step
    total = (2 * m + 1) ** nfree
    nd = n * dist
    best = 0.0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        seeds = np.zeros((idx.size, k))
        rem = idx
        for a in range(nfree):
            seeds[:, a + 1] = axis[rem % (2 * m + 1)]
            rem = rem // (2 * m + 1)
        # tight[s, z] = min_p seeds[s, p] + n*dist[p, z]
        tight = (seeds[:, :, None] + nd[None, :, :]).min(axis=1)
        gaps = np.abs((tight + wmu).max(axis=1) - (tight + wnu).max(axis=1))
        best = max(best, float(gaps.max()))
    return best


def _sweep_loop(dist, n, wmu, wnu, m, step):
    # identical arithmetic to _sweep_numpy, written as plain loops for jit
    k = dist.shape[0]
    nfree = k - 1
    width = 2 * m + 1
    total = width ** nfree
    v = np.zeros(k)
    best = 0.0
    for t in range(total):
        rem = t
        for a in range(nfree):
            v[a + 1] = (rem % width - m) * step
            rem //= width
        amu = -np.inf
        anu = -np.inf
        for z in range(k):
            phi = np.inf
            for p in range(k):
                c = v[p] + n * dist[p, z]
                if c < phi:
                    phi = c
            if phi + wmu[z] > amu:
                amu = phi + wmu[z]
            if phi + wnu[z] > anu:
                anu = phi + wnu[z]
        gap = abs(amu - anu)
        if gap > best:
            best = gap
    return best


if HAS_NUMBA:
    _sweep_numba = numba.njit(cache=True)(_sweep_loop)
else:  # pragma: no cover
    _sweep_numba = _sweep_loop
