"""Kernel dispatch: numba-compiled bitmask kernels with a numpy fallback.

The active backend is chosen once at import from the ``POSETC_BACKEND``
environment variable (``numba``, ``numpy``, or ``auto``; default auto) and
can be switched at runtime with :func:`set_backend`.  The numba kernels
pack element sets into single 64-bit words, so they only apply when the
poset has at most 64 elements; larger inputs always take the numpy path.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

from . import _numpy as _np_impl

try:
    from . import _numba as _nb_impl

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _nb_impl = None
    HAS_NUMBA = False

MASK_BITS = 64

_backend = "numpy"


def set_backend(name: str) -> None:
    """Select the kernel backend: 'numba', 'numpy', or 'auto'."""
    global _backend
    name = name.strip().lower()
    if name == "auto":
        _backend = "numba" if HAS_NUMBA else "numpy"
    elif name == "numba":
        if not HAS_NUMBA:
            warnings.warn("numba is not importable; staying on the numpy backend")
            _backend = "numpy"
        else:
            _backend = "numba"
    elif name == "numpy":
        _backend = "numpy"
    else:
        raise ValueError(f"unknown backend {name!r} (use 'numba', 'numpy' or 'auto')")


def backend_name() -> str:
    return _backend


set_backend(os.environ.get("POSETC_BACKEND", "auto"))


def _use_masks(n: int) -> bool:
    return _backend == "numba" and n <= MASK_BITS


def pack_rows(rows: np.ndarray) -> np.ndarray:
    """Pack boolean rows (m, n) with n <= 64 into uint64 bitmasks."""
    m, n = rows.shape
    if n == 0:
        return np.zeros(m, np.uint64)
    powers = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    return np.bitwise_or.reduce(
        np.where(rows, powers[None, :], np.uint64(0)), axis=1
    )


def unpack_masks(masks: np.ndarray, n: int) -> np.ndarray:
    """Expand uint64 bitmasks back to boolean arrays (..., n)."""
    if n == 0:
        return np.zeros(masks.shape + (0,), bool)
    shifts = np.arange(n, dtype=np.uint64)
    return ((masks[..., None] >> shifts) & np.uint64(1)).astype(bool)


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    if _backend == "numba":
        return _nb_impl.transitive_closure(np.ascontiguousarray(adj))
    return _np_impl.transitive_closure(adj)


def antichain_bitmasks(leq: np.ndarray) -> list[int]:
    """Bitmasks (Python ints) of every antichain of the given order."""
    n = leq.shape[0]
    compat_bool = ~(leq | leq.T)
    if _use_masks(n):
        masks = _nb_impl.antichain_masks(pack_rows(compat_bool))
        return [int(m) for m in masks]
    return _np_impl.antichain_masks(pack_ints(compat_bool), n)


def pack_ints(rows: np.ndarray) -> list[int]:
    """Pack boolean rows into arbitrary-precision Python int bitmasks."""
    out = []
    for row in rows:
        mask = 0
        for j in np.flatnonzero(row):
            mask |= 1 << int(j)
        out.append(mask)
    return out


def subset_order_matrix(leq: np.ndarray, members: np.ndarray) -> np.ndarray:
    """Order matrix of the domination relation between rows of ``members``.

    out[i, j] iff every element of set i lies below (or equals) some
    element of set j, with "below" taken from ``leq``.
    """
    n = leq.shape[0]
    dominated = np.matmul(members.astype(np.int32), leq.T.astype(np.int32)) > 0
    if _use_masks(n):
        return _nb_impl.subset_order(pack_rows(members), pack_rows(dominated))
    return _np_impl.subset_order(members, dominated)


def cayley_tables(leq: np.ndarray) -> np.ndarray:
    """Boolean tensor (n, n, n): [a, x, e] iff e in Max L(a, x)."""
    n = leq.shape[0]
    if _use_masks(n):
        down = pack_rows(leq.T.copy())
        sdown = pack_rows((leq & ~np.eye(n, dtype=bool)).T.copy())
        values, _ = _nb_impl.cayley_tables(down, sdown)
        return unpack_masks(values, n)
    values, _ = _np_impl.cayley_tables(leq)
    return values


def cayley_order(leq: np.ndarray) -> np.ndarray:
    """Pointwise order between all pairs of maps a -> (x -> Max L(a, x))."""
    n = leq.shape[0]
    if _use_masks(n):
        down = pack_rows(leq.T.copy())
        sdown = pack_rows((leq & ~np.eye(n, dtype=bool)).T.copy())
        values, dom = _nb_impl.cayley_tables(down, sdown)
        return _nb_impl.map_order(values, dom)
    values, dom = _np_impl.cayley_tables(leq)
    return _np_impl.map_order(values, dom)
