"""Littlewood-Richardson enumeration kernels.

One enumerator covers both the product ``s_mu * s_nu`` (fixed inner shape and
content, free outer shape) and the skew ``s_{lam/mu}`` (fixed inner and outer
shapes, free content).  An LR tableau is encoded by the row counts ``a[k, i]``
(number of letters ``k + 1`` in row ``i``); the tableau conditions become

* horizontal strips:  ``shape_k[i] + a[k, i] <= shape_k[i - 1]``
* lattice word:       ``sum_{j <= i} a[k, j] <= sum_{j < i} a[k - 1, j]``

where ``shape_k`` is the shape before letter ``k + 1`` is placed.

The kernels are compiled with numba unless ``CHARHOPF_DISABLE_NUMBA`` is set
to a true value, in which case the identical pure-Python/numpy code runs.
The raw Python function is always reachable as ``lr_fillings_py``.
"""

from __future__ import annotations

import os

import numpy as np

_FALSE = {"", "0", "false", "no", "off"}

USE_NUMBA = os.environ.get("CHARHOPF_DISABLE_NUMBA", "").strip().lower() in _FALSE

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False


def jit(func):
    """``numba.njit(cache=True)`` when enabled, otherwise the function unchanged."""
    if USE_NUMBA:
        return njit(cache=True)(func)
    return func


def _grow(buf, n):
    new = np.zeros((buf.shape[0] * 2, buf.shape[1]), dtype=np.int64)
    new[:n] = buf[:n]
    return new


def lr_fillings_py(inner, outer, content, length, letters):
    """Enumerate LR tableaux.

    ``inner``, ``outer`` are int64 arrays of size ``length`` (zero padded);
    ``outer[0] < 0`` means the outer shape is free.  ``content`` has size
    ``letters``; ``content[0] < 0`` means the content is free.

    Returns ``(shapes, contents)``: one row per tableau giving the outer shape
    and the content vector.
    """
    free_outer = outer[0] < 0
    free_content = content[0] < 0
    big = 1 << 40
    npos = letters * length
    shape = np.zeros((letters + 1, length), dtype=np.int64)
    for i in range(length):
        shape[0, i] = inner[i]
    pre = np.zeros((letters, length), dtype=np.int64)
    vals = np.full(npos, -1, dtype=np.int64)

    cap = 64
    out_shapes = np.zeros((cap, length), dtype=np.int64)
    out_contents = np.zeros((cap, letters), dtype=np.int64)
    n_out = 0

    if npos == 0:
        ok = True
        if not free_outer:
            for i in range(length):
                if outer[i] != inner[i]:
                    ok = False
        if ok:
            for i in range(length):
                out_shapes[0, i] = inner[i]
            n_out = 1
        return out_shapes[:n_out], out_contents[:n_out]

    p = 0
    while p >= 0:
        if p == npos:
            ok = True
            if not free_outer:
                for i in range(length):
                    if shape[letters, i] != outer[i]:
                        ok = False
                        break
            if ok:
                if n_out == out_shapes.shape[0]:
                    out_shapes = _grow(out_shapes, n_out)
                    out_contents = _grow(out_contents, n_out)
                for i in range(length):
                    out_shapes[n_out, i] = shape[letters, i]
                for k in range(letters):
                    out_contents[n_out, k] = pre[k, length - 1]
                n_out += 1
            p -= 1
            continue

        k = p // length
        i = p - k * length
        before = pre[k, i - 1] if i > 0 else 0

        hi = big
        if i > 0:
            strip = shape[k, i - 1] - shape[k, i]
            if strip < hi:
                hi = strip
        if k > 0:
            lat = (pre[k - 1, i - 1] if i > 0 else 0) - before
            if lat < hi:
                hi = lat
        if not free_outer:
            room = outer[i] - shape[k, i]
            if room < hi:
                hi = room
        lo = 0
        if not free_content:
            remaining = content[k] - before
            if remaining < hi:
                hi = remaining
            if i == length - 1:
                lo = remaining
        if not free_outer and k == letters - 1:
            need = outer[i] - shape[k, i]
            if need > lo:
                lo = need

        v = hi if vals[p] < 0 else vals[p] - 1
        if v < lo or v < 0:
            vals[p] = -1
            p -= 1
            continue
        vals[p] = v
        shape[k + 1, i] = shape[k, i] + v
        pre[k, i] = before + v
        p += 1

    return out_shapes[:n_out], out_contents[:n_out]


_grow = jit(_grow)
lr_fillings = jit(lr_fillings_py)


def _pad(parts, n):
    arr = np.zeros(max(n, 1), dtype=np.int64)
    arr[: len(parts)] = parts
    return arr


def product_shapes(mu, nu, kernel=None):
    """Outer shapes of all LR tableaux of content ``nu`` on inner shape ``mu``."""
    kernel = lr_fillings if kernel is None else kernel
    length = len(mu) + len(nu)
    letters = len(nu)
    outer = np.full(max(length, 1), -1, dtype=np.int64)
    shapes, _ = kernel(_pad(mu, length), outer, _pad(nu, letters), max(length, 1), letters)
    return shapes


def skew_contents(lam, mu, kernel=None):
    """Contents of all LR tableaux of skew shape ``lam / mu``."""
    kernel = lr_fillings if kernel is None else kernel
    length = max(len(lam), 1)
    letters = len(lam)
    content = np.full(max(letters, 1), -1, dtype=np.int64)
    _, contents = kernel(_pad(mu, length), _pad(lam, length), content, length, letters)
    return contents


def tally(rows):
    """Collapse kernel output rows into ``{partition: multiplicity}``."""
    if rows.shape[0] == 0:
        return {}
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    out = {}
    for row, c in zip(uniq.tolist(), counts.tolist()):
        while row and row[-1] == 0:
            row.pop()
        out[tuple(row)] = int(c)
    return out
