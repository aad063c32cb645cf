"""Hot numeric kernels.

The tridiagonal elimination and the dense-grid piecewise evaluation are the
two inner loops that dominate sweep workloads.  Both are written once in
plain numpy/python and compiled with numba's ``@njit`` when it is available;
setting the environment variable ``QSPLINE_NO_NUMBA=1`` (checked at import
time) forces the uncompiled fallbacks.  ``benchmarks/bench_kernels.py``
compares the two paths.
"""

import os

import numpy as np


def _numba_disabled():
    return os.environ.get("QSPLINE_NO_NUMBA", "").strip().lower() not in ("", "0", "false")


def _thomas_solve_impl(sub, main, sup, rhs, rel_tol):
    """Forward elimination / back substitution on a tridiagonal system.

    Returns ``(x, bad_row)``.  ``bad_row`` is -1 on success; otherwise it is
    the index of the row whose pivot magnitude fell below ``rel_tol`` times
    the row's largest original entry (the caller must then fall back to a
    pivoted dense solve, and ``x`` holds garbage).
    """
    m = main.shape[0]
    x = np.empty(m)
    cp = np.empty(m)

    row_max = abs(main[0])
    if m > 1 and abs(sup[0]) > row_max:
        row_max = abs(sup[0])
    piv = main[0]
    if row_max == 0.0 or abs(piv) < rel_tol * row_max:
        return x, 0
    if m > 1:
        cp[0] = sup[0] / piv
    x[0] = rhs[0] / piv

    for i in range(1, m):
        row_max = abs(main[i])
        if abs(sub[i - 1]) > row_max:
            row_max = abs(sub[i - 1])
        if i < m - 1 and abs(sup[i]) > row_max:
            row_max = abs(sup[i])
        piv = main[i] - sub[i - 1] * cp[i - 1]
        if row_max == 0.0 or abs(piv) < rel_tol * row_max:
            return x, i
        if i < m - 1:
            cp[i] = sup[i] / piv
        x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / piv

    for i in range(m - 2, -1, -1):
        x[i] -= cp[i] * x[i + 1]
    return x, -1


def _piecewise_eval_impl(knots, coeffs, xs):
    """Evaluate a piecewise cubic at many points.

    ``knots`` has n+1 breakpoints, ``coeffs`` is an (n, 4) array of ascending
    monomial coefficients per interval.  Segment lookup matches the scalar
    convention: interval 1 is closed on both ends, the rest are half-open
    (x_{i-1}, x_i]; points outside the knot range use the nearest interval.
    """
    m = knots.shape[0]
    out = np.empty(xs.shape[0])
    for j in range(xs.shape[0]):
        v = xs[j]
        # first index with knots[idx] >= v (bisect_left)
        lo = 0
        hi = m
        while lo < hi:
            mid = (lo + hi) // 2
            if knots[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        seg = lo
        if seg < 1:
            seg = 1
        elif seg > m - 1:
            seg = m - 1
        c = coeffs[seg - 1]
        out[j] = ((c[3] * v + c[2]) * v + c[1]) * v + c[0]
    return out


if not _numba_disabled():
    try:
        from numba import njit
    except ImportError:
        njit = None
else:
    njit = None

USING_NUMBA = njit is not None

if USING_NUMBA:
    thomas_solve = njit(cache=True)(_thomas_solve_impl)
    piecewise_eval = njit(cache=True)(_piecewise_eval_impl)
else:
    thomas_solve = _thomas_solve_impl
    piecewise_eval = _piecewise_eval_impl
