"""Dense Gaussian elimination with scaled partial pivoting.

Sized for desk-scale systems (a few hundred unknowns).  Used as the fallback
for the tridiagonal moment solver and as the engine of the independent dense
constraint oracle.
"""

import math

import numpy as np

from .errors import SingularSystemError

# pivot is declared dead when smaller than this fraction of its row scale
PIVOT_RTOL = 1e-12


def gauss_solve(matrix, rhs, q=None):
    """Solve ``matrix @ x = rhs`` by row-pivoted elimination.

    Returns ``(x, min_pivot)`` where ``min_pivot`` is the smallest absolute
    pivot accepted during elimination, a crude conditioning indicator.

    Raises SingularSystemError when every candidate pivot of a column is
    below PIVOT_RTOL relative to its row scale; the error carries ``q`` (if
    given) and the elimination step index.
    """
    a = np.array(matrix, dtype=float)
    b = np.array(rhs, dtype=float)
    n = b.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"matrix shape {a.shape} does not match rhs length {n}")

    scale = np.max(np.abs(a), axis=1)
    min_pivot = math.inf
    for k in range(n):
        ratios = np.zeros(n - k)
        live = scale[k:] > 0.0
        ratios[live] = np.abs(a[k:, k][live]) / scale[k:][live]
        p = k + int(np.argmax(ratios))
        if scale[p] == 0.0 or abs(a[p, k]) < PIVOT_RTOL * scale[p]:
            raise SingularSystemError(
                f"singular system: no usable pivot in column {k}"
                + (f" (q = {q})" if q is not None else ""),
                q=q,
                row=k,
            )
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
            scale[[k, p]] = scale[[p, k]]
        piv = a[k, k]
        if abs(piv) < min_pivot:
            min_pivot = abs(piv)
        for i in range(k + 1, n):
            if a[i, k] != 0.0:
                lam = a[i, k] / piv
                a[i, k + 1 :] -= lam * a[k, k + 1 :]
                a[i, k] = 0.0
                b[i] -= lam * b[k]

    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1 :] @ x[k + 1 :]) / a[k, k]
    return x, min_pivot
