"""Pure-numpy fallback for the compiled measure kernels.

Semantics must match ``_kernels.pyx`` exactly; ``tests/test_kernels.py``
holds the two backends against each other.  All functions assume positive
total weight (callers enforce ZeroMass) and 1-D float64 inputs.
"""

import numpy as np
from scipy.optimize import brentq
from scipy.special import erfc

BACKEND = "pure"

_SQRT2 = float(np.sqrt(2.0))


def median_interval(values, weights):
    """Closed interval [lo, hi] of offsets c that bisect the atom set.

    c bisects when both closed sides carry at least half the mass; the
    endpoints are always atom positions.
    """
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    order = np.argsort(values, kind="stable")
    v = values[order]
    w = weights[order]
    total = w.sum()
    half = 0.5 * total
    tol = 1e-12 * total
    cum = np.cumsum(w)
    below = cum - w          # mass strictly left of each atom (with ties split)
    above = total - cum
    # merge ties: mass strictly below/above the atom *value*
    uniq, first = np.unique(v, return_index=True)
    last = np.r_[first[1:], v.size] - 1
    lo = hi = None
    for a, b in zip(first, last):
        if below[a] <= half + tol and above[b] <= half + tol:
            if lo is None:
                lo = v[a]
            hi = v[a]
    return float(lo), float(hi)


def mass_ge(values, weights, cut, tol):
    """Total weight with value >= cut - tol (closed side)."""
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    return float(weights[values >= cut - tol].sum())


def mass_le(values, weights, cut, tol):
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    return float(weights[values <= cut + tol].sum())


def gauss_mass_ge(values, weights, sigma, cut):
    """Mass above ``cut`` after smearing each atom with a Gaussian of scale sigma."""
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    return float(0.5 * (weights * erfc((cut - values) / (sigma * _SQRT2))).sum())


def gauss_median(values, weights, sigma):
    """Unique offset where the smeared upper-tail mass equals half the total."""
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    half = 0.5 * weights.sum()
    lo = float(values.min()) - 12.0 * sigma
    hi = float(values.max()) + 12.0 * sigma
    if hi <= lo:
        return float(values[0])

    def g(c):
        return gauss_mass_ge(values, weights, sigma, c) - half

    return float(brentq(g, lo, hi, xtol=1e-15, rtol=8.9e-16, maxiter=200))
