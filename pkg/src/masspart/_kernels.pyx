# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled measure kernels: the hot loops of every solver and oracle.

Mirrors ``_kernels_py``; keep the two in sync.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport erfc, fabs, sqrt
from libc.stdlib cimport free, malloc, qsort

cnp.import_array()

BACKEND = "compiled"

cdef double SQRT2 = sqrt(2.0)


cdef struct Atom:
    double v
    double w


cdef int _cmp_atom(const void* a, const void* b) noexcept nogil:
    cdef double av = (<const Atom*> a).v
    cdef double bv = (<const Atom*> b).v
    if av < bv:
        return -1
    if av > bv:
        return 1
    return 0


def median_interval(double[::1] values, double[::1] weights):
    """Closed interval [lo, hi] of offsets that bisect the atom set."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Atom* atoms = <Atom*> malloc(n * sizeof(Atom))
    if atoms == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, g0, g1
    cdef double total = 0.0
    for i in range(n):
        atoms[i].v = values[i]
        atoms[i].w = weights[i]
        total += weights[i]
    qsort(atoms, n, sizeof(Atom), _cmp_atom)
    cdef double half = 0.5 * total
    cdef double tol = 1e-12 * total
    cdef double below = 0.0
    cdef double group_w, above
    cdef double lo = 0.0, hi = 0.0
    cdef bint found = False
    i = 0
    while i < n:
        j = i
        group_w = 0.0
        while j < n and atoms[j].v == atoms[i].v:
            group_w += atoms[j].w
            j += 1
        above = total - below - group_w
        if below <= half + tol and above <= half + tol:
            if not found:
                lo = atoms[i].v
                found = True
            hi = atoms[i].v
        below += group_w
        i = j
    free(atoms)
    if not found:
        raise ValueError("no bisecting offset (zero total mass?)")
    return lo, hi


def mass_ge(double[::1] values, double[::1] weights, double cut, double tol):
    cdef Py_ssize_t i
    cdef double s = 0.0
    cdef double thr = cut - tol
    for i in range(values.shape[0]):
        if values[i] >= thr:
            s += weights[i]
    return s


def mass_le(double[::1] values, double[::1] weights, double cut, double tol):
    cdef Py_ssize_t i
    cdef double s = 0.0
    cdef double thr = cut + tol
    for i in range(values.shape[0]):
        if values[i] <= thr:
            s += weights[i]
    return s


cdef double _gauss_mass_ge(double[::1] values, double[::1] weights,
                           double sigma, double cut) noexcept nogil:
    cdef Py_ssize_t i
    cdef double s = 0.0
    cdef double den = sigma * SQRT2
    for i in range(values.shape[0]):
        s += weights[i] * erfc((cut - values[i]) / den)
    return 0.5 * s


def gauss_mass_ge(double[::1] values, double[::1] weights, double sigma, double cut):
    return _gauss_mass_ge(values, weights, sigma, cut)


def gauss_median(double[::1] values, double[::1] weights, double sigma):
    """Root of (smeared upper-tail mass) = total/2, by safeguarded bisection."""
    cdef Py_ssize_t i, n = values.shape[0]
    cdef double total = 0.0
    cdef double vmin = values[0], vmax = values[0]
    for i in range(n):
        total += weights[i]
        if values[i] < vmin:
            vmin = values[i]
        if values[i] > vmax:
            vmax = values[i]
    cdef double half = 0.5 * total
    cdef double lo = vmin - 12.0 * sigma
    cdef double hi = vmax + 12.0 * sigma
    cdef double mid = 0.0, g
    cdef int it
    for it in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g = _gauss_mass_ge(values, weights, sigma, mid) - half
        if g > 0.0:
            lo = mid
        elif g < 0.0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)
