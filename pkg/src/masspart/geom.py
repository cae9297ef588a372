"""Affine geometry: flats, frames, half-flats and flags.

All values are immutable after construction (arrays are frozen), so they can
be shared freely between concurrent evaluations.  Flats are stored as
(base, orthonormal basis) with the base canonicalized to the point of the
flat nearest the origin, which removes the gauge freedom and makes flat
equality a plain numeric comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankDeficient

TOL_ORTH = 1e-10
TOL_GEO = 1e-9
TOL_RANK = 1e-8


def _freeze(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.flags.writeable = False
    return out


def _mgs(rows: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt with one re-orthogonalization pass.

    Deterministic: vectors are processed in input order, so the first vector
    only gets normalized and each later vector keeps its component outside
    the span of its predecessors.
    """
    q = np.array(rows, dtype=float)
    for i in range(q.shape[0]):
        for _ in range(2):
            for j in range(i):
                q[i] -= (q[j] @ q[i]) * q[j]
        n = np.linalg.norm(q[i])
        if n <= TOL_RANK:
            raise RankDeficient(f"vector {i} is dependent on its predecessors")
        q[i] /= n
    return q


@dataclass(frozen=True)
class Flat:
    """A k-dimensional affine subspace of R^d.

    ``basis`` is a (k, d) array of orthonormal rows; ``base`` is the point of
    the flat closest to the origin.  k = 0 (a point, empty basis) is legal.
    """

    base: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        base = np.asarray(self.base, dtype=float)
        basis = np.atleast_2d(np.asarray(self.basis, dtype=float))
        if basis.size == 0:
            basis = basis.reshape(0, base.shape[0])
        if basis.shape[1] != base.shape[0]:
            raise ValueError("basis and base ambient dimensions differ")
        g = basis @ basis.T
        if g.size and np.max(np.abs(g - np.eye(basis.shape[0]))) > 1e-8:
            basis = _mgs(basis)
        # canonical base: remove the in-flat component
        if basis.shape[0]:
            base = base - basis.T @ (basis @ base)
        object.__setattr__(self, "base", _freeze(base))
        object.__setattr__(self, "basis", _freeze(basis))

    @classmethod
    def full_space(cls, d: int) -> "Flat":
        return cls(np.zeros(d), np.eye(d))

    @classmethod
    def from_point(cls, p) -> "Flat":
        p = np.asarray(p, dtype=float)
        return cls(p, np.zeros((0, p.shape[0])))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.base.shape[0]

    def project_coords(self, x) -> np.ndarray:
        """Coordinates (length ``dim``) of the nearest flat point to x."""
        return self.basis @ (np.asarray(x, dtype=float) - self.base)

    def ambient(self, coords) -> np.ndarray:
        """Map in-flat coordinates back to ambient space."""
        coords = np.asarray(coords, dtype=float)
        return self.base + coords @ self.basis

    def nearest_point(self, x) -> np.ndarray:
        return self.ambient(self.project_coords(x))

    def contains(self, x, tol: float = TOL_GEO) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.linalg.norm(x - self.nearest_point(x)) <= tol)

    def approx_equal(self, other: "Flat", tol: float = 1e-8) -> bool:
        if self.dim != other.dim or self.ambient_dim != other.ambient_dim:
            return False
        if np.linalg.norm(self.base - other.base) > tol:
            return False
        p_self = self.basis.T @ self.basis
        p_other = other.basis.T @ other.basis
        return bool(np.max(np.abs(p_self - p_other)) <= tol) if p_self.size else True


@dataclass(frozen=True)
class Frame:
    """An element of the Stiefel manifold V_m(R^d): ordered orthonormal rows."""

    vectors: np.ndarray

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        m, d = v.shape
        if m > d:
            raise ValueError(f"cannot fit {m} orthonormal vectors in R^{d}")
        if np.max(np.abs(v @ v.T - np.eye(m))) > 1e-8:
            raise ValueError("frame rows are not orthonormal")
        object.__setattr__(self, "vectors", _freeze(v))

    @property
    def m(self) -> int:
        return self.vectors.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True)
class HalfFlat:
    """A closed half of ``carrier`` bounded by ``boundary``.

    ``outward`` is a unit vector inside the carrier, orthogonal to the
    boundary; the half-flat is the side it points into (closed).
    """

    carrier: Flat
    boundary: Flat
    outward: np.ndarray

    def __post_init__(self):
        out = np.asarray(self.outward, dtype=float)
        if abs(np.linalg.norm(out) - 1.0) > 1e-8:
            raise ValueError("outward vector must have unit norm")
        if self.boundary.dim != self.carrier.dim - 1:
            raise ValueError("boundary must have codimension 1 in carrier")
        if self.boundary.basis.size and np.max(np.abs(self.boundary.basis @ out)) > 1e-8:
            raise ValueError("outward vector not orthogonal to boundary")
        if not self.carrier.contains(self.boundary.base, tol=1e-7):
            raise ValueError("boundary does not lie in carrier")
        object.__setattr__(self, "outward", _freeze(out))

    def signed_offset(self, x) -> float:
        """Signed distance of x from the boundary along ``outward``."""
        return float((np.asarray(x, dtype=float) - self.boundary.base) @ self.outward)

    def cut_offset(self) -> float:
        """Offset of the boundary along ``outward`` in carrier coordinates."""
        return float((self.boundary.base - self.carrier.base) @ self.outward)

    def contains(self, x, tol: float = TOL_GEO) -> bool:
        return self.carrier.contains(x) and self.signed_offset(x) >= -tol


@dataclass(frozen=True)
class FlagLevel:
    """One cut of a flag: the child flat plus the oriented halves of its parent."""

    flat: Flat
    cut_normal: np.ndarray  # ambient unit vector in the parent, into the plus side
    plus: HalfFlat
    minus: HalfFlat

    def __post_init__(self):
        object.__setattr__(self, "cut_normal", _freeze(self.cut_normal))


@dataclass(frozen=True)
class Flag:
    """Nested flats S_{d-1} superset ... superset S_{k-1}, one level per cut.

    ``levels`` is ordered by decreasing dimension; level j has dimension
    d-1-j.  Each level records the cut normal and labeled half-flats of its
    parent.
    """

    levels: tuple

    def __post_init__(self):
        levels = tuple(self.levels)
        if not levels:
            raise ValueError("flag needs at least one level")
        d = levels[0].flat.ambient_dim
        prev_dim = d
        prev = Flat.full_space(d)
        for lv in levels:
            if lv.flat.dim != prev_dim - 1:
                raise ValueError("flag dimensions must decrease by exactly 1")
            if not prev.contains(lv.flat.base, tol=1e-6):
                raise ValueError("flag levels are not nested")
            if lv.flat.basis.size:
                drift = lv.flat.basis - (lv.flat.basis @ prev.basis.T) @ prev.basis
                if np.max(np.abs(drift)) > 1e-6:
                    raise ValueError("flag levels are not nested")
            prev_dim = lv.flat.dim
            prev = lv.flat
        object.__setattr__(self, "levels", levels)

    @property
    def ambient_dim(self) -> int:
        return self.levels[0].flat.ambient_dim

    def flat_of_dim(self, k: int) -> Flat:
        d = self.ambient_dim
        if k == d:
            return Flat.full_space(d)
        return self.levels[d - 1 - k].flat


def orthonormalize(vectors) -> Frame:
    """Orthonormalize ``vectors`` (rows) preserving span and order.

    Raises RankDeficient when the smallest singular value is below 1e-8,
    i.e. the input is not safely independent.
    """
    rows = np.atleast_2d(np.asarray(vectors, dtype=float))
    if rows.shape[0] > rows.shape[1]:
        raise RankDeficient("more vectors than ambient dimension")
    sv = np.linalg.svd(rows, compute_uv=False)
    if sv[-1] <= TOL_RANK:
        raise RankDeficient(f"smallest singular value {sv[-1]:.3e} <= {TOL_RANK}")
    return Frame(_mgs(rows))


def _complement_in_coords(n: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the hyperplane n-perp in R^k, deterministic.

    Uses the Householder reflection sending e_1 to (a multiple of) n; its
    remaining columns span the complement.
    """
    k = n.shape[0]
    if k == 1:
        return np.zeros((0, 1))
    s = 1.0 if n[0] >= 0 else -1.0
    u = n.copy()
    u[0] += s
    h = np.eye(k) - 2.0 * np.outer(u, u) / (u @ u)
    return h[:, 1:].T  # (k-1, k) orthonormal rows, all orthogonal to n


def sub_flat(parent: Flat, normal_in_parent, offset: float):
    """Cut ``parent`` by the hyperplane at ``offset`` along an in-parent normal.

    ``normal_in_parent`` is a unit k-vector in parent coordinates.  Returns
    (child, plus, minus) where the child is the (k-1)-flat
    {x in parent : <x - parent.base, n> = offset} and plus/minus are the
    closed half-flats, plus on the +normal side.
    """
    n = np.asarray(normal_in_parent, dtype=float)
    if parent.dim < 1:
        raise ValueError("cannot cut a 0-dimensional flat")
    if abs(np.linalg.norm(n) - 1.0) > 1e-8:
        raise ValueError("normal must have unit length")
    n_amb = n @ parent.basis
    child_basis = _complement_in_coords(n) @ parent.basis
    child = Flat(parent.base + offset * n_amb, child_basis)
    plus = HalfFlat(parent, child, n_amb)
    minus = HalfFlat(parent, child, -n_amb)
    return child, plus, minus


def is_k_vertical(flat: Flat, k: int, tol: float = 1e-6) -> bool:
    """True iff the flat contains rays in the last k coordinate directions."""
    if k > flat.dim:
        raise ValueError("k exceeds the intrinsic dimension of the flat")
    d = flat.ambient_dim
    for j in range(d - k, d):
        e = np.zeros(d)
        e[j] = 1.0
        resid = e - flat.basis.T @ (flat.basis @ e)
        if np.linalg.norm(resid) >= tol:
            return False
    return True


def project_to_flat(flat: Flat, x) -> np.ndarray:
    """In-flat coordinates of the nearest point of ``flat`` to x."""
    return flat.project_coords(x)
