"""Multi-attribute representative endowments and uniform Gini dominance.

An endowment matrix ``X`` (n individuals x d attributes) is evaluated in a
price direction ``p >= 0`` by the spectral value of the scalar sample
``p'x_1, ..., p'x_n``.  The convex representative endowment of ``X`` under
a concave distortion ``v`` is the upper set

    C+(X, v) = {z : p'z >= S_v(p'X) for all p >= 0}

and its lower (Pareto-minimal) border is the multi-dimensioned
representative endowment, MRE.  ``A`` dominates ``B`` when
``S_v(p'A) >= S_v(p'B)`` for every tested ``p``: the dominating side is
less unequal and its MRE lies weakly above the other's.

In two dimensions everything is exact.  Between consecutive critical angles
(directions at which two rows project to the same value) the ranking of the
projections is fixed, so ``S_v(p'X) = p'z`` for a single rank-weighted mean
``z`` of the rows.  For ``d >= 3`` directions are sampled from a
deterministic low-discrepancy grid and results are flagged approximate.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np
from scipy.special import gamma
from scipy.stats import norm, qmc

from .distortion import DistortionSpec, empirical_weights, family as make_family, parse_distortion
from .errors import DomainError, UnsupportedDimensionError
from .spectral import generalized_gini

__all__ = [
    "EndowmentMatrix",
    "MREPolyline",
    "SupportSample",
    "DominanceVerdict",
    "FamilyVerdict",
    "AngleInterval",
    "as_matrix",
    "direction",
    "direction_grid",
    "priced_spectral",
    "priced_gini",
    "critical_angles_2d",
    "mre_2d",
    "support_sample",
    "contains",
    "dominates",
    "dominates_family",
    "transform_affine",
    "default_tolerance",
]

HALF_PI = 0.5 * math.pi
ANGLE_TOL = 1e-12
DEFAULT_DIRECTIONS = 2000
# elements per chunk when materializing n x k projection blocks
_CHUNK = 1 << 21


class EndowmentMatrix:
    """Rows are individuals, columns attributes; optional row labels."""

    __slots__ = ("_data", "labels", "columns")

    def __init__(self, data, labels: Sequence[str] | None = None,
                 columns: Sequence[str] | None = None):
        arr = np.array(data, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None]
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DomainError("endowment matrix must be 2-D with n >= 1 rows and d >= 1 columns")
        if not np.all(np.isfinite(arr)):
            raise DomainError("endowment entries must be finite")
        if labels is not None and len(labels) != arr.shape[0]:
            raise DomainError("one label per row required")
        if columns is not None and len(columns) != arr.shape[1]:
            raise DomainError("one column name per attribute required")
        arr.setflags(write=False)
        self._data = arr
        self.labels = None if labels is None else tuple(labels)
        self.columns = None if columns is None else tuple(columns)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def n(self) -> int:
        return self._data.shape[0]

    @property
    def d(self) -> int:
        return self._data.shape[1]

    def __array__(self, dtype=None, copy=None):
        return self._data if dtype is None else self._data.astype(dtype)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"EndowmentMatrix(n={self.n}, d={self.d})"


def as_matrix(X) -> np.ndarray:
    """Validated float array view of an endowment matrix or array-like."""
    if isinstance(X, EndowmentMatrix):
        return X.data
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DomainError("endowment matrix must be 2-D with n >= 1 rows and d >= 1 columns")
    if not np.all(np.isfinite(arr)):
        raise DomainError("endowment entries must be finite")
    return arr


def default_tolerance(*mats) -> float:
    """``1e-9 * (1 + max |entry|)`` over all given matrices."""
    return 1e-9 * (1.0 + max(float(np.abs(as_matrix(m)).max()) for m in mats))


def direction(theta) -> np.ndarray:
    """Unit price vector(s) ``(cos theta, sin theta)`` in the plane."""
    th = np.asarray(theta, dtype=float)
    return np.stack([np.cos(th), np.sin(th)], axis=-1)


def _check_directions(P, d) -> np.ndarray:
    P = np.atleast_2d(np.asarray(P, dtype=float))
    if P.ndim != 2 or P.shape[1] != d:
        raise DomainError(f"directions must have {d} components")
    if P.shape[0] == 0:
        raise DomainError("empty direction set")
    if np.any(P < 0):
        raise DomainError("price directions must be componentwise nonnegative")
    norms = np.linalg.norm(P, axis=1)
    if np.any(norms == 0):
        raise DomainError("zero price direction")
    return P / norms[:, None]


def direction_grid(d: int, n: int = DEFAULT_DIRECTIONS) -> np.ndarray:
    """Deterministic quasi-uniform directions on the nonnegative unit sphere.

    The ``d`` coordinate axes come first; the rest are unscrambled Halton
    points pushed through the half-normal quantile and normalized, which
    spreads them evenly over the orthant of the sphere.
    """
    if d < 1:
        raise DomainError("dimension must be positive")
    axes = np.eye(d)
    if d == 1 or n <= d:
        return axes[:max(1, min(n, d))]
    u = qmc.Halton(d, scramble=False).random(n - d + 1)[1:]
    g = norm.ppf(0.5 + 0.5 * u)
    g = g[np.all(np.isfinite(g), axis=1)]
    g /= np.linalg.norm(g, axis=1)[:, None]
    return np.vstack([axes, g])


def grid_spacing(d: int, n: int) -> float:
    """Typical angular spacing of ``n`` points spread over the orthant of ``S^{d-1}``."""
    if d == 1:
        return 0.0
    area = 2 * math.pi ** (d / 2) / gamma(d / 2) / 2 ** d
    return float((area / n) ** (1.0 / (d - 1)))


# --------------------------------------------------------------------------
# priced spectral values

def priced_spectral(X, p, v: DistortionSpec):
    """Spectral value of the priced sample ``p'x_i``.

    ``p`` is one direction (returns a float) or a ``(k, d)`` stack of
    directions (returns an array).  Attributes are aggregated first, then
    the population.  ``p`` is not renormalized, so the value is positively
    homogeneous in ``p``.
    """
    X = as_matrix(X)
    n, d = X.shape
    P = np.asarray(p, dtype=float)
    single = P.ndim == 1
    P = np.atleast_2d(P)
    if P.ndim != 2 or P.shape[1] != d:
        raise DomainError(f"direction has {P.shape[-1]} components, matrix has {d} attributes")
    if np.any(P < 0):
        raise DomainError("price directions must be componentwise nonnegative")
    w = empirical_weights(v, n)
    out = np.empty(P.shape[0])
    step = max(1, _CHUNK // n)
    for lo in range(0, P.shape[0], step):
        proj = P[lo:lo + step] @ X.T
        proj.sort(axis=1)
        out[lo:lo + step] = proj @ w
    return float(out[0]) if single else out


def priced_gini(X, p, v: DistortionSpec, mode: str = "absolute") -> float:
    """Generalized Gini index of the priced sample ``p'X``."""
    X = as_matrix(X)
    p = np.asarray(p, dtype=float)
    if p.shape != (X.shape[1],):
        raise DomainError(f"direction must have {X.shape[1]} components")
    if np.any(p < 0):
        raise DomainError("price directions must be componentwise nonnegative")
    return generalized_gini(X @ p, v, mode)


def _support_points(X: np.ndarray, w: np.ndarray, P: np.ndarray,
                    stable: bool = True) -> np.ndarray:
    """Rank-weighted mean ``sum_i w_i x_sigma(i)`` for each direction.

    ``sigma`` sorts the projections ascending; with ``stable`` ties keep row
    order.  Rows tied in every direction are identical, so the faster
    unstable sort only matters at exact tie directions.
    """
    n, d = X.shape
    Z = np.empty((P.shape[0], d))
    step = max(1, _CHUNK // n)
    wrow = w[None, :]
    for lo in range(0, P.shape[0], step):
        order = np.argsort(P[lo:lo + step] @ X.T, axis=1,
                           kind="stable" if stable else "quicksort")
        # weight of each row under each direction's ranking
        W = np.empty(order.shape)
        np.put_along_axis(W, order, wrow, axis=1)
        Z[lo:lo + step] = W @ X
    return Z


# --------------------------------------------------------------------------
# 2-D MRE

def critical_angles_2d(X) -> np.ndarray:
    """Angles in ``[0, pi/2]`` where the ranking of projected rows can change.

    Always contains ``0`` and ``pi/2``.  An interior angle arises from each
    pair of rows whose difference has components of opposite sign: the
    direction orthogonal to that difference.
    """
    X = as_matrix(X)
    if X.shape[1] != 2:
        raise UnsupportedDimensionError("critical angles are defined for d = 2 only")
    i, j = np.triu_indices(X.shape[0], 1)
    dx = X[i, 0] - X[j, 0]
    dy = X[i, 1] - X[j, 1]
    mask = dx * dy < 0
    theta = np.arctan2(np.abs(dx[mask]), np.abs(dy[mask]))
    theta = np.sort(np.concatenate(([0.0, HALF_PI], theta)))
    keep = np.concatenate(([True], np.diff(theta) > ANGLE_TOL))
    theta = theta[keep]
    theta[-1] = HALF_PI
    return theta


@dataclass(frozen=True, eq=False)
class MREPolyline:
    """Lower border of a 2-D convex representative endowment.

    ``vertices`` run left to right (first coordinate increasing, second
    decreasing).  The border continues with a vertical ray upward from the
    first vertex and a horizontal ray rightward from the last.  ``exact`` is
    False when the chain was built from a finite direction grid.
    """

    vertices: np.ndarray
    distortion: DistortionSpec | None = None
    exact: bool = True

    def __post_init__(self):
        V = np.array(self.vertices, dtype=float).reshape(-1, 2)
        if V.shape[0] < 1 or not np.all(np.isfinite(V)):
            raise DomainError("polyline needs at least one finite vertex")
        V.setflags(write=False)
        object.__setattr__(self, "vertices", V)

    def __len__(self):
        return self.vertices.shape[0]

    def check(self) -> None:
        """Raise ``AssertionError`` unless the chain is Pareto-monotone and convex."""
        V = self.vertices
        e = np.diff(V, axis=0)
        assert np.all(e[:, 0] > 0), "first coordinates must strictly increase"
        assert np.all(e[:, 1] < 0), "second coordinates must strictly decrease"
        if len(e) > 1:
            cross = e[:-1, 0] * e[1:, 1] - e[:-1, 1] * e[1:, 0]
            assert np.all(cross > 0), "chain must turn consistently (convex from below)"

    def support(self, p):
        """``min p'z`` over the border for direction(s) ``p >= 0``.

        For nonnegative ``p`` the two rays never undercut their end
        vertices, so the minimum is attained at a vertex.
        """
        P = np.asarray(p, dtype=float)
        vals = (np.atleast_2d(P) @ self.vertices.T).min(axis=1)
        return float(vals[0]) if P.ndim == 1 else vals

    def edge_normals(self) -> np.ndarray:
        """Unit inward normals of the finite edges (all nonnegative)."""
        e = np.diff(self.vertices, axis=0)
        nrm = np.column_stack([-e[:, 1], e[:, 0]])
        return nrm / np.linalg.norm(nrm, axis=1)[:, None]

    def transformed(self, A, b) -> "MREPolyline":
        """Vertex-wise image under ``z -> A z + b`` re-sorted left to right."""
        V = self.vertices @ np.asarray(A, dtype=float).T + np.asarray(b, dtype=float)
        V = V[np.lexsort((-V[:, 1], V[:, 0]))]
        return MREPolyline(V, self.distortion, self.exact)

    def to_dict(self) -> dict:
        return {
            "distortion": None if self.distortion is None else str(self.distortion),
            "vertices": self.vertices.tolist(),
            "rays": {"left_vertical": True, "right_horizontal": True},
            "exact": self.exact,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, obj: dict) -> "MREPolyline":
        spec = obj.get("distortion")
        dist = None
        if spec:
            try:
                dist = parse_distortion(spec)
            except DomainError:
                dist = None
        return cls(np.array(obj["vertices"], dtype=float), dist, bool(obj.get("exact", True)))

    @classmethod
    def from_json(cls, text: str) -> "MREPolyline":
        return cls.from_dict(json.loads(text))

    def to_csv(self, header: Sequence[str] = ("x", "y")) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(header)
        for x, y in self.vertices:
            wr.writerow([repr(float(x)), repr(float(y))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, distortion: DistortionSpec | None = None) -> "MREPolyline":
        rows = list(csv.reader(io.StringIO(text)))
        pts = [(float(r[0]), float(r[1])) for r in rows[1:] if r]
        return cls(np.array(pts), distortion)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _pareto_chain(Z: np.ndarray, scale: float) -> np.ndarray:
    """Convex Pareto-minimal chain of candidate support points.

    Lower hull by Andrew's monotone chain, cut at the first point of minimal
    second coordinate.  Points within ``1e-12 * scale`` are merged and
    middle points within that distance of the chord dropped.
    """
    eps = 1e-12 * scale
    Z = Z[np.lexsort((Z[:, 1], Z[:, 0]))]
    pts = [Z[0]]
    for z in Z[1:]:
        if np.max(np.abs(z - pts[-1])) > eps:
            pts.append(z)
    hull: list[np.ndarray] = []
    for z in pts:
        # drop hull[-1] unless it lies more than eps below the chord hull[-2] -> z
        while len(hull) >= 2 and (_cross(hull[-2], hull[-1], z)
                                  <= eps * math.hypot(*(z - hull[-2]))):
            hull.pop()
        hull.append(z)
    H = np.array(hull)
    k = int(np.argmin(H[:, 1]))
    H = H[:k + 1]
    # a leading vertical or trailing horizontal piece is part of the rays
    while len(H) > 1 and H[1, 0] - H[0, 0] <= eps:
        H = H[1:]
    while len(H) > 1 and H[-2, 1] - H[-1, 1] <= eps:
        H = H[:-1]
    return H


def mre_2d(X, v: DistortionSpec, directions: int | None = None) -> MREPolyline:
    """Exact 2-D multi-dimensioned representative endowment.

    On every open arc between consecutive critical angles the ascending
    ranking ``sigma`` of the projections is constant, and the spectral value
    in any direction of the arc is ``p'z`` with
    ``z = sum_i w_i x_sigma(i)``.  Those points, one per arc (evaluated at
    the arc midpoint), are the vertices of the MRE; duplicates and
    non-extreme points are pruned.

    With ``directions=K`` the critical-angle enumeration (quadratic in n) is
    replaced by ``K`` evenly spaced interior angles.  Every emitted vertex is
    still an exact support point, but edges between them may cut corners;
    the result is flagged ``exact=False``.
    """
    X = as_matrix(X)
    if X.shape[1] != 2:
        raise UnsupportedDimensionError(
            f"exact MRE polylines need d = 2, got d = {X.shape[1]}; "
            "use support_sample for higher dimensions")
    if not v.concave:
        raise DomainError(
            f"MRE requires a concave distortion, got {v}")
    if np.all(X == X[0]):
        # one distinct point: its upper quadrant, without rounding from the weights
        return MREPolyline(X[:1].copy(), v, True)
    w = empirical_weights(v, X.shape[0])
    if directions is None:
        theta = critical_angles_2d(X)
        mids = 0.5 * (theta[:-1] + theta[1:])
        exact = True
    else:
        k = int(directions)
        if k < 1:
            raise DomainError("directions must be positive")
        mids = (np.arange(k) + 0.5) * (HALF_PI / k)
        exact = False
    Z = _support_points(X, w, direction(mids), stable=exact)
    scale = 1.0 + float(np.abs(X).max())
    poly = MREPolyline(_pareto_chain(Z, scale), v, exact)
    poly.check()
    return poly


# --------------------------------------------------------------------------
# d >= 3

@dataclass(frozen=True, eq=False)
class SupportSample:
    """Priced spectral values on a finite direction set (``d >= 3``)."""

    directions: np.ndarray
    values: np.ndarray
    spacing: float
    distortion: DistortionSpec | None = None

    def to_dict(self) -> dict:
        return {
            "distortion": None if self.distortion is None else str(self.distortion),
            "directions": self.directions.tolist(),
            "values": self.values.tolist(),
            "spacing": self.spacing,
        }


def support_sample(X, v: DistortionSpec, n_directions: int = DEFAULT_DIRECTIONS) -> SupportSample:
    """Evaluate ``S_v(p'X)`` on :func:`direction_grid`.

    Directions are independent; the result does not depend on the order in
    which they are evaluated.
    """
    X = as_matrix(X)
    P = direction_grid(X.shape[1], n_directions)
    return SupportSample(P, priced_spectral(X, P, v), grid_spacing(X.shape[1], len(P)), v)


# --------------------------------------------------------------------------
# containment and dominance

def contains(X, v: DistortionSpec, z, tolerance: float | None = None,
             directions: int = DEFAULT_DIRECTIONS) -> bool:
    """Whether ``z`` lies in the convex representative endowment ``C+(X, v)``.

    In 2-D the facets of the polyhedral ``C+`` are known (edge normals of
    the MRE plus the two axes), so the test is exact.  For ``d >= 3`` the
    halfspaces of :func:`direction_grid` are tested.
    """
    X = as_matrix(X)
    z = np.asarray(z, dtype=float)
    if z.shape != (X.shape[1],):
        raise DomainError(f"point must have {X.shape[1]} components")
    if tolerance is None:
        tolerance = default_tolerance(X, z[None, :])
    if X.shape[1] == 2:
        poly = mre_2d(X, v)
        P = np.vstack([np.eye(2), poly.edge_normals()])
    else:
        P = direction_grid(X.shape[1], directions)
    slack = P @ z - priced_spectral(X, P, v)
    return bool(slack.min() >= -tolerance)


@dataclass(frozen=True)
class AngleInterval:
    """Closed interval of price angles ``[lo, hi]`` in radians, within ``[0, pi/2]``."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo <= HALF_PI + ANGLE_TOL and 0.0 <= self.hi <= HALF_PI + ANGLE_TOL):
            raise DomainError("angle interval must lie within [0, pi/2]")
        if self.lo > self.hi:
            raise DomainError("empty angle interval")

    @classmethod
    def from_degrees(cls, lo: float, hi: float) -> "AngleInterval":
        return cls(min(math.radians(lo), HALF_PI), min(math.radians(hi), HALF_PI))

    def __str__(self):
        return f"[{math.degrees(self.lo):g}deg, {math.degrees(self.hi):g}deg]"


@dataclass(frozen=True, eq=False)
class DominanceVerdict:
    """Outcome of ``dominates(A, B, v)``.

    ``worst_margin`` is ``min_p S_v(p'A) - S_v(p'B)`` over the tested
    directions and ``witness`` a direction attaining it.
    """

    holds: bool
    worst_margin: float
    witness: np.ndarray
    exact: bool
    tolerance: float
    restricted_to: str | None = None
    distortion: DistortionSpec | None = None
    n_directions: int | None = None

    def to_dict(self) -> dict:
        d = {
            "holds": self.holds,
            "exact": self.exact,
            "worst_margin": self.worst_margin,
            "witness": np.asarray(self.witness).tolist(),
            "tolerance": self.tolerance,
        }
        if self.distortion is not None:
            d["distortion"] = str(self.distortion)
        if self.restricted_to is not None:
            d["restricted_to"] = self.restricted_to
        if self.n_directions is not None:
            d["directions"] = self.n_directions
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _as_restriction(P):
    if P is None or isinstance(P, AngleInterval):
        return P
    arr = np.asarray(P, dtype=float)
    if arr.ndim == 1 and arr.size == 2 and not isinstance(P, np.ndarray):
        return AngleInterval(float(arr[0]), float(arr[1]))
    if arr.size == 0:
        raise DomainError("empty direction restriction")
    return arr


def _exact_margin_2d(A, B, wa, wb, lo, hi):
    """Minimum of ``g(theta) = S(p'A) - S(p'B)`` over ``[lo, hi]``.

    Let ``Theta`` hold the critical angles of both matrices inside the
    interval plus its endpoints.  On each arc between consecutive angles of
    ``Theta`` both rankings are fixed, so ``g(theta) = c . (cos, sin)`` for a
    constant vector ``c = z_A - z_B``: a sinusoid whose zeros are ``pi``
    apart.  Arcs here are at most ``pi/2`` long, so a sinusoid nonnegative
    at both ends of an arc stays nonnegative inside, and checking ``Theta``
    decides the sign exactly.  The reported minimum also includes the
    interior trough ``-|c|`` of each arc when its angle falls inside, so it
    is the true minimum over the whole interval, not just over ``Theta``.
    """
    theta = np.union1d(critical_angles_2d(A), critical_angles_2d(B))
    theta = theta[(theta > lo) & (theta < hi)]
    theta = np.concatenate(([lo], theta, [hi])) if hi > lo else np.array([lo])
    P = direction(theta)
    g = (_spectral_from_weights(A, wa, P) - _spectral_from_weights(B, wb, P))
    cand_val = list(g)
    cand_th = list(theta)
    if len(theta) > 1:
        mids = direction(0.5 * (theta[:-1] + theta[1:]))
        c = _support_points(A, wa, mids) - _support_points(B, wb, mids)
        trough = np.mod(np.arctan2(-c[:, 1], -c[:, 0]), 2 * math.pi)
        inside = (trough > theta[:-1]) & (trough < theta[1:])
        cand_val.extend(-np.linalg.norm(c[inside], axis=1))
        cand_th.extend(trough[inside])
    k = int(np.argmin(cand_val))
    return float(cand_val[k]), float(cand_th[k]), len(theta)


def _spectral_from_weights(X, w, P):
    proj = P @ X.T
    proj.sort(axis=1)
    return proj @ w


def dominates(A, B, v: DistortionSpec, P=None, tolerance: float | None = None, *,
              v_b: DistortionSpec | None = None,
              directions: int = DEFAULT_DIRECTIONS) -> DominanceVerdict:
    """Uniform Gini dominance: is ``S_v(p'A) >= S_v(p'B)`` for all prices ``p``?

    Equivalently ``C+(A, v)`` is contained in ``C+(B, v)``: the MRE of ``A``
    lies weakly above that of ``B``, and ``A`` is the less unequal side.

    Parameters
    ----------
    P:
        Optional restriction of the price directions: an
        :class:`AngleInterval` (or a ``(lo, hi)`` tuple of radians) for
        ``d = 2``, or a ``(k, d)`` array of directions.
    tolerance:
        Verdict threshold on the margin; default ``1e-9 * (1 + max|entry|)``.
    v_b:
        Evaluate ``B`` under a different distortion (default ``v``).  Used to
        compare one data set across aversion levels.
    directions:
        Grid size for ``d >= 3`` when ``P`` is not given.

    The 2-D procedure over an angle interval is exact (see
    ``_exact_margin_2d``); everything else evaluates a finite direction set
    and is flagged ``exact=False``.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[1]:
        raise DomainError(f"dimension mismatch: {A.shape[1]} vs {B.shape[1]} attributes")
    v_b = v if v_b is None else v_b
    for spec in (v, v_b):
        if not spec.concave:
            raise DomainError(f"uniform Gini dominance requires concave distortions, got {spec}")
    if tolerance is None:
        tolerance = default_tolerance(A, B)
    wa = empirical_weights(v, A.shape[0])
    wb = empirical_weights(v_b, B.shape[0])
    d = A.shape[1]
    R = _as_restriction(P)
    if d == 2 and (R is None or isinstance(R, AngleInterval)):
        lo, hi = (0.0, HALF_PI) if R is None else (R.lo, R.hi)
        worst, th, count = _exact_margin_2d(A, B, wa, wb, lo, hi)
        return DominanceVerdict(worst >= -tolerance, worst, direction(th), True,
                                float(tolerance), None if R is None else str(R), v, count)
    if isinstance(R, AngleInterval):
        raise DomainError("angle-interval restrictions apply to d = 2 only")
    if R is None:
        dirs = direction_grid(d, directions)
        label = None
    else:
        dirs = _check_directions(R, d)
        label = f"{len(dirs)} directions"
    g = _spectral_from_weights(A, wa, dirs) - _spectral_from_weights(B, wb, dirs)
    k = int(np.argmin(g))
    return DominanceVerdict(bool(g[k] >= -tolerance), float(g[k]), dirs[k], False,
                            float(tolerance), label, v, len(dirs))


@dataclass(frozen=True, eq=False)
class FamilyVerdict:
    """Dominance checked for every member of a distortion family."""

    family: str
    alphas: tuple[float, ...]
    verdicts: tuple[DominanceVerdict, ...]
    holds: bool
    worst_alpha: float

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "holds": self.holds,
            "worst_alpha": self.worst_alpha,
            "verdicts": [dict(alpha=a, **vd.to_dict()) for a, vd in zip(self.alphas, self.verdicts)],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def dominates_family(A, B, family: Union[str, Callable[[float], DistortionSpec]],
                     alphas: Iterable[float], P=None, tolerance: float | None = None,
                     **kw) -> FamilyVerdict:
    """Doubly uniform dominance: over prices and over an aversion grid."""
    alphas = tuple(float(a) for a in alphas)
    if not alphas:
        raise DomainError("empty alpha grid")
    if any(not 0 < a <= 1 for a in alphas):
        raise DomainError("alpha grid must lie in (0, 1]")
    make = family if callable(family) else (lambda a: make_family(family, a))
    name = getattr(family, "__name__", None) if callable(family) else family
    verdicts = tuple(dominates(A, B, make(a), P, tolerance, **kw) for a in alphas)
    k = int(np.argmin([vd.worst_margin for vd in verdicts]))
    return FamilyVerdict(str(name), alphas, verdicts,
                         all(vd.holds for vd in verdicts), alphas[k])


def transform_affine(X, A, b) -> EndowmentMatrix:
    """Rows mapped by ``x -> A x + b`` with ``A >= 0`` entrywise."""
    M = as_matrix(X)
    A = np.atleast_2d(np.asarray(A, dtype=float))
    b = np.asarray(b, dtype=float).ravel()
    if A.shape[1] != M.shape[1] or b.shape != (A.shape[0],):
        raise DomainError("shape mismatch in affine map")
    if np.any(A < 0):
        raise DomainError("representative endowments are equivariant only under nonnegative A")
    labels = X.labels if isinstance(X, EndowmentMatrix) else None
    return EndowmentMatrix(M @ A.T + b, labels)
