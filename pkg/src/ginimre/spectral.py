"""Univariate spectral values, generalized Gini indices and dual dominance.

All functions work on the empirical distribution of a finite sample, i.e.
mass ``1/n`` on each observation.  Quantile functions are left continuous:
``Q(t) = x_(k)`` with ``k`` the smallest index such that ``k/n >= t``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .distortion import DistortionSpec, dw, empirical_weights
from .errors import DomainError

__all__ = [
    "Sample1D",
    "SDVerdict",
    "as_sample",
    "quantile",
    "spectral_value",
    "generalized_gini",
    "s_gini",
    "classical_gini",
    "lorenz_integral",
    "dual_sd_check",
    "RELATIONS",
]

RELATIONS = ("first", "concave", "convex", "dw")
_RELATION_ALIASES = {
    "first": "first", "firstdegree": "first", "first_degree": "first", "fsd": "first",
    "concave": "concave", "secondconcave": "concave", "second_concave": "concave",
    "convex": "convex", "secondconvex": "convex", "second_convex": "convex",
    "dw": "dw", "donaldsonweymark": "dw", "donaldson_weymark": "dw",
}


class Sample1D:
    """A finite sample of real endowments with its sorted view cached."""

    __slots__ = ("_values", "_sorted")

    def __init__(self, values: Iterable[float]):
        arr = np.array(values, dtype=float).ravel()
        if arr.size == 0:
            raise DomainError("a sample needs at least one value")
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample values must be finite")
        arr.setflags(write=False)
        srt = np.sort(arr, kind="stable")
        srt.setflags(write=False)
        self._values = arr
        self._sorted = srt

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def sorted(self) -> np.ndarray:
        return self._sorted

    @property
    def n(self) -> int:
        return self._values.size

    def mean(self) -> float:
        return float(self._values.mean())

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Sample1D(n={self.n})"


def as_sample(x) -> Sample1D:
    return x if isinstance(x, Sample1D) else Sample1D(x)


def _rank(n: int, t) -> np.ndarray:
    """Smallest 1-based k with k/n >= t, computed on the float grid k/n."""
    grid = np.arange(1, n + 1, dtype=float) / n
    return np.searchsorted(grid, t, side="left") + 1


def quantile(s, t):
    """Left-continuous empirical quantile at ``t`` in ``(0, 1]``."""
    s = as_sample(s)
    arr = np.asarray(t, dtype=float)
    if np.any(~(arr > 0.0)) or np.any(arr > 1.0):
        raise DomainError("quantile level must lie in (0, 1]")
    out = s.sorted[_rank(s.n, arr) - 1]
    return float(out) if out.ndim == 0 else out


def spectral_value(s, v: DistortionSpec) -> float:
    """Rank-weighted mean ``sum_i x_(i) w_i`` of the sample under ``v``."""
    s = as_sample(s)
    return float(np.dot(s.sorted, empirical_weights(v, s.n)))


def generalized_gini(s, v: DistortionSpec, mode: str = "absolute") -> float:
    """Mean minus spectral value; ``relative`` divides by the (positive) mean."""
    s = as_sample(s)
    mu = s.mean()
    g = mu - spectral_value(s, v)
    if mode == "absolute":
        return g
    if mode == "relative":
        if not mu > 0:
            raise DomainError(
                f"relative Gini index requires a positive mean, got mean {mu!r}")
        return g / mu
    raise DomainError(f"mode must be 'absolute' or 'relative', got {mode!r}")


def s_gini(s, beta: float) -> float:
    """Absolute S-Gini index with aversion ``beta >= 1``."""
    if not beta >= 1:
        raise DomainError(f"S-Gini aversion must be >= 1, got {beta!r}")
    return generalized_gini(s, dw(1.0 / beta), "absolute")


def classical_gini(s) -> float:
    """Classical absolute Gini ``(1/n^2) sum_i x_(i) (2i - n - 1)``.

    Equal to half the mean absolute difference.
    """
    s = as_sample(s)
    n = s.n
    i = np.arange(1, n + 1)
    return float(np.dot(s.sorted, 2 * i - n - 1) / n ** 2)


def lorenz_integral(s, t) -> np.ndarray:
    """Generalized Lorenz curve ``int_0^t Q(u) du``.

    Exact: the curve is linear between the breakpoints ``i/n`` where it
    equals the running sum of ``x_(i) / n``.
    """
    s = as_sample(s)
    grid = np.arange(s.n + 1, dtype=float) / s.n
    cum = np.concatenate(([0.0], np.cumsum(s.sorted) / s.n))
    return np.interp(t, grid, cum)


@dataclass(frozen=True)
class SDVerdict:
    """Outcome of a dual stochastic dominance check ``X <= Y``.

    ``worst_margin`` is the smallest slack of the defining inequality (its
    sign convention: nonnegative means the inequality holds there);
    ``witness`` is the rank level ``t`` (or aversion ``beta`` for ``dw``)
    where it is attained.
    """

    relation: str
    holds: bool
    worst_margin: float
    witness: float
    tolerance: float
    betas: tuple[float, ...] | None = field(default=None)

    def to_dict(self) -> dict:
        d = {
            "relation": self.relation,
            "holds": self.holds,
            "worst_margin": self.worst_margin,
            "witness": self.witness,
            "tolerance": self.tolerance,
        }
        if self.betas is not None:
            d["betas"] = list(self.betas)
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _merged_grid(n: int, m: int) -> np.ndarray:
    return np.union1d(np.arange(1, n + 1) / n, np.arange(1, m + 1) / m)


def dual_sd_check(x, y, relation: str, tolerance: float | None = None,
                  betas: Iterable[float] | None = None) -> SDVerdict:
    """Decide whether ``y`` dominates ``x`` in the given dual order.

    Relations:

    ``first``
        ``Q_X(t) <= Q_Y(t)`` for all ``t`` (first degree dominance).
    ``concave``
        ``int_0^t Q_X <= int_0^t Q_Y`` (generalized Lorenz, second degree
        concave dominance).
    ``convex``
        ``int_t^1 Q_X <= int_t^1 Q_Y`` (second degree convex dominance).
    ``dw``
        Spectral values ordered for every S-Gini aversion in ``betas``.

    The first three are checked on the union of both breakpoint grids
    ``{i/n} u {j/m}``; between those points the compared functions are
    constant (quantiles) or linear (integrals), so the check is exact.
    The default tolerance is ``1e-9`` times the largest absolute value.
    """
    x = as_sample(x)
    y = as_sample(y)
    rel = _RELATION_ALIASES.get(str(relation).lower().replace("-", "_"))
    if rel is None:
        raise DomainError(f"unknown relation {relation!r}; choose from {RELATIONS}")
    if tolerance is None:
        scale = max(np.abs(x.sorted).max(), np.abs(y.sorted).max())
        tolerance = 1e-9 * scale
    beta_tuple = None
    if rel == "dw":
        beta_tuple = tuple(float(b) for b in (betas or ()))
        if not beta_tuple:
            raise DomainError("dw dominance needs a nonempty set of aversions")
        if any(not b >= 1 for b in beta_tuple):
            raise DomainError("dw aversions must be >= 1")
        points = np.array(beta_tuple)
        margins = np.array([spectral_value(y, dw(1 / b)) - spectral_value(x, dw(1 / b))
                            for b in beta_tuple])
    else:
        grid = _merged_grid(x.n, y.n)
        if rel == "first":
            points = grid
            margins = quantile(y, grid) - quantile(x, grid)
        elif rel == "concave":
            points = grid
            margins = lorenz_integral(y, grid) - lorenz_integral(x, grid)
        else:
            points = np.concatenate(([0.0], grid))
            upper_x = x.sorted.sum() / x.n - lorenz_integral(x, points)
            upper_y = y.sorted.sum() / y.n - lorenz_integral(y, points)
            margins = upper_y - upper_x
    k = int(np.argmin(margins))
    worst = float(margins[k])
    return SDVerdict(rel, bool(worst >= -tolerance), worst, float(points[k]),
                     float(tolerance), beta_tuple)
