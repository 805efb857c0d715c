"""Distortion (weight-generating) functions on the unit interval.

A distortion ``v`` is a nondecreasing map of ``[0, 1]`` onto itself with
``v(0) = 0`` and ``v(1) = 1``.  Applied to the ranks of a distribution it
yields rank weights; concave distortions put more weight on the lower
ranks and therefore express aversion to inequality.

Families parameterized by ``alpha`` in ``(0, 1]`` (aversion ``1 / alpha``):

* ``step``     -- ``0`` below ``alpha``, ``1`` from ``alpha`` on (not concave)
* ``zonoid``   -- ``min(t / alpha, 1)``
* ``dw``       -- ``1 - (1 - t) ** (1 / alpha)`` (Donaldson-Weymark / S-Gini)

plus ``identity`` and a continuous ``piecewise`` linear form.  The duals
``t -> 1 - v(1 - t)`` of ``step`` and ``dw`` are available as ``dual_step``
and ``dual_dw``.
"""
from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .errors import DomainError

__all__ = [
    "DistortionSpec",
    "identity",
    "step",
    "zonoid",
    "dw",
    "piecewise",
    "family",
    "evaluate",
    "dual",
    "empirical_weights",
    "family_is_monotone_in_alpha",
    "parse_distortion",
    "parse_number",
]

PARAMETRIC = ("step", "zonoid", "dw", "dual_step", "dual_dw")
FAMILIES = ("identity", "piecewise") + PARAMETRIC

_SLOPE_TOL = 1e-12


@dataclass(frozen=True)
class DistortionSpec:
    """An immutable distortion function.

    Use the module-level constructors (:func:`dw`, :func:`zonoid`, ...)
    rather than building instances by hand.
    """

    family: str
    alpha: float | None = None
    breakpoints: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown distortion family {self.family!r}")
        if self.family in PARAMETRIC:
            a = self.alpha
            if a is None or not (0.0 < a <= 1.0) or not math.isfinite(a):
                raise DomainError(
                    f"{self.family} distortion needs alpha in (0, 1], got {a!r}")
        if self.family == "piecewise":
            _check_breakpoints(self.breakpoints)

    def __call__(self, t):
        return evaluate(self, t)

    def __str__(self):
        if self.family == "identity":
            return "identity"
        if self.family == "piecewise":
            pts = ";".join(f"{t:g}/{y:g}" for t, y in self.breakpoints)
            return f"piecewise:{pts}"
        return f"{self.family}:{self.alpha:.10g}"

    @property
    def beta(self) -> float | None:
        """Inequality aversion ``1 / alpha`` (``None`` when not parametric)."""
        return None if self.alpha is None else 1.0 / self.alpha

    @property
    def concave(self) -> bool:
        if self.family in ("identity", "zonoid", "dw"):
            return True
        if self.family == "dual_dw":
            return self.alpha == 1.0
        if self.family == "piecewise":
            slopes = _slopes(self.breakpoints)
            return bool(np.all(np.diff(slopes) <= _SLOPE_TOL))
        return False

    @property
    def convex(self) -> bool:
        if self.family in ("identity", "dual_dw"):
            return True
        if self.family == "dw":
            return self.alpha == 1.0
        if self.family == "piecewise":
            slopes = _slopes(self.breakpoints)
            return bool(np.all(np.diff(slopes) >= -_SLOPE_TOL))
        return False

    def _raw(self, t: np.ndarray) -> np.ndarray:
        a = self.alpha
        f = self.family
        if f == "identity":
            return t.copy()
        if f == "step":
            return np.where(t < a, 0.0, 1.0)
        if f == "dual_step":
            return np.where(t > 1.0 - a, 1.0, 0.0)
        if f == "zonoid":
            return np.minimum(t / a, 1.0)
        if f == "dw":
            return 1.0 - (1.0 - t) ** (1.0 / a)
        if f == "dual_dw":
            return t ** (1.0 / a)
        ts, vs = zip(*self.breakpoints)
        return np.interp(t, ts, vs)


def _slopes(points):
    pts = np.asarray(points, dtype=float)
    return np.diff(pts[:, 1]) / np.diff(pts[:, 0])


def _check_breakpoints(points):
    if points is None or len(points) < 2:
        raise DomainError("piecewise distortion needs at least two breakpoints")
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or not np.all(np.isfinite(pts)):
        raise DomainError("breakpoints must be finite (t, v) pairs")
    if tuple(pts[0]) != (0.0, 0.0) or tuple(pts[-1]) != (1.0, 1.0):
        raise DomainError("breakpoints must start at (0, 0) and end at (1, 1)")
    if np.any(np.diff(pts[:, 0]) <= 0):
        raise DomainError("breakpoint abscissae must be strictly increasing")
    if np.any(np.diff(pts[:, 1]) < 0):
        raise DomainError("breakpoint values must be nondecreasing")


def identity() -> DistortionSpec:
    return DistortionSpec("identity")


def step(alpha: float) -> DistortionSpec:
    """Step distortion; its spectral value is the ``alpha``-quantile."""
    return DistortionSpec("step", float(alpha))


def zonoid(alpha: float) -> DistortionSpec:
    """``min(t / alpha, 1)``; spectral value is the mean of the lower ``alpha`` part."""
    return DistortionSpec("zonoid", float(alpha))


def dw(alpha: float) -> DistortionSpec:
    """Donaldson-Weymark distortion ``1 - (1 - t) ** (1 / alpha)``."""
    return DistortionSpec("dw", float(alpha))


def piecewise(points: Iterable[Sequence[float]]) -> DistortionSpec:
    """Continuous piecewise linear distortion through ``points``."""
    pts = tuple((float(t), float(y)) for t, y in points)
    return DistortionSpec("piecewise", None, pts)


def family(name: str, alpha: float) -> DistortionSpec:
    """Member ``alpha`` of the named family (``identity`` ignores ``alpha``)."""
    if name == "identity":
        return identity()
    if name not in PARAMETRIC:
        raise DomainError(f"{name!r} is not a parametric family")
    return DistortionSpec(name, float(alpha))


def evaluate(v: DistortionSpec, t):
    """Evaluate ``v`` at ``t`` (scalar or array) in ``[0, 1]``."""
    arr = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("distortion argument must lie in [0, 1]")
    out = v._raw(arr)
    # pin the endpoints; power forms can drift by an ulp
    out = np.where(arr == 0.0, 0.0, np.where(arr == 1.0, 1.0, out))
    if out.ndim == 0:
        return float(out)
    return out


def dual(v: DistortionSpec) -> DistortionSpec:
    """The dual distortion ``t -> 1 - v(1 - t)``.

    ``zonoid`` has no closed family for its dual, so the result is the
    piecewise linear ``max(0, (t - 1 + alpha) / alpha)``.
    """
    f = v.family
    if f == "identity":
        return v
    if f == "step":
        return DistortionSpec("dual_step", v.alpha)
    if f == "dual_step":
        return DistortionSpec("step", v.alpha)
    if f == "dw":
        return DistortionSpec("dual_dw", v.alpha)
    if f == "dual_dw":
        return DistortionSpec("dw", v.alpha)
    if f == "zonoid":
        if v.alpha == 1.0:
            return piecewise([(0.0, 0.0), (1.0, 1.0)])
        return piecewise([(0.0, 0.0), (1.0 - v.alpha, 0.0), (1.0, 1.0)])
    pts = [(1.0 - t, 1.0 - y) for t, y in reversed(v.breakpoints)]
    # 1 - (1 - t) is not always t in floating point
    pts[0] = (0.0, 0.0)
    pts[-1] = (1.0, 1.0)
    return piecewise(pts)


def empirical_weights(v: DistortionSpec, n: int) -> np.ndarray:
    """Rank weights ``w_i = v(i/n) - v((i-1)/n)`` for ``i = 1..n``.

    The weights apply to the data sorted ascending.  They are differences of
    the closed form of ``v``; for ``dw`` the complement ``(1 - t) ** beta``
    is differenced directly to avoid cancellation near ``t = 1``.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"population size must be a positive integer, got {n!r}")
    n = int(n)
    if v.family == "dw":
        beta = 1.0 / v.alpha
        upper = (np.arange(n, -1, -1, dtype=float) / n) ** beta
        return upper[:-1] - upper[1:]
    grid = np.arange(n + 1, dtype=float) / n
    return np.diff(evaluate(v, grid))


def family_is_monotone_in_alpha(name: Union[str, Callable[[float], DistortionSpec]],
                                t_grid, alpha_grid) -> bool:
    """Check that the family members are pointwise ordered by aversion.

    Returns True iff, at every ``t`` in ``t_grid``, ``r_alpha(t)`` does not
    increase as ``alpha`` increases along ``alpha_grid``; equivalently the
    distortion rises pointwise with aversion ``1 / alpha``.  This is the
    ordering under which representative endowments of a family are nested,
    the higher aversion lying weakly below.
    """
    alphas = np.asarray(alpha_grid, dtype=float)
    if alphas.ndim != 1 or alphas.size == 0:
        raise DomainError("alpha grid must be a nonempty sequence")
    if np.any(alphas <= 0) or np.any(alphas > 1) or np.any(np.diff(alphas) <= 0):
        raise DomainError("alpha grid must be strictly increasing within (0, 1]")
    make = name if callable(name) else (lambda a: family(name, a))
    ts = np.asarray(t_grid, dtype=float)
    values = np.array([evaluate(make(a), ts) for a in alphas])
    return bool(np.all(np.diff(values, axis=0) <= 1e-15))


def parse_number(text: str) -> float:
    """Parse a decimal or a fraction such as ``3/14``."""
    text = text.strip()
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a number: {text!r}") from exc


def parse_distortion(text: str) -> DistortionSpec:
    """Parse ``identity``, ``step:A``, ``zonoid:A``, ``dw:A`` or a CSV path.

    ``A`` may be a decimal or a fraction.  A path names a two-column CSV of
    ``(t, v(t))`` breakpoints, optionally with a header row.
    """
    text = text.strip()
    if text == "identity":
        return identity()
    name, sep, arg = text.partition(":")
    if sep and name in PARAMETRIC:
        return family(name, parse_number(arg))
    if os.path.isfile(text):
        return piecewise(_read_breakpoints(text))
    raise DomainError(
        f"malformed distortion {text!r}; expected identity, step:A, zonoid:A, "
        "dw:A or a breakpoint CSV path")


def _read_breakpoints(path):
    rows = []
    with open(path, newline="") as fh:
        for i, row in enumerate(csv.reader(fh)):
            if not row or not "".join(row).strip():
                continue
            try:
                rows.append((float(row[0]), float(row[1])))
            except (ValueError, IndexError):
                if i == 0 and not rows:
                    continue  # header
                raise DomainError(f"{path}: bad breakpoint row {row!r}")
    return rows
