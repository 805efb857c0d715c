"""Windowed Hausdorff distance between MRE borders.

MRE borders are unbounded (they end in a vertical and a horizontal ray), so
both are clipped to a common axis-parallel window before comparing them.
"""
from __future__ import annotations

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial import cKDTree

from .errors import DomainError
from .mre import MREPolyline

__all__ = ["clip_chain", "border_chain", "point_segment_distance",
           "directed_hausdorff", "hausdorff_polyline"]


def border_chain(poly: MREPolyline, window) -> np.ndarray:
    """Vertices plus ray end points reaching past the window."""
    xmin, ymin, xmax, ymax = map(float, window)
    V = poly.vertices
    span = (xmax - xmin) + (ymax - ymin) + 1.0
    top = [V[0, 0], max(ymax, V[0, 1]) + span]
    right = [max(xmax, V[-1, 0]) + span, V[-1, 1]]
    return np.vstack([top, V, right])


def _clip_segment(p, q, window):
    # Liang-Barsky
    xmin, ymin, xmax, ymax = window
    d = q - p
    t0, t1 = 0.0, 1.0
    for pk, qk in ((-d[0], p[0] - xmin), (d[0], xmax - p[0]),
                   (-d[1], p[1] - ymin), (d[1], ymax - p[1])):
        if pk == 0:
            if qk < 0:
                return None
        else:
            r = qk / pk
            if pk < 0:
                t0 = max(t0, r)
            else:
                t1 = min(t1, r)
            if t0 > t1:
                return None
    return p + t0 * d, p + t1 * d


def clip_chain(chain: np.ndarray, window) -> np.ndarray:
    """Part of a monotone chain inside the window.

    A chain that increases in x and decreases in y meets a box in one
    connected piece, so the clipped segments concatenate into one chain.
    """
    window = tuple(map(float, window))
    if not (window[0] <= window[2] and window[1] <= window[3]):
        raise DomainError("window must be (xmin, ymin, xmax, ymax) with min <= max")
    pts: list[np.ndarray] = []
    for p, q in zip(chain[:-1], chain[1:]):
        seg = _clip_segment(np.asarray(p, float), np.asarray(q, float), window)
        if seg is None:
            continue
        for z in seg:
            if not pts or np.any(z != pts[-1]):
                pts.append(z)
    if not pts:
        raise DomainError("window does not meet the polyline")
    return np.array(pts)


def point_segment_distance(points: np.ndarray, chain: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest segment of ``chain``."""
    points = np.atleast_2d(points)
    if len(chain) == 1:
        return np.linalg.norm(points - chain[0], axis=1)
    a = chain[:-1]
    ab = chain[1:] - a
    len2 = np.einsum("ij,ij->i", ab, ab)
    len2 = np.where(len2 == 0, 1.0, len2)
    out = np.empty(len(points))
    step = max(1, (1 << 20) // len(a))
    for lo in range(0, len(points), step):
        P = points[lo:lo + step, None, :]
        t = np.clip(np.einsum("pkj,kj->pk", P - a, ab) / len2, 0.0, 1.0)
        proj = a + t[..., None] * ab
        out[lo:lo + step] = np.sqrt(((P - proj) ** 2).sum(axis=-1)).min(axis=1)
    return out


def _densify(chain: np.ndarray, step: float):
    pts = [chain[:1]]
    owner = [np.array([0])]
    params = [np.array([0.0])]
    for k, (p, q) in enumerate(zip(chain[:-1], chain[1:])):
        m = max(1, int(np.ceil(np.linalg.norm(q - p) / step)))
        t = np.arange(1, m + 1) / m
        pts.append(p + t[:, None] * (q - p))
        owner.append(np.full(m, k))
        params.append(t)
    return np.vstack(pts), np.concatenate(owner), np.concatenate(params)


def _nearest_distance(points, B, step):
    """Distance from ``points`` to chain ``B`` via a k-d tree of its samples.

    Exact distances are taken to the segments owning the nearest samples
    of ``B`` (and their neighbours); the nearest segment is among them
    unless two segments are within ``step`` of each other, in which case
    the error is below ``step``.
    """
    if len(B) == 1:
        return np.linalg.norm(points - B[0], axis=1)
    samples, owner, _ = _densify(B, step)
    k = min(4, len(samples))
    _, idx = cKDTree(samples).query(points, k=k)
    idx = np.atleast_2d(idx.reshape(len(points), k))
    segs = np.concatenate([owner[idx] - 1, owner[idx], owner[idx] + 1], axis=1)
    segs = np.clip(segs, 0, len(B) - 2)
    a = B[segs]
    ab = B[segs + 1] - a
    len2 = np.einsum("pkj,pkj->pk", ab, ab)
    len2 = np.where(len2 == 0, 1.0, len2)
    rel = points[:, None, :] - a
    t = np.clip(np.einsum("pkj,pkj->pk", rel, ab) / len2, 0.0, 1.0)
    diff = rel - t[..., None] * ab
    return np.sqrt(np.einsum("pkj,pkj->pk", diff, diff)).min(axis=1)


def directed_hausdorff(A: np.ndarray, B: np.ndarray, step: float) -> float:
    """``sup_{a in A} dist(a, B)`` for polygonal chains ``A`` and ``B``.

    The distance to ``B`` is 1-Lipschitz along ``A``; it is sampled at the
    vertices of ``A`` and at spacing ``step`` in between, and the best sample
    is polished by a bounded scalar search on its neighbourhood.
    """
    pts, owner, params = _densify(A, step)
    dist = _nearest_distance(pts, B, step)
    k = int(np.argmax(dist))
    best = float(dist[k])
    if len(A) > 1:
        seg = int(owner[k])
        p, q = A[seg], A[seg + 1]
        length = float(np.linalg.norm(q - p))
        if length > 0:
            t0 = float(params[k])
            h = step / length
            lo, hi = max(0.0, t0 - h), min(1.0, t0 + h)
            res = minimize_scalar(
                lambda t: -point_segment_distance((p + t * (q - p))[None], B)[0],
                bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
            best = max(best, -float(res.fun))
    return best


def hausdorff_polyline(M1: MREPolyline, M2: MREPolyline, window,
                       step: float | None = None) -> float:
    """Symmetric Hausdorff distance of two MRE borders clipped to ``window``.

    ``window`` is ``(xmin, ymin, xmax, ymax)``.  ``step`` is the sampling
    interval along the chains (default ``1e-4`` of the window diagonal).
    """
    window = tuple(map(float, window))
    A = clip_chain(border_chain(M1, window), window)
    B = clip_chain(border_chain(M2, window), window)
    if step is None:
        diag = float(np.hypot(window[2] - window[0], window[3] - window[1]))
        step = 1e-4 * diag if diag > 0 else 1.0
    return max(directed_hausdorff(A, B, step), directed_hausdorff(B, A, step))
