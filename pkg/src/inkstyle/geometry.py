"""Closed cubic Bézier paths and the affine/sampling machinery shared by the
motif builders and the rasterizer.

Coordinates are plain float64 arrays.  A path is a sequence of cubic segments
stored as an (n, 4, 2) array: segment i runs from segments[i, 0] through the
two control points to segments[i, 3].  Paths used for rendering are closed:
segment i ends where segment i+1 begins and the last segment returns to the
start of segment 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

CLOSURE_TOL = 1e-9

# Control points may overshoot the unit square, but only this far.
CONTROL_BOUND_LO = -0.5
CONTROL_BOUND_HI = 1.5


@dataclass(frozen=True)
class VectorPath:
    """Closed path of cubic Bézier segments.

    segments: (n, 4, 2) float64 array of control points.
    """

    segments: np.ndarray
    closed: bool = True

    def __post_init__(self):
        seg = np.asarray(self.segments, dtype=np.float64)
        if seg.ndim != 3 or seg.shape[1:] != (4, 2):
            raise ValueError(f"segments must be (n, 4, 2), got {seg.shape}")
        object.__setattr__(self, "segments", seg)

    def __len__(self) -> int:
        return self.segments.shape[0]

    def closure_gap(self) -> float:
        """Max endpoint mismatch: between consecutive segments and around the loop."""
        ends = self.segments[:, 3]
        starts = np.roll(self.segments[:, 0], -1, axis=0)
        return float(np.abs(ends - starts).max())

    def is_closed(self, tol: float = CLOSURE_TOL) -> bool:
        return self.closure_gap() < tol

    def transformed(self, matrix: np.ndarray, offset=(0.0, 0.0)) -> "VectorPath":
        """Apply ``p @ matrix.T + offset`` to every control point."""
        pts = self.segments.reshape(-1, 2) @ np.asarray(matrix, dtype=np.float64).T
        pts = pts + np.asarray(offset, dtype=np.float64)
        return VectorPath(pts.reshape(-1, 4, 2), self.closed)

    def translated(self, dx: float, dy: float) -> "VectorPath":
        return self.transformed(np.eye(2), (dx, dy))

    def scaled(self, s: float, center=(0.0, 0.0)) -> "VectorPath":
        cx, cy = center
        return self.transformed(np.eye(2) * s, (cx - s * cx, cy - s * cy))

    def rotated(self, angle_rad: float, center=(0.0, 0.0)) -> "VectorPath":
        c, s = np.cos(angle_rad), np.sin(angle_rad)
        m = np.array([[c, -s], [s, c]])
        ctr = np.asarray(center, dtype=np.float64)
        return self.transformed(m, ctr - ctr @ m.T)

    def mirrored_x(self, axis_x: float = 0.5) -> "VectorPath":
        """Reflect about the vertical line x = axis_x.  Applying twice is the identity."""
        m = np.array([[-1.0, 0.0], [0.0, 1.0]])
        return self.transformed(m, (2.0 * axis_x, 0.0))

    def sample(self, per_segment: int = 32) -> np.ndarray:
        """Uniform-parameter polyline over the whole path, (n * per_segment, 2).

        The closing point is not repeated.
        """
        return _eval_cubics(self.segments, per_segment)

    def sample_bbox(self, per_segment: int = 64) -> tuple[float, float, float, float]:
        pts = self.sample(per_segment)
        (x0, y0), (x1, y1) = pts.min(axis=0), pts.max(axis=0)
        return float(x0), float(y0), float(x1), float(y1)


def _eval_cubics(segments: np.ndarray, per_segment: int) -> np.ndarray:
    t = np.arange(per_segment, dtype=np.float64) / per_segment
    u = 1.0 - t
    basis = np.stack([u**3, 3 * u**2 * t, 3 * u * t**2, t**3], axis=1)  # (m, 4)
    pts = np.einsum("mk,nkd->nmd", basis, segments)
    return pts.reshape(-1, 2)


def flatten_closed(path: VectorPath, scale: float, min_per_seg: int = 8,
                   max_per_seg: int = 96, samples_per_px: float = 0.6) -> np.ndarray:
    """Flatten to a closed polyline, choosing sample counts from on-canvas size.

    ``scale`` maps path units to pixels; sampling density is tied to the control
    polygon length in pixels so wildly different render sizes stay consistent.
    """
    seg = path.segments
    chord = np.abs(np.diff(seg, axis=1)).sum(axis=(1, 2)) * scale
    counts = np.clip(np.ceil(chord * samples_per_px).astype(int), min_per_seg, max_per_seg)
    pieces = [_eval_cubics(seg[i : i + 1], int(counts[i])) for i in range(seg.shape[0])]
    return np.concatenate(pieces, axis=0)


def arc_segment(p0, p1, bulge: float) -> np.ndarray:
    """One cubic from p0 to p1 bowing to the left of travel by ``bulge`` × chord.

    bulge > 0 bows left, < 0 right, 0 is a straight segment.
    """
    p0 = np.asarray(p0, dtype=np.float64)
    p1 = np.asarray(p1, dtype=np.float64)
    d = p1 - p0
    n = np.array([-d[1], d[0]]) * bulge
    return np.stack([p0, p0 + d / 3.0 + n, p0 + 2.0 * d / 3.0 + n, p1])


def wave_segments(p0, p1, arcs: int, amplitude: float, first_side: float = 1.0) -> list[np.ndarray]:
    """Chain of ``arcs`` cubic arcs along the chord p0→p1 with alternating bulge.

    Adjacent arcs bow to opposite sides, so the chain has ``arcs - 1`` convexity
    alternations.
    """
    p0 = np.asarray(p0, dtype=np.float64)
    p1 = np.asarray(p1, dtype=np.float64)
    knots = p0 + np.linspace(0.0, 1.0, arcs + 1)[:, None] * (p1 - p0)
    side = first_side
    out = []
    for i in range(arcs):
        out.append(arc_segment(knots[i], knots[i + 1], amplitude * side))
        side = -side
    return out


def tip_segment(p_from, tip, curl_rad: float) -> np.ndarray:
    """Closing approach into ``tip``: a chord whose control points are rotated
    about the tip by ``curl_rad``.  At curl 0 the segment is exactly straight."""
    p_from = np.asarray(p_from, dtype=np.float64)
    tip = np.asarray(tip, dtype=np.float64)
    d = tip - p_from
    c1 = p_from + d / 3.0
    c2 = p_from + 2.0 * d / 3.0
    if curl_rad != 0.0:
        co, si = np.cos(curl_rad), np.sin(curl_rad)
        m = np.array([[co, -si], [si, co]])
        c1 = (c1 - tip) @ m.T + tip
        c2 = (c2 - tip) @ m.T + tip
    return np.stack([p_from, c1, c2, tip])


def catmull_rom_segments(points: np.ndarray) -> list[np.ndarray]:
    """Open Catmull-Rom chain through ``points`` as cubic Béziers (clamped ends)."""
    p = np.asarray(points, dtype=np.float64)
    if p.shape[0] < 2:
        raise ValueError("need at least two points")
    ext = np.concatenate([p[:1], p, p[-1:]], axis=0)
    out = []
    for i in range(p.shape[0] - 1):
        a, b, c, d = ext[i], ext[i + 1], ext[i + 2], ext[i + 3]
        out.append(np.stack([b, b + (c - a) / 6.0, c - (d - b) / 6.0, c]))
    return out


def path_from_segments(segment_list) -> VectorPath:
    return VectorPath(np.stack(segment_list, axis=0))


def normalized_to_unit(path: VectorPath, per_segment: int = 64) -> VectorPath:
    """Isotropically scale/translate so the sampled bbox spans [0, 1] in its
    longer dimension, with the shorter dimension centered."""
    x0, y0, x1, y1 = path.sample_bbox(per_segment)
    w, h = x1 - x0, y1 - y0
    s = 1.0 / max(w, h)
    ox = -x0 * s + (1.0 - w * s) / 2.0
    oy = -y0 * s + (1.0 - h * s) / 2.0
    return path.transformed(np.eye(2) * s, (ox, oy))


def polyline_curvature_signs(points: np.ndarray, rel_tol: float = 1e-3) -> np.ndarray:
    """Signed turn direction at each interior polyline vertex.

    Returns +1/-1 where the normalized cross product of successive edges is
    decisive and 0 where it is below ``rel_tol`` (treated as straight).  This is
    the independent convexity oracle used by the motif tests.
    """
    p = np.asarray(points, dtype=np.float64)
    v = np.diff(p, axis=0)
    cross = v[:-1, 0] * v[1:, 1] - v[:-1, 1] * v[1:, 0]
    norm = np.linalg.norm(v[:-1], axis=1) * np.linalg.norm(v[1:], axis=1)
    z = np.divide(cross, norm, out=np.zeros_like(cross), where=norm > 0)
    signs = np.sign(z)
    signs[np.abs(z) < rel_tol] = 0
    return signs


def count_sign_alternations(signs: np.ndarray) -> int:
    """Number of +→- / -→+ flips in a sign sequence, ignoring zeros."""
    nz = signs[signs != 0]
    if nz.size < 2:
        return 0
    return int(np.sum(nz[1:] * nz[:-1] < 0))
