"""Scanline rasterization of closed polylines with the nonzero winding rule.

Filling happens on a supersampled binary grid (default 4x per axis) which is
box-filtered down to 8-bit grayscale, so anti-aliased edges survive without any
randomness.  Images follow the ink convention: 0 = black ink, 255 = white
background.
"""

from __future__ import annotations

import numpy as np

SUPERSAMPLE = 4


def fill_mask(loops, width: int, height: int) -> np.ndarray:
    """Rasterize closed polyline loops to a boolean (height, width) mask.

    A grid cell is inside when its center (x + 0.5, y + 0.5) has nonzero
    winding number.  ``loops`` is an iterable of (n, 2) float arrays in pixel
    coordinates; each is treated as closed.
    """
    mask_diff = np.zeros((height, width + 1), dtype=np.int32)
    edges = []
    for loop in loops:
        pts = np.asarray(loop, dtype=np.float64)
        if pts.shape[0] < 3:
            continue
        nxt = np.roll(pts, -1, axis=0)
        edges.append(np.concatenate([pts, nxt], axis=1))  # x0 y0 x1 y1
    if not edges:
        return np.zeros((height, width), dtype=bool)
    e = np.concatenate(edges, axis=0)
    x0, y0, x1, y1 = e[:, 0], e[:, 1], e[:, 2], e[:, 3]

    keep = y0 != y1
    x0, y0, x1, y1 = x0[keep], y0[keep], x1[keep], y1[keep]
    if x0.size == 0:
        return np.zeros((height, width), dtype=bool)
    direction = np.where(y1 > y0, 1, -1).astype(np.int32)

    ymin = np.minimum(y0, y1)
    ymax = np.maximum(y0, y1)
    # Rows whose center ymin <= y + 0.5 < ymax (half-open: shared vertices
    # count once).
    j0 = np.maximum(np.ceil(ymin - 0.5), 0).astype(np.int64)
    j1 = np.minimum(np.ceil(ymax - 0.5), height).astype(np.int64)
    counts = np.maximum(j1 - j0, 0)
    total = int(counts.sum())
    if total == 0:
        return np.zeros((height, width), dtype=bool)

    eidx = np.repeat(np.arange(x0.size), counts)
    offs = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    rows = j0[eidx] + offs
    yc = rows + 0.5
    t = (yc - y0[eidx]) / (y1[eidx] - y0[eidx])
    xs = x0[eidx] + t * (x1[eidx] - x0[eidx])
    dirs = direction[eidx]

    order = np.lexsort((xs, rows))
    rows, xs, dirs = rows[order], xs[order], dirs[order]

    # Winding number between crossing k and k+1 within a row: cumulative
    # direction sum reset at row boundaries.
    cum = np.cumsum(dirs)
    row_change = np.empty(rows.size, dtype=bool)
    row_change[0] = True
    row_change[1:] = rows[1:] != rows[:-1]
    start_vals = (cum - dirs)[row_change]
    base = np.repeat(start_vals, np.diff(np.append(np.nonzero(row_change)[0], rows.size)))
    wind = cum - base

    same_row = np.empty(rows.size, dtype=bool)
    same_row[:-1] = rows[:-1] == rows[1:]
    same_row[-1] = False
    active = same_row & (wind != 0)
    if not np.any(active):
        return np.zeros((height, width), dtype=bool)

    left = xs[active]
    right = np.roll(xs, -1)[active]
    r = rows[active]
    a = np.clip(np.ceil(left - 0.5), 0, width).astype(np.int64)
    b = np.clip(np.ceil(right - 0.5), 0, width).astype(np.int64)
    ok = b > a
    np.add.at(mask_diff, (r[ok], a[ok]), 1)
    np.add.at(mask_diff, (r[ok], b[ok]), -1)
    return np.cumsum(mask_diff[:, :-1], axis=1) > 0


def downsample_coverage(mask: np.ndarray, factor: int = SUPERSAMPLE) -> np.ndarray:
    """Box-filter a supersampled boolean mask to float coverage in [0, 1]."""
    h, w = mask.shape
    if h % factor or w % factor:
        raise ValueError("mask dimensions must be a multiple of the supersample factor")
    return mask.reshape(h // factor, factor, w // factor, factor).mean(axis=(1, 3))


def coverage_to_ink(coverage: np.ndarray) -> np.ndarray:
    """Coverage in [0, 1] → 8-bit ink image (0 ink, 255 background)."""
    return np.round(255.0 * (1.0 - coverage)).astype(np.uint8)


def render_loops(loops, size_px: int, supersample: int = SUPERSAMPLE) -> np.ndarray:
    """Fill loops given in [0, size_px] coordinates onto a size_px square canvas."""
    scaled = [np.asarray(l, dtype=np.float64) * supersample for l in loops]
    mask = fill_mask(scaled, size_px * supersample, size_px * supersample)
    return coverage_to_ink(downsample_coverage(mask, supersample))


def ink_fraction(image: np.ndarray, threshold: int = 128) -> float:
    """Fraction of pixels darker than ``threshold``."""
    return float(np.count_nonzero(image < threshold)) / image.size
