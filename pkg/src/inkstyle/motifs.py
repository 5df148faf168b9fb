"""The 32-element decorative motif library.

Eight parametric families -- flame tongues, serrated flames, spirals, leaves,
vines and hooks, the flame/leaf/vine vocabulary of traditional ornament --
each instantiated at four documented parameter variations, giving exactly 32
elements with stable ids (id = family_index * 4 + variation_index).

Every element is a closed cubic-Bézier outline in the unit square whose longer
dimension spans [0, 1].  Construction is pure: the same spec always yields the
same control points, and rendering the same (spec, size) is byte-identical.

Construction conventions shared by every family:
  * the path starts at the element's tip and the *final* segment is the
    closing approach into that tip, built by ``geometry.tip_segment`` -- so a
    variation with tip_curl = 0 ends in an exactly straight segment;
  * for the serrated family the serrated flank is the leading run of
    ``serrations + 1`` alternating arcs, i.e. ``path.segments[0 : serrations+1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .geometry import (
    VectorPath,
    arc_segment,
    catmull_rom_segments,
    normalized_to_unit,
    path_from_segments,
    tip_segment,
    wave_segments,
)
from .geometry import flatten_closed
from .rasterize import SUPERSAMPLE, coverage_to_ink, downsample_coverage, fill_mask

FAMILIES = (
    "flame_tongue",
    "serrated_flame",
    "curl_spiral",
    "teardrop_leaf",
    "vine_s_curve",
    "triple_flame",
    "hook",
    "lanceolate_leaf",
)

VARIATIONS_PER_FAMILY = 4
ELEMENT_COUNT = len(FAMILIES) * VARIATIONS_PER_FAMILY

MIN_RENDER_PX = 16


@dataclass(frozen=True)
class Variation:
    """Per-element shape knobs.  Families ignore knobs they do not use."""

    aspect: float = 0.4
    curvature: float = 0.0
    serrations: int = 0
    tip_curl: float = 0.0


@dataclass(frozen=True)
class ElementSpec:
    id: int
    family: str
    variation: Variation

    @property
    def path(self) -> VectorPath:
        return element_path(self)


# Documented parameter ranges per family; element_path rejects values outside.
FAMILY_RANGES: dict[str, dict[str, tuple[float, float]]] = {
    "flame_tongue": {"aspect": (0.22, 0.60), "curvature": (0.0, 0.6), "serrations": (0, 0), "tip_curl": (-1.2, 1.2)},
    "serrated_flame": {"aspect": (0.30, 0.62), "curvature": (0.0, 0.5), "serrations": (2, 7), "tip_curl": (-1.0, 1.0)},
    "curl_spiral": {"aspect": (0.70, 1.05), "curvature": (1.1, 2.2), "serrations": (0, 0), "tip_curl": (-1.2, 1.2)},
    "teardrop_leaf": {"aspect": (0.45, 0.85), "curvature": (0.0, 0.45), "serrations": (0, 0), "tip_curl": (-1.0, 1.0)},
    "vine_s_curve": {"aspect": (0.28, 0.55), "curvature": (0.25, 0.65), "serrations": (0, 0), "tip_curl": (-1.2, 1.2)},
    "triple_flame": {"aspect": (0.40, 0.75), "curvature": (0.0, 0.5), "serrations": (0, 0), "tip_curl": (-1.0, 1.0)},
    "hook": {"aspect": (0.30, 0.60), "curvature": (2.4, 4.6), "serrations": (0, 0), "tip_curl": (-1.2, 1.2)},
    "lanceolate_leaf": {"aspect": (0.14, 0.42), "curvature": (0.0, 0.6), "serrations": (0, 0), "tip_curl": (-1.0, 1.0)},
}

# The canonical 32: four variation tuples (aspect, curvature, serrations,
# tip_curl) per family, in id order.
_VARIATION_TABLE: dict[str, tuple[tuple[float, float, int, float], ...]] = {
    "flame_tongue": (
        (0.40, 0.15, 0, 0.00),
        (0.30, 0.35, 0, 0.55),
        (0.52, 0.08, 0, -0.60),
        (0.34, 0.50, 0, 0.95),
    ),
    "serrated_flame": (
        (0.44, 0.10, 3, 0.30),
        (0.50, 0.20, 4, 0.00),
        (0.40, 0.30, 5, -0.45),
        (0.56, 0.05, 6, 0.60),
    ),
    "curl_spiral": (
        (1.00, 1.20, 0, 0.00),
        (0.85, 1.50, 0, 0.60),
        (1.00, 1.80, 0, -0.50),
        (0.78, 2.10, 0, 0.90),
    ),
    "teardrop_leaf": (
        (0.62, 0.05, 0, 0.00),
        (0.50, 0.25, 0, 0.45),
        (0.78, 0.12, 0, -0.35),
        (0.56, 0.40, 0, 0.70),
    ),
    "vine_s_curve": (
        (0.40, 0.35, 0, 0.00),
        (0.32, 0.50, 0, 0.70),
        (0.50, 0.28, 0, -0.55),
        (0.36, 0.60, 0, 1.00),
    ),
    "triple_flame": (
        (0.55, 0.10, 0, 0.00),
        (0.46, 0.28, 0, 0.50),
        (0.68, 0.05, 0, -0.40),
        (0.50, 0.45, 0, 0.80),
    ),
    "hook": (
        (0.42, 2.60, 0, 0.00),
        (0.34, 3.20, 0, 0.55),
        (0.50, 3.80, 0, -0.45),
        (0.38, 4.40, 0, 0.85),
    ),
    "lanceolate_leaf": (
        (0.26, 0.10, 0, 0.00),
        (0.18, 0.35, 0, 0.50),
        (0.36, 0.20, 0, -0.40),
        (0.22, 0.55, 0, 0.80),
    ),
}


def list_elements() -> list[ElementSpec]:
    """The canonical 32 element specs, ids 0..31 in order.  Pure."""
    out = []
    for fi, family in enumerate(FAMILIES):
        for vi, (aspect, curvature, serrations, tip_curl) in enumerate(_VARIATION_TABLE[family]):
            out.append(
                ElementSpec(
                    id=fi * VARIATIONS_PER_FAMILY + vi,
                    family=family,
                    variation=Variation(aspect, curvature, serrations, tip_curl),
                )
            )
    return out


def element_by_id(element_id: int) -> ElementSpec:
    if not 0 <= element_id < ELEMENT_COUNT:
        raise ValueError(f"element id must be in [0, {ELEMENT_COUNT}), got {element_id}")
    return list_elements()[element_id]


def _validate(spec: ElementSpec) -> None:
    if spec.family not in FAMILY_RANGES:
        raise ValueError(f"unknown family {spec.family!r}")
    ranges = FAMILY_RANGES[spec.family]
    v = spec.variation
    for name, value in (
        ("aspect", v.aspect),
        ("curvature", v.curvature),
        ("serrations", v.serrations),
        ("tip_curl", v.tip_curl),
    ):
        lo, hi = ranges[name]
        if not lo <= value <= hi:
            raise ValueError(
                f"{spec.family}.{name} = {value} outside documented range [{lo}, {hi}]"
            )


# ---------------------------------------------------------------------------
# family builders (raw coordinates; normalized to the unit square afterwards)


def _blade_right_flank(br, tip, lean, w, curl):
    """Shared right side of the blade families: one outward arc up to a
    waypoint, then the closing tip segment."""
    waypoint = np.array([w * 0.88 + lean * 0.55, 0.55])
    return [arc_segment(br, waypoint, -0.17), tip_segment(waypoint, tip, curl)]


def _flame_tongue(v: Variation):
    w = v.aspect / 2.0
    lean = v.curvature * 0.6
    tip = np.array([lean, 1.0])
    bl, br = np.array([-w, 0.0]), np.array([w, 0.0])
    mid_l = np.array([-w * 0.95 + lean * 0.3, 0.52])
    segs = [arc_segment(tip, mid_l, -0.15), arc_segment(mid_l, bl, 0.10)]
    segs.append(arc_segment(bl, br, -0.18))
    segs += _blade_right_flank(br, tip, lean, w, v.tip_curl)
    return segs


def _serrated_flame(v: Variation):
    w = v.aspect / 2.0
    lean = v.curvature * 0.5
    tip = np.array([lean, 1.0])
    bl, br = np.array([-w, 0.0]), np.array([w, 0.0])
    segs = wave_segments(tip, bl, v.serrations + 1, amplitude=0.065, first_side=-1.0)
    segs.append(arc_segment(bl, br, -0.15))
    segs += _blade_right_flank(br, tip, lean, w, v.tip_curl)
    return segs


def serrated_edge_slice(spec: ElementSpec) -> slice:
    """Index range of the serrated flank within the element's segments."""
    if spec.family != "serrated_flame":
        raise ValueError("only serrated_flame has a serrated edge")
    return slice(0, spec.variation.serrations + 1)


def _triple_flame(v: Variation):
    w = v.aspect / 2.0
    lean = v.curvature * 0.5
    tip = np.array([lean, 1.0])
    bl, br = np.array([-w, 0.0]), np.array([w, 0.0])
    cusp1 = np.array([-w * 0.18 + lean * 0.65, 0.70])
    cusp2 = np.array([-w * 0.58 + lean * 0.30, 0.38])
    segs = [
        arc_segment(tip, cusp1, -0.24),
        arc_segment(cusp1, cusp2, -0.24),
        arc_segment(cusp2, bl, -0.24),
        arc_segment(bl, br, -0.12),
    ]
    segs += _blade_right_flank(br, tip, lean, w, v.tip_curl)
    return segs


def _teardrop_leaf(v: Variation):
    w = v.aspect / 2.0
    lean = v.curvature * 0.4
    tip = np.array([lean, 1.0])
    bl, br = np.array([-w, 0.22]), np.array([w, 0.22])
    segs = [
        arc_segment(tip, bl, -0.20),
        arc_segment(bl, br, -0.55),  # deep round bottom
        arc_segment(br, np.array([w * 0.7 + lean * 0.5, 0.62]), -0.16),
        tip_segment(np.array([w * 0.7 + lean * 0.5, 0.62]), tip, v.tip_curl),
    ]
    return segs


def _lanceolate_leaf(v: Variation):
    lean = v.curvature * 0.5
    tip = np.array([lean, 1.0])
    bot = np.array([0.0, 0.0])
    waypoint = bot + 0.78 * (tip - bot) + np.array([v.aspect * 0.35, 0.0])
    segs = [
        arc_segment(tip, bot, -v.aspect),
        arc_segment(bot, waypoint, -v.aspect * 0.8),
        tip_segment(waypoint, tip, v.tip_curl),
    ]
    return segs


def _ribbon(spine: np.ndarray, half_widths: np.ndarray, tip_curl: float):
    """Closed outline of a tapering stroke along ``spine``.

    The stroke tip is spine[-1] (half width forced to 0 there); the path starts
    and ends at the tip so the tip_curl convention holds.
    """
    s = np.asarray(spine, dtype=np.float64)
    hw = np.asarray(half_widths, dtype=np.float64).copy()
    hw[-1] = 0.0
    tang = np.gradient(s, axis=0)
    norm = np.linalg.norm(tang, axis=1, keepdims=True)
    tang = tang / np.where(norm == 0, 1.0, norm)
    normal = np.stack([-tang[:, 1], tang[:, 0]], axis=1)
    side_a = s + normal * hw[:, None]
    side_b = s - normal * hw[:, None]
    tip = s[-1]

    down_a = np.concatenate([[tip], side_a[-2::-1]], axis=0)
    segs = catmull_rom_segments(down_a)
    segs.append(arc_segment(side_a[0], side_b[0], -0.5))  # rounded base cap
    segs += catmull_rom_segments(side_b[: len(s) - 1])
    segs.append(tip_segment(side_b[len(s) - 2], tip, tip_curl))
    return segs


def _curl_spiral(v: Variation):
    turns = v.curvature
    m = 26
    u = np.linspace(0.0, 1.0, m)
    theta = 2.0 * np.pi * turns * u
    r = 0.5 * (1.0 - 0.78 * u)
    spine = np.stack([v.aspect * r * np.cos(theta), r * np.sin(theta)], axis=1)
    hw = 0.095 * (1.0 - 0.70 * u) + 0.008
    return _ribbon(spine, hw, v.tip_curl)


def _vine_s_curve(v: Variation):
    m = 20
    u = np.linspace(0.0, 1.0, m)
    spine = np.stack([v.curvature * 0.55 * np.sin(2.0 * np.pi * u), u], axis=1)
    hw = v.aspect * 0.42 * np.sin(np.pi * u) ** 0.65 + 0.012
    return _ribbon(spine, hw, v.tip_curl)


def _hook(v: Variation):
    stem_top = 0.60
    radius = 0.21
    n_stem, n_arc = 7, 15
    stem = np.stack([np.zeros(n_stem), np.linspace(0.0, stem_top, n_stem, endpoint=False)], axis=1)
    a = np.pi - np.linspace(0.0, v.curvature, n_arc)
    hook = np.stack([radius + radius * np.cos(a), stem_top + radius * np.sin(a)], axis=1)
    spine = np.concatenate([stem, hook], axis=0)
    n = spine.shape[0]
    hw = (v.aspect * 0.30) * (1.0 - 0.85 * np.linspace(0.0, 1.0, n)) + 0.006
    return _ribbon(spine, hw, v.tip_curl)


_BUILDERS = {
    "flame_tongue": _flame_tongue,
    "serrated_flame": _serrated_flame,
    "curl_spiral": _curl_spiral,
    "teardrop_leaf": _teardrop_leaf,
    "vine_s_curve": _vine_s_curve,
    "triple_flame": _triple_flame,
    "hook": _hook,
    "lanceolate_leaf": _lanceolate_leaf,
}


@lru_cache(maxsize=256)
def _cached_path(family: str, aspect: float, curvature: float, serrations: int, tip_curl: float) -> VectorPath:
    raw = _BUILDERS[family](Variation(aspect, curvature, serrations, tip_curl))
    return normalized_to_unit(path_from_segments(raw))


def element_path(spec: ElementSpec) -> VectorPath:
    """Closed outline of an element in the unit square; rejects out-of-range
    variation parameters."""
    _validate(spec)
    v = spec.variation
    return _cached_path(spec.family, v.aspect, v.curvature, v.serrations, v.tip_curl)


def render_element(spec: ElementSpec, size_px: int) -> np.ndarray:
    """Rasterize an element onto a size_px square, 8-bit ink-on-white.

    Deterministic in (spec, size_px).  The unit path maps to the full canvas
    with y flipped so elements stand upright in row-major images.
    """
    if size_px < MIN_RENDER_PX:
        raise ValueError(f"size_px must be >= {MIN_RENDER_PX}, got {size_px}")
    path = element_path(spec)
    pts = flatten_closed(path, scale=float(size_px))
    px = np.empty_like(pts)
    px[:, 0] = pts[:, 0] * size_px
    px[:, 1] = (1.0 - pts[:, 1]) * size_px
    mask = fill_mask([px * SUPERSAMPLE], size_px * SUPERSAMPLE, size_px * SUPERSAMPLE)
    return coverage_to_ink(downsample_coverage(mask))


def export_debug(spec: ElementSpec, size_px: int, png_path=None, path_txt=None) -> None:
    """Optional debug dump: grayscale PNG of the render and/or a plain-text
    list of Bézier control points."""
    if png_path is not None:
        from .pngio import write_gray_png

        write_gray_png(png_path, render_element(spec, size_px))
    if path_txt is not None:
        path = element_path(spec)
        lines = [f"# element {spec.id} {spec.family} segments={len(path)}"]
        for i, seg in enumerate(path.segments):
            flat = " ".join(f"{c:.9f}" for c in seg.reshape(-1))
            lines.append(f"{i} {flat}")
        with open(path_txt, "w") as fh:
            fh.write("\n".join(lines) + "\n")
