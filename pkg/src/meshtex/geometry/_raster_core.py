"""Depth-buffered triangle rasterization over a square pixel grid.

Coordinates live in UV space: u is the horizontal axis in [0, 1], v the
vertical axis in [0, 1] with v = 1 at the TOP of the image (row 0). Pixel
(r, c) has its center at u = (c + 0.5) / res, v = 1 - (r + 0.5) / res.
"""

from __future__ import annotations

import numpy as np

# Coverage uses inclusive edge tests with a tiny slack so pixel centers that
# fall exactly on a shared edge are claimed by both triangles (the depth test
# keeps the first, which makes the result deterministic in face order).
_EDGE_EPS = 1e-12


def rasterize_triangles(
    uv: np.ndarray,
    depth: np.ndarray,
    faces: np.ndarray,
    resolution: int,
):
    """Rasterize triangles given per-vertex UVs and depths.

    Args:
        uv: (V, 2) vertex positions in UV space.
        depth: (V,) per-vertex depth, smaller is nearer.
        faces: (F, 3) vertex indices.
        resolution: output grid side length.

    Returns:
        face_index: (res, res) int32, -1 where uncovered.
        bary: (res, res, 3) float64 barycentric weights of the covering face.
        zbuf: (res, res) float64 depth of the covering face (+inf uncovered).
    """
    res = int(resolution)
    face_index = np.full((res, res), -1, dtype=np.int32)
    bary = np.zeros((res, res, 3), dtype=np.float64)
    zbuf = np.full((res, res), np.inf, dtype=np.float64)

    cols = (np.arange(res) + 0.5) / res          # u at pixel centers
    rows = 1.0 - (np.arange(res) + 0.5) / res    # v at pixel centers (top row first)

    tri_uv = uv[faces]        # (F, 3, 2)
    tri_depth = depth[faces]  # (F, 3)

    for fi in range(len(faces)):
        (ax, ay), (bx, by), (cx, cy) = tri_uv[fi]
        area = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if abs(area) < 1e-15:
            continue  # edge-on in this view; contributes no pixels

        lo_u = min(ax, bx, cx)
        hi_u = max(ax, bx, cx)
        lo_v = min(ay, by, cy)
        hi_v = max(ay, by, cy)
        c0 = max(0, int(np.floor(lo_u * res - 0.5)))
        c1 = min(res - 1, int(np.ceil(hi_u * res - 0.5)))
        r0 = max(0, int(np.floor((1.0 - hi_v) * res - 0.5)))
        r1 = min(res - 1, int(np.ceil((1.0 - lo_v) * res - 0.5)))
        if c0 > c1 or r0 > r1:
            continue

        pu = cols[c0:c1 + 1][None, :]   # (1, W)
        pv = rows[r0:r1 + 1][:, None]   # (H, 1)

        # Edge functions paired with the opposite vertex, normalized by the
        # signed area so they are barycentric weights directly.
        w_a = ((bx - pu) * (cy - pv) - (by - pv) * (cx - pu)) / area
        w_b = ((cx - pu) * (ay - pv) - (cy - pv) * (ax - pu)) / area
        w_c = ((ax - pu) * (by - pv) - (ay - pv) * (bx - pu)) / area
        inside = (w_a >= -_EDGE_EPS) & (w_b >= -_EDGE_EPS) & (w_c >= -_EDGE_EPS)
        if not inside.any():
            continue

        z = w_a * tri_depth[fi, 0] + w_b * tri_depth[fi, 1] + w_c * tri_depth[fi, 2]
        target = zbuf[r0:r1 + 1, c0:c1 + 1]
        win = inside & (z < target)
        if not win.any():
            continue

        target[win] = z[win]
        face_index[r0:r1 + 1, c0:c1 + 1][win] = fi
        block = bary[r0:r1 + 1, c0:c1 + 1]
        block[win, 0] = w_a[win]
        block[win, 1] = w_b[win]
        block[win, 2] = w_c[win]

    return face_index, bary, zbuf
