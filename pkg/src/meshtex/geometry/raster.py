"""Segmentation rasterization, silhouettes, and the evaluation renderer."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._raster_core import rasterize_triangles
from .atlas import UVAtlas, project_view
from .mesh import Mesh
from .views import ViewSpec

BACKGROUND_CLASS = 0


@dataclass(frozen=True)
class SegmentationMapSet:
    """N integer label images aligned with a UV atlas; class 0 is background."""

    maps: np.ndarray  # (N, res, res) integer class indices
    num_classes: int

    def __post_init__(self):
        maps = np.ascontiguousarray(np.asarray(self.maps, dtype=np.int64))
        if maps.ndim != 3 or maps.shape[1] != maps.shape[2]:
            raise ValueError(f"maps must be (N, res, res), got {maps.shape}")
        if self.num_classes < 2:
            raise ValueError("num_classes must be >= 2 (background + foreground)")
        if maps.size and (maps.min() < 0 or maps.max() >= self.num_classes):
            raise ValueError(f"label values must be in [0, {self.num_classes})")
        object.__setattr__(self, "maps", maps)

    @property
    def num_views(self) -> int:
        return self.maps.shape[0]

    @property
    def resolution(self) -> int:
        return self.maps.shape[1]


@dataclass(frozen=True)
class TextureMapSet:
    """N RGB texture images in [-1, 1], one per atlas view."""

    maps: np.ndarray  # (N, res, res, 3) float32

    def __post_init__(self):
        maps = np.ascontiguousarray(np.asarray(self.maps, dtype=np.float32))
        if maps.ndim != 4 or maps.shape[3] != 3 or maps.shape[1] != maps.shape[2]:
            raise ValueError(f"maps must be (N, res, res, 3), got {maps.shape}")
        if maps.size and (maps.min() < -1.0 - 1e-6 or maps.max() > 1.0 + 1e-6):
            raise ValueError("texture values must lie within [-1, 1]")
        object.__setattr__(self, "maps", maps)

    @property
    def num_views(self) -> int:
        return self.maps.shape[0]

    @property
    def resolution(self) -> int:
        return self.maps.shape[1]


def rasterize_segmentation(
    mesh: Mesh,
    atlas: UVAtlas,
    views: list[ViewSpec],
    num_classes: int | None = None,
) -> SegmentationMapSet:
    """Depth-buffered label images, one per view, from per-face labels.

    Only faces assigned to a view are drawn into that view's image; uncovered
    pixels stay at the background class. `num_classes` defaults to
    max(label) + 1 (at least 2).
    """
    if mesh.face_labels is None:
        raise ValueError("mesh has no face_labels; segmentation needs per-face classes")
    if len(views) != atlas.num_views:
        raise ValueError(f"{len(views)} views for an atlas with {atlas.num_views}")
    res = atlas.resolution
    maps = np.zeros((atlas.num_views, res, res), dtype=np.int64)
    for vi, view in enumerate(views):
        sel = np.nonzero(atlas.face_view == vi)[0]
        if sel.size == 0:
            continue
        uv = atlas.per_view_uv[vi]
        _, depth = project_view(mesh, view)
        face_index, _, _ = rasterize_triangles(uv, depth, mesh.faces[sel], res)
        covered = face_index >= 0
        maps[vi][covered] = mesh.face_labels[sel[face_index[covered]]]
    if num_classes is None:
        num_classes = max(2, int(mesh.face_labels.max()) + 1 if mesh.face_labels.size else 2)
    return SegmentationMapSet(maps, num_classes=num_classes)


def make_silhouette(seg: SegmentationMapSet) -> SegmentationMapSet:
    """Collapse all foreground classes to 1; idempotent."""
    return SegmentationMapSet((seg.maps > 0).astype(np.int64), num_classes=2)


def render_view(
    mesh: Mesh,
    atlas: UVAtlas,
    textures: TextureMapSet,
    camera: ViewSpec,
    size: int,
) -> np.ndarray:
    """Render the textured mesh from `camera` at `size`x`size`.

    Depth-buffered orthographic rasterization; each covered pixel samples its
    face's assigned-view texture at the barycentrically interpolated UV with
    nearest-texel lookup. Background is white. Returns (size, size, 3) float32
    in [-1, 1].
    """
    if textures.num_views != atlas.num_views:
        raise ValueError(
            f"texture set has {textures.num_views} views, atlas has {atlas.num_views}"
        )
    image = np.ones((size, size, 3), dtype=np.float32)
    if mesh.num_faces == 0:
        return image
    cam_uv, cam_depth = project_view(mesh, camera)
    face_index, bary, _ = rasterize_triangles(cam_uv, cam_depth, mesh.faces, size)
    covered = face_index >= 0
    if not covered.any():
        return image

    fi = face_index[covered]
    weights = bary[covered]  # (P, 3)
    views_of_face = atlas.face_view[fi]
    tex_res = textures.resolution
    pixels = np.zeros((len(fi), 3), dtype=np.float32)
    for vi in np.unique(views_of_face):
        sel = views_of_face == vi
        verts = mesh.faces[fi[sel]]                       # (P_v, 3)
        uv = atlas.per_view_uv[vi][verts]                 # (P_v, 3, 2)
        hit = np.einsum("pk,pkc->pc", weights[sel], uv)   # interpolated UV
        col = np.clip(np.floor(hit[:, 0] * tex_res), 0, tex_res - 1).astype(int)
        row = np.clip(np.floor((1.0 - hit[:, 1]) * tex_res), 0, tex_res - 1).astype(int)
        pixels[sel] = textures.maps[vi][row, col]
    image[covered] = pixels
    return image
