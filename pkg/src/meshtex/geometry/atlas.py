"""Canonical-view projection UV atlas: per-view UVs plus a face-to-view map."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._raster_core import rasterize_triangles
from .mesh import Mesh
from .views import ViewSpec

# Relative slack when deciding whether another surface is strictly nearer
# than a face centroid (guards against self-occlusion by the face itself).
_OCCLUSION_EPS = 1e-6


@dataclass(frozen=True)
class UVAtlas:
    """Per-view texture coordinates and the view assignment of every face.

    per_view_uv: list of (V, 2) arrays, one per view, coordinates in [0, 1].
    face_view: (F,) int64, index into the view list.
    resolution: side length of the texture images this atlas addresses.
    """

    per_view_uv: tuple[np.ndarray, ...]
    face_view: np.ndarray
    resolution: int

    def __post_init__(self):
        object.__setattr__(self, "per_view_uv", tuple(np.asarray(a, dtype=np.float64) for a in self.per_view_uv))
        object.__setattr__(self, "face_view", np.asarray(self.face_view, dtype=np.int64))
        if self.face_view.size and (self.face_view.min() < 0 or self.face_view.max() >= self.num_views):
            raise ValueError("face_view entries must index into per_view_uv")

    @property
    def num_views(self) -> int:
        return len(self.per_view_uv)


def project_view(mesh: Mesh, view: ViewSpec) -> tuple[np.ndarray, np.ndarray]:
    """Orthographically project all vertices into a view.

    Returns (uv, depth): uv is (V, 2) with [-1, 1]^2 in-plane coordinates
    affinely mapped to [0, 1]^2; depth is the signed distance along
    view.forward (smaller = nearer to the camera).
    """
    v = mesh.vertices
    u = (v @ view.right_vec + 1.0) / 2.0
    w = (v @ view.up_vec + 1.0) / 2.0
    depth = v @ view.forward_vec
    return np.stack([u, w], axis=1), depth


def _view_depth_buffers(mesh: Mesh, views: list[ViewSpec], resolution: int):
    """Nearest-surface depth per pixel for every view, all faces considered."""
    buffers = []
    projections = []
    for view in views:
        uv, depth = project_view(mesh, view)
        _, _, zbuf = rasterize_triangles(uv, depth, mesh.faces, resolution)
        buffers.append(zbuf)
        projections.append((uv, depth))
    return buffers, projections


def _centroid_occluded(uv, depth, faces, zbuf, resolution) -> np.ndarray:
    """For each face, is some other surface strictly nearer at its centroid pixel?"""
    tri_uv = uv[faces]
    tri_depth = depth[faces]
    c_uv = tri_uv.mean(axis=1)
    c_depth = tri_depth.mean(axis=1)
    cols = np.clip(np.floor(c_uv[:, 0] * resolution).astype(int), 0, resolution - 1)
    rows = np.clip(np.floor((1.0 - c_uv[:, 1]) * resolution).astype(int), 0, resolution - 1)
    nearest = zbuf[rows, cols]
    return nearest < c_depth - _OCCLUSION_EPS


def assign_faces(mesh: Mesh, views: list[ViewSpec], resolution: int = 128) -> np.ndarray:
    """Assign each face to the view it is most directly seen from.

    Primary rule: argmax over views of dot(face_normal, -view.forward), ties
    broken by the lowest view index. Faces whose centroid is occluded in that
    view (another face strictly nearer at the centroid's pixel, tested by
    rasterization at `resolution`) move to the best non-occluded view when one
    exists; otherwise they keep the argmax view.
    """
    normals = mesh.face_normals()  # raises on zero-area faces
    toward = np.stack([-v.forward_vec for v in views], axis=0)  # (N, 3)
    dots = normals @ toward.T  # (F, N)
    primary = np.argmax(dots, axis=1)  # first max wins ties

    zbufs, projections = _view_depth_buffers(mesh, list(views), resolution)
    occluded = np.stack(
        [
            _centroid_occluded(uv, depth, mesh.faces, zbuf, resolution)
            for (uv, depth), zbuf in zip(projections, zbufs)
        ],
        axis=1,
    )  # (F, N)

    assignment = primary.copy()
    needs_move = occluded[np.arange(len(primary)), primary]
    for fi in np.nonzero(needs_move)[0]:
        visible = np.nonzero(~occluded[fi])[0]
        if visible.size:
            assignment[fi] = visible[np.argmax(dots[fi, visible])]
    return assignment


def build_uv_atlas(mesh: Mesh, views: list[ViewSpec], resolution: int) -> UVAtlas:
    """Project every view and assign faces; `resolution` must be a power of two >= 16."""
    if resolution < 16 or resolution & (resolution - 1):
        raise ValueError(f"resolution must be a power of two >= 16, got {resolution}")
    per_view_uv = tuple(project_view(mesh, view)[0] for view in views)
    face_view = assign_faces(mesh, views, resolution)
    return UVAtlas(per_view_uv, face_view, resolution)
