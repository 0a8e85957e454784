"""Procedural mesh primitives used by tests and the synthetic dataset."""

from __future__ import annotations

import numpy as np

from .mesh import Mesh

# Faces of an axis-aligned box over corner bits (x, y, z), two triangles per
# side, outward-facing (counter-clockwise seen from outside).
_BOX_CORNERS = np.array(
    [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
)
_BOX_FACES = np.array(
    [
        [0, 2, 3], [0, 3, 1],  # z = min (back)
        [4, 5, 7], [4, 7, 6],  # z = max (front)
        [0, 1, 5], [0, 5, 4],  # y = min (bottom)
        [2, 6, 7], [2, 7, 3],  # y = max (top)
        [0, 4, 6], [0, 6, 2],  # x = min (left)
        [1, 3, 7], [1, 7, 5],  # x = max (right)
    ],
    dtype=np.int64,
)


def box_mesh(min_corner, max_corner, label: int | None = None) -> Mesh:
    """Axis-aligned box with 8 vertices and 12 triangles."""
    lo = np.asarray(min_corner, dtype=np.float64)
    hi = np.asarray(max_corner, dtype=np.float64)
    vertices = lo + _BOX_CORNERS * (hi - lo)
    labels = None if label is None else np.full(len(_BOX_FACES), label, dtype=np.int64)
    return Mesh(vertices, _BOX_FACES.copy(), labels)


def unit_cube(label: int | None = None) -> Mesh:
    """Cube spanning [-1, 1]^3 (already normalized)."""
    return box_mesh((-1.0, -1.0, -1.0), (1.0, 1.0, 1.0), label=label)


def merge_meshes(meshes: list[Mesh]) -> Mesh:
    """Concatenate meshes, offsetting face indices; labels merge when all present."""
    if not meshes:
        raise ValueError("need at least one mesh to merge")
    vertices, faces, labels = [], [], []
    offset = 0
    has_labels = all(m.face_labels is not None for m in meshes)
    for m in meshes:
        vertices.append(m.vertices)
        faces.append(m.faces + offset)
        if has_labels:
            labels.append(m.face_labels)
        offset += m.num_vertices
    return Mesh(
        np.concatenate(vertices),
        np.concatenate(faces),
        np.concatenate(labels) if has_labels else None,
    )
