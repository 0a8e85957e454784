"""Triangle mesh container, OBJ I/O and normalization."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

import numpy as np


class MeshParseError(ValueError):
    """Raised for malformed OBJ records; message carries the line number."""


@dataclass(frozen=True)
class Mesh:
    """Triangle mesh with optional per-face semantic labels.

    vertices: (V, 3) float64 coordinates in model units.
    faces: (F, 3) int64 vertex indices.
    face_labels: optional (F,) int64 class index per face.
    """

    vertices: np.ndarray
    faces: np.ndarray
    face_labels: np.ndarray | None = None

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.vertices, dtype=np.float64))
        f = np.ascontiguousarray(np.asarray(self.faces, dtype=np.int64))
        if v.ndim != 2 or v.shape[1] != 3:
            raise ValueError(f"vertices must be (V, 3), got {v.shape}")
        if f.ndim != 2 or f.shape[1] != 3:
            raise ValueError(f"faces must be (F, 3), got {f.shape}")
        if f.size and (f.min() < 0 or f.max() >= len(v)):
            raise ValueError(
                f"face index out of range: valid range is [0, {len(v)}), "
                f"offending face #{self._first_bad_face(f, len(v))}"
            )
        if f.size:
            same = (f[:, 0] == f[:, 1]) | (f[:, 1] == f[:, 2]) | (f[:, 0] == f[:, 2])
            if same.any():
                raise ValueError(f"face #{int(np.argmax(same))} repeats a vertex index")
        labels = self.face_labels
        if labels is not None:
            labels = np.ascontiguousarray(np.asarray(labels, dtype=np.int64))
            if labels.shape != (len(f),):
                raise ValueError(
                    f"face_labels length {labels.shape} does not match face count {len(f)}"
                )
            if labels.size and labels.min() < 0:
                raise ValueError("face_labels must be non-negative class indices")
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "faces", f)
        object.__setattr__(self, "face_labels", labels)

    @staticmethod
    def _first_bad_face(faces: np.ndarray, num_vertices: int) -> int:
        bad = ((faces < 0) | (faces >= num_vertices)).any(axis=1)
        return int(np.argmax(bad))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def with_labels(self, labels: np.ndarray) -> "Mesh":
        return replace(self, face_labels=labels)

    def face_normals(self) -> np.ndarray:
        """Unit face normals, (F, 3). Raises on zero-area faces."""
        a, b, c = (self.vertices[self.faces[:, k]] for k in range(3))
        n = np.cross(b - a, c - a)
        length = np.linalg.norm(n, axis=1)
        if (length < 1e-12).any():
            raise ValueError(f"zero-area face #{int(np.argmax(length < 1e-12))}")
        return n / length[:, None]

    def face_centroids(self) -> np.ndarray:
        return self.vertices[self.faces].mean(axis=1)


def _parse_face_vertex(token: str, lineno: int, path: str) -> int:
    # OBJ face tokens are "v", "v/vt", "v//vn" or "v/vt/vn"; only v is kept.
    part = token.split("/")[0]
    try:
        return int(part)
    except ValueError:
        raise MeshParseError(f"{path}:{lineno}: malformed face vertex {token!r}") from None


def load_mesh(path: str | os.PathLike) -> Mesh:
    """Load a triangle mesh from an OBJ file.

    Faces with more than three vertices are fan-triangulated. Vertex order is
    preserved from the file. Raises MeshParseError for malformed records and
    ValueError when a face references a vertex that does not exist.
    """
    path = os.fspath(path)
    vertices: list[list[float]] = []
    faces: list[list[int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            tag = fields[0]
            if tag == "v":
                if len(fields) < 4:
                    raise MeshParseError(f"{path}:{lineno}: vertex record needs 3 coordinates")
                try:
                    vertices.append([float(x) for x in fields[1:4]])
                except ValueError:
                    raise MeshParseError(f"{path}:{lineno}: malformed vertex coordinate") from None
            elif tag == "f":
                if len(fields) < 4:
                    raise MeshParseError(f"{path}:{lineno}: face record needs >= 3 vertices")
                idx = [_parse_face_vertex(tok, lineno, path) for tok in fields[1:]]
                # OBJ indices are 1-based; negative indices are relative to the
                # vertices parsed so far.
                resolved = [i - 1 if i > 0 else len(vertices) + i for i in idx]
                for k in range(1, len(resolved) - 1):
                    faces.append([resolved[0], resolved[k], resolved[k + 1]])
            # vt/vn/usemtl/o/g/s records carry no geometry we need here.
    return Mesh(np.array(vertices, dtype=np.float64).reshape(-1, 3),
                np.array(faces, dtype=np.int64).reshape(-1, 3))


def load_face_labels(path: str | os.PathLike, num_faces: int | None = None) -> np.ndarray:
    """Read one integer class label per line; optionally check the count."""
    path = os.fspath(path)
    with open(path, "r", encoding="utf-8") as fh:
        labels = [int(line.strip()) for line in fh if line.strip()]
    out = np.asarray(labels, dtype=np.int64)
    if num_faces is not None and len(out) != num_faces:
        raise ValueError(f"{path}: {len(out)} labels for {num_faces} faces")
    return out


def save_obj(mesh: Mesh, path: str | os.PathLike, labels_path: str | os.PathLike | None = None) -> None:
    """Write a bare OBJ (v/f records); labels go to a sidecar file if given."""
    path = os.fspath(path)
    with open(path, "w", encoding="utf-8") as fh:
        for v in mesh.vertices:
            fh.write(f"v {v[0]:.9g} {v[1]:.9g} {v[2]:.9g}\n")
        for f in mesh.faces:
            fh.write(f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}\n")
    if labels_path is not None:
        if mesh.face_labels is None:
            raise ValueError("mesh has no face labels to save")
        with open(os.fspath(labels_path), "w", encoding="utf-8") as fh:
            for label in mesh.face_labels:
                fh.write(f"{int(label)}\n")


def normalize_mesh(mesh: Mesh) -> Mesh:
    """Center the bounding box at the origin and scale its longest side to 2.

    Idempotent on already-normalized meshes; topology and vertex order are
    unchanged. Raises when all vertices coincide (no scale is defined).
    """
    if mesh.num_vertices < 1:
        raise ValueError("cannot normalize an empty mesh")
    lo = mesh.vertices.min(axis=0)
    hi = mesh.vertices.max(axis=0)
    extent = float((hi - lo).max())
    if extent < 1e-12:
        raise ValueError("degenerate mesh: all vertices identical, scale undefined")
    center = (hi + lo) / 2.0
    vertices = (mesh.vertices - center) * (2.0 / extent)
    return replace(mesh, vertices=vertices)
