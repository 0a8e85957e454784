"""Textured-mesh export: OBJ + MTL + a packed PNG atlas."""

from __future__ import annotations

import math
import os
from pathlib import Path

import numpy as np
from PIL import Image

from .atlas import UVAtlas
from .mesh import Mesh
from .raster import TextureMapSet


def texture_to_uint8(image: np.ndarray) -> np.ndarray:
    """Map a [-1, 1] float image to uint8 [0, 255] (clipping first)."""
    x = np.clip(np.asarray(image, dtype=np.float64), -1.0, 1.0)
    return np.round((x + 1.0) / 2.0 * 255.0).astype(np.uint8)


def uint8_to_texture(image: np.ndarray) -> np.ndarray:
    """Inverse of texture_to_uint8 up to quantization."""
    return (np.asarray(image, dtype=np.float32) / 255.0) * 2.0 - 1.0


def atlas_tile_grid(num_views: int) -> tuple[int, int]:
    """(cols, rows) of the packed tile grid holding one tile per view."""
    cols = int(math.ceil(math.sqrt(num_views)))
    rows = int(math.ceil(num_views / cols))
    return cols, rows


def pack_texture_tiles(textures: TextureMapSet) -> np.ndarray:
    """Pack per-view textures into one image; tile i sits at (i % cols, i // cols)."""
    cols, rows = atlas_tile_grid(textures.num_views)
    res = textures.resolution
    sheet = np.ones((rows * res, cols * res, 3), dtype=np.float32)
    for i in range(textures.num_views):
        r, c = divmod(i, cols)
        sheet[r * res:(r + 1) * res, c * res:(c + 1) * res] = textures.maps[i]
    return sheet


def _tile_uv(u: float, v: float, view: int, cols: int, rows: int) -> tuple[float, float]:
    # OBJ vt has its origin at the bottom-left of the image; our tile rows
    # count from the top, so row r occupies vt range [(rows-r-1)/rows, ...).
    r, c = divmod(view, cols)
    return (c + u) / cols, (rows - r - 1 + v) / rows


def export_textured_mesh(
    mesh: Mesh,
    atlas: UVAtlas,
    textures: TextureMapSet,
    out_dir: str | os.PathLike,
    basename: str = "model",
) -> dict[str, Path]:
    """Write OBJ + MTL + packed PNG; returns the written paths.

    Every face references the UV set of its assigned view, remapped into the
    packed atlas image. The result loads in standard OBJ viewers.
    """
    if textures.num_views != atlas.num_views:
        raise ValueError(
            f"texture set has {textures.num_views} views, atlas expects {atlas.num_views}"
        )
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    obj_path = out / f"{basename}.obj"
    mtl_path = out / f"{basename}.mtl"
    png_path = out / f"{basename}.png"

    sheet = texture_to_uint8(pack_texture_tiles(textures))
    try:
        Image.fromarray(sheet).save(png_path)
    except OSError as exc:
        raise OSError(f"failed to write texture atlas {png_path}: {exc}") from exc

    cols, rows = atlas_tile_grid(atlas.num_views)
    vt_index: dict[tuple[int, int], int] = {}  # (vertex, view) -> 1-based vt id
    vt_lines: list[str] = []
    face_lines: list[str] = []
    for fi, face in enumerate(mesh.faces):
        view = int(atlas.face_view[fi])
        ids = []
        for vert in face:
            key = (int(vert), view)
            if key not in vt_index:
                u, v = atlas.per_view_uv[view][vert]
                tu, tv = _tile_uv(float(u), float(v), view, cols, rows)
                vt_lines.append(f"vt {tu:.9g} {tv:.9g}")
                vt_index[key] = len(vt_lines)
            ids.append(f"{int(vert) + 1}/{vt_index[key]}")
        face_lines.append("f " + " ".join(ids))

    try:
        with open(obj_path, "w", encoding="utf-8") as fh:
            fh.write(f"mtllib {mtl_path.name}\n")
            fh.write(f"o {basename}\n")
            for v in mesh.vertices:
                fh.write(f"v {v[0]:.9g} {v[1]:.9g} {v[2]:.9g}\n")
            fh.write("\n".join(vt_lines) + "\n")
            fh.write("usemtl textured\n")
            fh.write("\n".join(face_lines) + "\n")
        with open(mtl_path, "w", encoding="utf-8") as fh:
            fh.write("newmtl textured\n")
            fh.write("Ka 1 1 1\nKd 1 1 1\nKs 0 0 0\nd 1\nillum 1\n")
            fh.write(f"map_Kd {png_path.name}\n")
    except OSError as exc:
        raise OSError(f"failed to write mesh files in {out}: {exc}") from exc

    return {"obj": obj_path, "mtl": mtl_path, "png": png_path}


def sample_packed_atlas(png: np.ndarray, u: float, v: float) -> np.ndarray:
    """Nearest-texel lookup in a packed atlas image using OBJ vt coordinates."""
    h, w = png.shape[:2]
    col = min(max(int(np.floor(u * w)), 0), w - 1)
    row = min(max(int(np.floor((1.0 - v) * h)), 0), h - 1)
    return png[row, col]
