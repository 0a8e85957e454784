from .mesh import Mesh, MeshParseError, load_mesh, load_face_labels, normalize_mesh, save_obj
from .views import ViewSpec, CAR_VIEWS, FACE_VIEWS, view_preset
from .atlas import UVAtlas, project_view, assign_faces, build_uv_atlas
from .raster import (
    SegmentationMapSet,
    TextureMapSet,
    make_silhouette,
    rasterize_segmentation,
    render_view,
)
from .export import export_textured_mesh
from .primitives import box_mesh, merge_meshes, unit_cube

__all__ = [
    "Mesh",
    "MeshParseError",
    "load_mesh",
    "load_face_labels",
    "normalize_mesh",
    "save_obj",
    "ViewSpec",
    "CAR_VIEWS",
    "FACE_VIEWS",
    "view_preset",
    "UVAtlas",
    "project_view",
    "assign_faces",
    "build_uv_atlas",
    "SegmentationMapSet",
    "TextureMapSet",
    "make_silhouette",
    "rasterize_segmentation",
    "render_view",
    "export_textured_mesh",
    "box_mesh",
    "merge_meshes",
    "unit_cube",
]
