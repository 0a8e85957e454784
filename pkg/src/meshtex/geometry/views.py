"""Canonical orthographic viewpoints."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ViewSpec:
    """Orthographic view: `forward` points from the camera into the scene.

    `up` is the image's vertical axis; the horizontal axis is forward x up.
    """

    name: str
    forward: tuple[float, float, float]
    up: tuple[float, float, float]

    def __post_init__(self):
        f = np.asarray(self.forward, dtype=np.float64)
        u = np.asarray(self.up, dtype=np.float64)
        if abs(np.linalg.norm(f) - 1.0) > 1e-9 or abs(np.linalg.norm(u) - 1.0) > 1e-9:
            raise ValueError(f"view {self.name!r}: forward and up must be unit vectors")
        if abs(float(f @ u)) > 1e-9:
            raise ValueError(f"view {self.name!r}: forward and up must be orthogonal")

    @property
    def forward_vec(self) -> np.ndarray:
        return np.asarray(self.forward, dtype=np.float64)

    @property
    def up_vec(self) -> np.ndarray:
        return np.asarray(self.up, dtype=np.float64)

    @property
    def right_vec(self) -> np.ndarray:
        return np.cross(self.forward_vec, self.up_vec)


# Camera positions are implied by -forward: the front camera sits at +z and
# looks along -z, the top camera sits at +y and looks down, etc.
CAR_VIEWS: tuple[ViewSpec, ...] = (
    ViewSpec("front", (0.0, 0.0, -1.0), (0.0, 1.0, 0.0)),
    ViewSpec("back", (0.0, 0.0, 1.0), (0.0, 1.0, 0.0)),
    ViewSpec("left", (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)),
    ViewSpec("right", (-1.0, 0.0, 0.0), (0.0, 1.0, 0.0)),
    ViewSpec("top", (0.0, -1.0, 0.0), (0.0, 0.0, -1.0)),
    ViewSpec("bottom", (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
)

FACE_VIEWS: tuple[ViewSpec, ...] = (ViewSpec("front", (0.0, 0.0, -1.0), (0.0, 1.0, 0.0)),)

_PRESETS = {"car6": CAR_VIEWS, "face1": FACE_VIEWS}


def view_preset(name: str) -> tuple[ViewSpec, ...]:
    """Look up a named view set ("car6" or "face1")."""
    try:
        return _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown view preset {name!r}; known: {sorted(_PRESETS)}") from None
