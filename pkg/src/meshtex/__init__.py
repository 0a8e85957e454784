"""meshtex: semantic-guided texture generation for 3D meshes.

The package turns a triangle mesh into per-view UV maps and segmentation
images, synthesizes one texture image per canonical view with a style-based
generator conditioned on disentangled structure/style latent codes, and
evaluates the results with distribution and segmentation metrics.
"""

__version__ = "0.1.0"
