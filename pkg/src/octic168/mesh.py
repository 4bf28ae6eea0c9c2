"""Isosurface mesh export of the affine w = 1 slice.

Floating point by design: the mesh is a visual artifact and nothing in
the certification depends on it.  Output is deterministic for a fixed
grid configuration.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from skimage import measure

from .mpoly import MPoly


@dataclass(frozen=True)
class MeshData:
    vertices: np.ndarray  # (n, 3) float
    faces: np.ndarray     # (m, 3) int

    @property
    def vertex_count(self) -> int:
        return int(len(self.vertices))

    @property
    def face_count(self) -> int:
        return int(len(self.faces))


def _float_terms(surface: MPoly):
    terms = []
    for exps, coeff in surface.sorted_terms():
        terms.append((exps[0], exps[1], exps[2], float(coeff)))
    return terms


def sample_grid(surface: MPoly, resolution: int, bounds: float, jobs: int = 1) -> np.ndarray:
    """Evaluate F(x, y, z, 1) on a cubic grid of shape (n, n, n)."""
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    if bounds <= 0:
        raise ValueError("bounds must be positive")
    f3 = surface.dehomogenize(3)
    terms = _float_terms(f3)
    axis = np.linspace(-bounds, bounds, resolution)
    ygrid, zgrid = np.meshgrid(axis, axis, indexing="ij")

    def slab(i):
        x = axis[i]
        acc = np.zeros_like(ygrid)
        for ex, ey, ez, c in terms:
            acc += c * (x ** ex) * (ygrid ** ey) * (zgrid ** ez)
        return acc

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            slabs = list(pool.map(slab, range(resolution)))
    else:
        slabs = [slab(i) for i in range(resolution)]
    return np.stack(slabs, axis=0)


def extract_mesh(values: np.ndarray, resolution: int, bounds: float) -> MeshData:
    spacing = 2 * bounds / (resolution - 1)
    verts, faces, _, _ = measure.marching_cubes(values, level=0.0, spacing=(spacing,) * 3)
    verts = verts - bounds
    verts, faces = _drop_degenerate(verts, faces)
    return MeshData(verts, faces)


def _drop_degenerate(verts, faces, tol: float = 1e-12):
    a = verts[faces[:, 0]]
    b = verts[faces[:, 1]]
    c = verts[faces[:, 2]]
    areas = 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)
    return verts, faces[areas > tol]


def render_surface(surface: MPoly, resolution: int, bounds: float, jobs: int = 1) -> MeshData:
    values = sample_grid(surface, resolution, bounds, jobs)
    return extract_mesh(values, resolution, bounds)


def mesh_to_obj(mesh: MeshData) -> str:
    lines = ["# octic surface isosurface (affine slice w = 1)"]
    for v in mesh.vertices:
        lines.append(f"v {v[0]:.9g} {v[1]:.9g} {v[2]:.9g}")
    for f in mesh.faces:
        lines.append(f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}")
    lines.append("")
    return "\n".join(lines)
