"""Conforming simplicial meshes with longest-edge bisection.

A :class:`Mesh` stores vertex coordinates and element connectivity as numpy
arrays; all derived data (volumes, gradients of barycentric coordinates,
face adjacency) is computed lazily and cached.  Meshes are never modified in
place: :func:`refine` and :func:`uniform_refine` return new meshes which carry
the parent/child maps needed to transfer discrete fields.

Example
-------

.. code-block:: python

    from ocp_afem.mesh import build_lshape, refine

    m = build_lshape(2)
    m2 = refine(m, [0, 5, 7])
    assert m2.conformity_check()
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from math import factorial
from pathlib import Path

import numpy as np


class MeshError(ValueError):
    """Raised for invalid meshes or refinement failures."""


@dataclass(frozen=True)
class Faces:
    """Arrays describing a set of (d-1)-faces.

    ``elements`` has two columns (T+, T-) for interior faces, T+ being the
    lower element index, and one column for boundary faces.  ``normals`` are
    unit vectors pointing out of the first adjacent element.
    """

    vertices: np.ndarray
    elements: np.ndarray
    normals: np.ndarray
    measures: np.ndarray

    def __len__(self):
        return len(self.vertices)


class Mesh:
    """Conforming simplicial mesh in two or three dimensions.

    Parameters
    ----------
    vertices : array_like, shape (nv, d)
    elements : array_like, shape (ne, d + 1)
        Vertex indices; negatively oriented elements are reoriented.
    generation : array_like, optional
        Bisection depth of each element.
    """

    def __init__(self, vertices, elements, generation=None, *, parent=None,
                 vertex_parents=None, vertex_batches=None,
                 boundary_measure=None):
        self.vertices = np.ascontiguousarray(vertices, dtype=float)
        elements = np.array(elements, dtype=np.int64)
        if self.vertices.ndim != 2 or self.vertices.shape[1] not in (2, 3):
            raise MeshError("vertices must have shape (nv, 2) or (nv, 3)")
        self.dim = self.vertices.shape[1]
        if elements.ndim != 2 or elements.shape[1] != self.dim + 1:
            raise MeshError(f"elements must have shape (ne, {self.dim + 1})")
        if elements.size and (elements.min() < 0
                              or elements.max() >= len(self.vertices)):
            raise MeshError("element vertex index out of range")

        vol = _signed_volumes(self.vertices, elements)
        flip = vol < 0
        if flip.any():
            elements[flip, -2:] = elements[flip, -1:-3:-1]
        bad = np.flatnonzero(np.abs(vol) <= 1e-300)
        if bad.size:
            raise MeshError(f"element {bad[0]} is degenerate (zero volume)")
        self.elements = elements
        self.volumes = np.abs(vol)

        ne, nv = len(elements), len(self.vertices)
        self.generation = (np.zeros(ne, dtype=np.int64) if generation is None
                           else np.asarray(generation, dtype=np.int64))
        self.parent = (np.arange(ne) if parent is None
                       else np.asarray(parent, dtype=np.int64))
        if vertex_parents is None:
            vertex_parents = np.repeat(np.arange(nv)[:, None], 2, axis=1)
        self.vertex_parents = np.asarray(vertex_parents, dtype=np.int64)
        self.vertex_batches = list(vertex_batches or [])
        self._boundary_measure = boundary_measure

    def __repr__(self):
        return (f"Mesh(dim={self.dim}, nv={self.num_vertices}, "
                f"ne={self.num_elements})")

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_elements(self):
        return len(self.elements)

    # -- geometry ---------------------------------------------------------

    @cached_property
    def grad_lambda(self):
        """Gradients of the barycentric coordinates, shape (ne, d+1, d)."""
        v = self.vertices[self.elements]
        jac = (v[:, 1:, :] - v[:, :1, :]).transpose(0, 2, 1)
        inv = np.linalg.inv(jac)
        g = np.empty((self.num_elements, self.dim + 1, self.dim))
        g[:, 1:, :] = inv
        g[:, 0, :] = -inv.sum(axis=1)
        return g

    @cached_property
    def diameters(self):
        """Element diameters ``h_T`` (longest edge length)."""
        v = self.vertices[self.elements]
        h2 = np.zeros(self.num_elements)
        for i, j in combinations(range(self.dim + 1), 2):
            h2 = np.maximum(h2, ((v[:, i] - v[:, j]) ** 2).sum(axis=1))
        return np.sqrt(h2)

    @cached_property
    def centroids(self):
        return self.vertices[self.elements].mean(axis=1)

    def min_angle(self):
        """Smallest interior angle (2D) or dihedral angle (3D), in radians."""
        v = self.vertices[self.elements]
        if self.dim == 2:
            angles = []
            for i in range(3):
                a = v[:, (i + 1) % 3] - v[:, i]
                b = v[:, (i + 2) % 3] - v[:, i]
                c = (a * b).sum(1) / np.linalg.norm(a, axis=1) / np.linalg.norm(b, axis=1)
                angles.append(np.arccos(np.clip(c, -1, 1)))
            return float(np.min(angles))
        g = self.grad_lambda
        gn = g / np.linalg.norm(g, axis=2, keepdims=True)
        angles = [np.pi - np.arccos(np.clip((gn[:, i] * gn[:, j]).sum(1), -1, 1))
                  for i, j in combinations(range(4), 2)]
        return float(np.min(angles))

    # -- topology ---------------------------------------------------------

    @cached_property
    def _face_table(self):
        d = self.dim
        local = [tuple(k for k in range(d + 1) if k != i) for i in range(d + 1)]
        allf = np.sort(self.elements[:, local], axis=2).reshape(-1, d)
        owner = np.repeat(np.arange(self.num_elements), d + 1)
        opposite = np.tile(np.arange(d + 1), self.num_elements)
        uniq, inverse, counts = np.unique(allf, axis=0, return_inverse=True,
                                          return_counts=True)
        inverse = inverse.ravel()
        return uniq, inverse, counts, owner, opposite

    def _face_normals(self, face_vertices, element, opposite):
        v = self.vertices
        n = -self.grad_lambda[element, opposite]
        n /= np.linalg.norm(n, axis=1, keepdims=True)
        if self.dim == 2:
            meas = np.linalg.norm(v[face_vertices[:, 1]] - v[face_vertices[:, 0]], axis=1)
        else:
            meas = 0.5 * np.linalg.norm(np.cross(
                v[face_vertices[:, 1]] - v[face_vertices[:, 0]],
                v[face_vertices[:, 2]] - v[face_vertices[:, 0]]), axis=1)
        return n, meas

    @cached_property
    def interior_faces(self):
        """Interior faces with adjacent elements (T+, T-), T+ < T-."""
        uniq, inverse, counts, owner, opposite = self._face_table
        if counts.max(initial=0) > 2:
            raise MeshError("a face is shared by more than two elements")
        sel = counts[inverse] == 2
        fid = inverse[sel]
        order = np.lexsort((owner[sel], fid))
        fid, own, opp = fid[order], owner[sel][order], opposite[sel][order]
        plus, minus = own[0::2], own[1::2]
        faces = uniq[fid[0::2]]
        n, meas = self._face_normals(faces, plus, opp[0::2])
        return Faces(faces, np.stack([plus, minus], axis=1), n, meas)

    @cached_property
    def boundary_faces(self):
        uniq, inverse, counts, owner, opposite = self._face_table
        sel = counts[inverse] == 1
        fid = inverse[sel]
        order = np.argsort(fid, kind="stable")
        faces = uniq[fid[order]]
        own, opp = owner[sel][order], opposite[sel][order]
        n, meas = self._face_normals(faces, own, opp)
        return Faces(faces, own[:, None], n, meas)

    @cached_property
    def boundary_vertices(self):
        """Boolean mask of vertices on the domain boundary."""
        mask = np.zeros(self.num_vertices, dtype=bool)
        mask[self.boundary_faces.vertices.ravel()] = True
        return mask

    @cached_property
    def free_vertices(self):
        """Indices of interior vertices (the unknowns of H^1_0 problems)."""
        return np.flatnonzero(~self.boundary_vertices)

    @cached_property
    def edges(self):
        """Unique edges as sorted vertex pairs, shape (nedges, 2)."""
        pairs = list(combinations(range(self.dim + 1), 2))
        e = np.sort(self.elements[:, pairs], axis=2).reshape(-1, 2)
        return np.unique(e, axis=0)

    def patch(self, element):
        """Elements sharing a face with ``element``, including itself."""
        f = self.interior_faces
        nb = f.elements[(f.elements == element).any(axis=1)].ravel()
        return np.unique(np.append(nb, element))

    @property
    def volume(self):
        return float(self.volumes.sum())

    def conformity_check(self):
        """Return True when the mesh is conforming.

        Checks that no face is shared by more than two elements, that the
        boundary measure equals that of the root mesh, and that no vertex
        created by bisection sits on an edge that is still present (hanging
        node).
        """
        _, _, counts, _, _ = self._face_table
        if counts.max(initial=0) > 2:
            return False
        if self._boundary_measure is not None:
            bm = self.boundary_faces.measures.sum()
            if abs(bm - self._boundary_measure) > 1e-10 * self._boundary_measure:
                return False
        vp = self.vertex_parents
        created = vp[:, 0] != vp[:, 1]
        if created.any():
            n = self.num_vertices
            keys = self.edges[:, 0] * n + self.edges[:, 1]
            lo = np.minimum(vp[created, 0], vp[created, 1])
            hi = np.maximum(vp[created, 0], vp[created, 1])
            if np.isin(lo * n + hi, keys).any():
                return False
        return True

    # -- I/O --------------------------------------------------------------

    def write_ascii(self, path):
        """Write the ``dim nv ne`` ASCII mesh format."""
        lines = [f"{self.dim} {self.num_vertices} {self.num_elements}"]
        lines += [" ".join(repr(float(c)) for c in x) for x in self.vertices]
        lines += [" ".join(str(int(i)) for i in t) for t in self.elements]
        Path(path).write_text("\n".join(lines) + "\n")

    def write_vtk(self, path, cell_data=None, point_data=None):
        """Write a legacy VTK unstructured grid."""
        cell_type = 5 if self.dim == 2 else 10
        pts = self.vertices
        if self.dim == 2:
            pts = np.hstack([pts, np.zeros((self.num_vertices, 1))])
        k = self.dim + 1
        out = ["# vtk DataFile Version 3.0", "ocp_afem mesh", "ASCII",
               "DATASET UNSTRUCTURED_GRID",
               f"POINTS {self.num_vertices} double"]
        out += [f"{x!r} {y!r} {z!r}" for x, y, z in pts.tolist()]
        out.append(f"CELLS {self.num_elements} {self.num_elements * (k + 1)}")
        out += [f"{k} " + " ".join(map(str, t)) for t in self.elements.tolist()]
        out.append(f"CELL_TYPES {self.num_elements}")
        out += [str(cell_type)] * self.num_elements
        for header, n, data in (("CELL_DATA", self.num_elements, cell_data),
                                ("POINT_DATA", self.num_vertices, point_data)):
            if data:
                out.append(f"{header} {n}")
                for name, values in data.items():
                    out.append(f"SCALARS {name} double 1")
                    out.append("LOOKUP_TABLE default")
                    out += [repr(float(x)) for x in np.asarray(values)]
        Path(path).write_text("\n".join(out) + "\n")


def read_ascii(path):
    """Read a mesh written by :meth:`Mesh.write_ascii`."""
    lines = Path(path).read_text().split("\n")
    dim, nv, ne = (int(s) for s in lines[0].split())
    verts = np.array([[float(s) for s in ln.split()] for ln in lines[1:1 + nv]])
    elems = np.array([[int(s) for s in ln.split()]
                      for ln in lines[1 + nv:1 + nv + ne]], dtype=np.int64)
    mesh = Mesh(verts.reshape(nv, dim), elems.reshape(ne, dim + 1))
    return _with_root_boundary(mesh)


def _signed_volumes(vertices, elements):
    v = vertices[elements]
    d = vertices.shape[1]
    return np.linalg.det(v[:, 1:, :] - v[:, :1, :]) / factorial(d)


def _with_root_boundary(mesh):
    mesh._boundary_measure = float(mesh.boundary_faces.measures.sum())
    return mesh


def build_lshape(levels=0):
    """L-shaped domain (-1,1)^2 minus [0,1) x (-1,0].

    Level 0 has six right isosceles triangles whose hypotenuses all meet at
    the reentrant corner; each level adds one uniform refinement.
    """
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    verts = [(-1, -1), (0, -1), (-1, 0), (0, 0), (1, 0), (-1, 1), (0, 1), (1, 1)]
    elems = [(3, 2, 0), (3, 0, 1),   # lower-left square
             (3, 6, 5), (3, 5, 2),   # upper-left square
             (3, 4, 7), (3, 7, 6)]   # upper-right square
    mesh = _with_root_boundary(Mesh(verts, elems))
    for _ in range(levels):
        mesh = uniform_refine(mesh)
    return mesh


def build_square(levels=0):
    """Unit square split by the diagonal (0,0)-(1,1)."""
    mesh = _with_root_boundary(Mesh([(0, 0), (1, 0), (1, 1), (0, 1)],
                                    [(0, 1, 2), (0, 2, 3)]))
    for _ in range(levels):
        mesh = uniform_refine(mesh)
    return mesh


def build_cube(levels=0):
    """Unit cube as six Kuhn tetrahedra sharing the main diagonal."""
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    corners = [(i, j, k) for i in (0, 1) for j in (0, 1) for k in (0, 1)]
    index = {c: n for n, c in enumerate(corners)}
    elems = []
    for perm in permutations(range(3)):
        x = [0, 0, 0]
        tet = [index[tuple(x)]]
        for axis in perm:
            x[axis] = 1
            tet.append(index[tuple(x)])
        elems.append(tet)
    mesh = _with_root_boundary(Mesh(corners, elems))
    for _ in range(levels):
        mesh = uniform_refine(mesh)
    return mesh


def build_reference(dim):
    """Single reference simplex."""
    verts = np.vstack([np.zeros(dim), np.eye(dim)])
    return _with_root_boundary(Mesh(verts, [list(range(dim + 1))]))


def _longest_local_edge(vertices, elements, pairs):
    """Local index into ``pairs`` of each element's longest edge.

    Ties go to the lexicographically smallest sorted global vertex pair.
    """
    pa = np.array(pairs)
    gi = elements[:, pa[:, 0]]
    gj = elements[:, pa[:, 1]]
    lo, hi = np.minimum(gi, gj), np.maximum(gi, gj)
    len2 = ((vertices[lo] - vertices[hi]) ** 2).sum(axis=2)
    is_max = len2 == len2.max(axis=1, keepdims=True)
    n = len(vertices)
    key = np.where(is_max, lo * n + hi, np.iinfo(np.int64).max)
    return key.argmin(axis=1), lo, hi


def refine(mesh, marked):
    """Longest-edge bisection of the marked elements with conforming closure.

    Every marked element is bisected at least once through the midpoint of
    its longest edge.  Any element containing a bisected edge is itself
    bisected through its own longest edge until no hanging nodes remain.

    Returns
    -------
    Mesh
        New mesh; ``parent`` maps each new element to its ancestor in
        ``mesh`` and ``vertex_parents`` gives, for each vertex created by
        bisection, the edge it is the midpoint of.
    """
    if mesh.num_elements == 0:
        raise MeshError("cannot refine an empty mesh")
    marked = np.unique(np.asarray(list(marked), dtype=np.int64))
    if marked.size and (marked[0] < 0 or marked[-1] >= mesh.num_elements):
        raise MeshError("marked element index out of range")
    if marked.size == 0:
        return Mesh(mesh.vertices, mesh.elements, mesh.generation,
                    vertex_parents=mesh.vertex_parents,
                    boundary_measure=mesh._boundary_measure)

    d = mesh.dim
    pairs = list(combinations(range(d + 1), 2))
    pa = np.array(pairs)
    # vertex storage grows by at most one vertex per bisected edge
    verts = [mesh.vertices]
    nverts = mesh.num_vertices
    vparents = [mesh.vertex_parents]
    batches = []
    elems = mesh.elements.copy()
    gen = mesh.generation.copy()
    parent = np.arange(mesh.num_elements)

    budget = 100 * mesh.num_elements + 100
    bisections = 0
    # edge keys use a fixed modulus larger than any vertex index we can create
    big = np.int64(mesh.num_vertices + budget + 1)
    all_verts = mesh.vertices
    loc, lo, hi = _longest_local_edge(all_verts, elems, pairs)
    rows = np.arange(len(elems))
    pending = np.unique(lo[marked, loc[marked]] * big + hi[marked, loc[marked]])
    midpoint = {}

    while True:
        loc, lo, hi = _longest_local_edge(all_verts, elems, pairs)
        keys = lo * big + hi
        rows = np.arange(len(elems))
        longest = keys[rows, loc]
        pending = pending[np.isin(pending, keys)]
        if pending.size == 0:
            break
        # closure: an element holding a pending edge must split its longest
        while True:
            touched = np.isin(keys, pending).any(axis=1)
            extra = np.setdiff1d(longest[touched], pending)
            if extra.size == 0:
                break
            pending = np.union1d(pending, extra)
        split = np.flatnonzero(touched)
        bisections += split.size
        if bisections > budget:
            raise MeshError(
                f"bisection closure exceeded {budget} bisections; mesh is pathological")

        new_keys = np.unique(longest[split])
        new_keys = new_keys[[k not in midpoint for k in new_keys.tolist()]]
        if new_keys.size:
            a, b = new_keys // big, new_keys % big
            ids = np.arange(nverts, nverts + new_keys.size)
            midpoint.update(zip(new_keys.tolist(), ids.tolist()))
            new_pts = 0.5 * (all_verts[a] + all_verts[b])
            verts.append(new_pts)
            vparents.append(np.stack([a, b], axis=1))
            batches.append((nverts, nverts + new_keys.size))
            nverts += new_keys.size
            all_verts = np.vstack([all_verts, new_pts])

        m = np.array([midpoint[k] for k in longest[split].tolist()], dtype=np.int64)
        la = pa[loc[split], 0]
        lb = pa[loc[split], 1]
        child1 = elems[split].copy()
        child2 = elems[split].copy()
        child1[np.arange(split.size), lb] = m
        child2[np.arange(split.size), la] = m
        keep = np.ones(len(elems), dtype=bool)
        keep[split] = False
        # children are interleaved after the untouched elements for determinism
        children = np.stack([child1, child2], axis=1).reshape(-1, d + 1)
        elems = np.vstack([elems[keep], children])
        gen = np.concatenate([gen[keep], np.repeat(gen[split] + 1, 2)])
        parent = np.concatenate([parent[keep], np.repeat(parent[split], 2)])

    order = np.lexsort((np.arange(len(elems)), parent))
    return Mesh(all_verts, elems[order], gen[order], parent=parent[order],
                vertex_parents=np.vstack(vparents), vertex_batches=batches,
                boundary_measure=mesh._boundary_measure)


def uniform_refine(mesh):
    """Bisect every element ``dim`` times so that the mesh size halves."""
    out = mesh
    parent = np.arange(mesh.num_elements)
    batches = []
    for _ in range(mesh.dim):
        out = refine(out, np.arange(out.num_elements))
        parent = parent[out.parent]
        batches += out.vertex_batches
    out.parent = parent
    out.vertex_batches = batches
    return out
