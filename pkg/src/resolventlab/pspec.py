"""Grid-based pseudospectrum computation, contours, and component analysis.

The epsilon-pseudospectrum is the strict sublevel set {smin(A - zI) <
epsilon}; :func:`scan` samples smin on a rectangular grid, :func:`contours`
extracts marching-squares isolines, and :func:`components` labels the
sublevel set (4-connected) and counts holes via the 8-connected complement.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .errors import EigenvalueOutsideRegion
from .matcore import ensure_matrix, smin_points, spectrum

FOUR_CONNECTED = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]])
EIGHT_CONNECTED = np.ones((3, 3), dtype=int)


@dataclass(frozen=True)
class Region:
    """Rectangular scan window with grid resolution."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("region must have re_min < re_max and im_min < im_max")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs nx, ny >= 2")

    def re_points(self) -> np.ndarray:
        return np.linspace(self.re_min, self.re_max, self.nx)

    def im_points(self) -> np.ndarray:
        return np.linspace(self.im_min, self.im_max, self.ny)

    def mesh(self) -> np.ndarray:
        """nx x ny complex samples, index [ix, iy] at re[ix] + i im[iy]."""
        return self.re_points()[:, None] + 1j * self.im_points()[None, :]


@dataclass(frozen=True)
class PseudospectrumGrid:
    region: Region
    smin: np.ndarray

    def __post_init__(self):
        self.smin.setflags(write=False)


@dataclass(frozen=True)
class ComponentReport:
    epsilon: float
    n_components: int
    eigenvalues_per_component: tuple
    n_holes: tuple


def scan(a, region: Region) -> PseudospectrumGrid:
    """Sample smin(A - zI) over the region grid.

    Points where the SVD fails to converge are recorded as NaN and
    reported through a warning; with dense desk-scale matrices this does
    not happen in practice.
    """
    m = ensure_matrix(a)
    zz = region.mesh()
    try:
        values = smin_points(m, zz)
    except np.linalg.LinAlgError:
        values = np.empty(zz.shape)
        failures = 0
        for ix in range(region.nx):
            for iy in range(region.ny):
                try:
                    values[ix, iy] = smin_points(m, np.array([zz[ix, iy]]))[0]
                except np.linalg.LinAlgError:
                    values[ix, iy] = np.nan
                    failures += 1
        warnings.warn(f"SVD failed to converge at {failures} grid points (recorded as NaN)")
    return PseudospectrumGrid(region, values)


def membership(a, z: complex, epsilon: float) -> bool:
    """Strict test smin(A - zI) < epsilon."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    m = ensure_matrix(a)
    smin = float(np.linalg.svd(m - z * np.eye(m.shape[0]), compute_uv=False)[-1])
    return smin < epsilon


def _interp(p: float, q: float, level: float) -> float:
    return (level - p) / (q - p)


def _cell_segments(v00, v10, v01, v11, level):
    """Marching-squares segments for one cell, as pairs of edge ids.

    Edges are 'b' (bottom, y fixed low), 't' (top), 'l' (left), 'r'
    (right). The ambiguous saddle cases are resolved with the cell-center
    average.
    """
    idx = (v00 < level) | ((v10 < level) << 1) | ((v11 < level) << 2) | ((v01 < level) << 3)
    if idx in (0, 15):
        return []
    table = {
        1: [("l", "b")], 2: [("b", "r")], 3: [("l", "r")], 4: [("r", "t")],
        6: [("b", "t")], 7: [("l", "t")], 8: [("t", "l")], 9: [("t", "b")],
        11: [("t", "r")], 12: [("r", "l")], 13: [("r", "b")], 14: [("b", "l")],
    }
    if idx == 5:
        center_below = 0.25 * (v00 + v10 + v01 + v11) < level
        return [("l", "t"), ("b", "r")] if center_below else [("l", "b"), ("r", "t")]
    if idx == 10:
        center_below = 0.25 * (v00 + v10 + v01 + v11) < level
        return [("t", "r"), ("b", "l")] if center_below else [("t", "l"), ("b", "r")]
    return table[idx]


def _edge_node(ix, iy, edge):
    # a node identifies a crossing on a unique grid edge, making segment
    # chaining exact (no floating-point endpoint matching)
    if edge == "b":
        return ("h", ix, iy)
    if edge == "t":
        return ("h", ix, iy + 1)
    if edge == "l":
        return ("v", ix, iy)
    return ("v", ix + 1, iy)


def contours(grid: PseudospectrumGrid, levels) -> list:
    """Marching-squares isolines of smin at each level.

    Returns one list of polylines per level; each polyline is an (k, 2)
    array of (re, im) points, closed when the first and last points
    coincide and grid-boundary-terminated otherwise.
    """
    f = grid.smin
    xs = grid.region.re_points()
    ys = grid.region.im_points()
    out = []
    for level in levels:
        if level <= 0:
            raise ValueError("contour levels must be positive")
        adjacency: dict = {}
        for ix in range(grid.region.nx - 1):
            for iy in range(grid.region.ny - 1):
                corners = (f[ix, iy], f[ix + 1, iy], f[ix, iy + 1], f[ix + 1, iy + 1])
                if any(np.isnan(corners)):
                    continue
                for e1, e2 in _cell_segments(*corners, level):
                    n1, n2 = _edge_node(ix, iy, e1), _edge_node(ix, iy, e2)
                    adjacency.setdefault(n1, []).append(n2)
                    adjacency.setdefault(n2, []).append(n1)

        def node_point(node):
            kind, ix, iy = node
            if kind == "h":
                t = _interp(f[ix, iy], f[ix + 1, iy], level)
                return (xs[ix] + t * (xs[ix + 1] - xs[ix]), ys[iy])
            t = _interp(f[ix, iy], f[ix, iy + 1], level)
            return (xs[ix], ys[iy] + t * (ys[iy + 1] - ys[iy]))

        polylines = []
        visited = set()

        def walk(start):
            chain = [start]
            visited.add(start)
            current = start
            while True:
                nxt = None
                for cand in adjacency[current]:
                    if cand not in visited:
                        nxt = cand
                        break
                if nxt is None:
                    for cand in adjacency[current]:
                        if cand == start and len(chain) > 2:
                            chain.append(start)   # closed loop
                    break
                chain.append(nxt)
                visited.add(nxt)
                current = nxt
            return chain

        open_ends = sorted(n for n, nbrs in adjacency.items() if len(nbrs) == 1)
        for node in open_ends:
            if node not in visited:
                polylines.append(walk(node))
        for node in sorted(adjacency):
            if node not in visited:
                polylines.append(walk(node))
        out.append([np.array([node_point(n) for n in chain]) for chain in polylines])
    return out


def components(a, grid: PseudospectrumGrid, epsilon: float) -> ComponentReport:
    """Label the sublevel set and assign eigenvalues and holes per component.

    Cells use 4-connectivity; the complement uses 8-connectivity so that
    hole counting avoids the checkerboard paradox. A hole is a complement
    component that does not touch the region boundary; it is attributed to
    the sublevel component surrounding it (modal neighboring label).
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    m = ensure_matrix(a)
    mask = grid.smin < epsilon
    labels, n_comp = ndimage.label(mask, structure=FOUR_CONNECTED)

    spec = spectrum(m)
    region = grid.region
    dre = (region.re_max - region.re_min) / (region.nx - 1)
    dim = (region.im_max - region.im_min) / (region.ny - 1)
    eig_lists = [[] for _ in range(n_comp)]
    for lam in spec.eigenvalues:
        ix = round((lam.real - region.re_min) / dre)
        iy = round((lam.imag - region.im_min) / dim)
        if not (0 <= ix < region.nx and 0 <= iy < region.ny):
            warnings.warn(f"eigenvalue {lam} lies outside the scanned region",
                          EigenvalueOutsideRegion)
            continue
        label = labels[ix, iy]
        if label == 0:
            # coarse grids can park the nearest cell just outside the mask
            neighborhood = labels[max(ix - 1, 0):ix + 2, max(iy - 1, 0):iy + 2]
            nonzero = neighborhood[neighborhood > 0]
            if nonzero.size == 0:
                warnings.warn(f"eigenvalue {lam} not resolved on the grid",
                              EigenvalueOutsideRegion)
                continue
            label = int(nonzero[0])
        eig_lists[label - 1].append(complex(lam))

    comp_labels, n_holes_total = ndimage.label(~mask, structure=EIGHT_CONNECTED)
    boundary = set()
    for edge in (comp_labels[0, :], comp_labels[-1, :], comp_labels[:, 0], comp_labels[:, -1]):
        boundary.update(int(v) for v in np.unique(edge) if v)
    holes = [0] * n_comp
    for hole_label in range(1, n_holes_total + 1):
        if hole_label in boundary:
            continue
        hole_mask = comp_labels == hole_label
        ring = ndimage.binary_dilation(hole_mask, structure=EIGHT_CONNECTED) & mask
        ring_labels = labels[ring]
        if ring_labels.size:
            owner = int(np.bincount(ring_labels).argmax())
            if owner > 0:
                holes[owner - 1] += 1
    return ComponentReport(float(epsilon), int(n_comp),
                           tuple(tuple(e) for e in eig_lists), tuple(holes))
