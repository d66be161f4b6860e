"""Constructive polygonal ascent paths inside a pseudospectrum.

From any point of the strict sublevel set {smin < epsilon} the resolvent
norm can be driven uphill along growth-certificate directions until an
eigenvalue ball of radius epsilon/2 is reached; every traversed segment
stays above the floor (f(z1) + 1/epsilon)/2 > 1/epsilon, so the whole path
lies inside the pseudospectrum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MaxVerticesExceeded, StallDetected
from .gap import DEFAULT_GAP_TOL, spectral_gap_report
from .growth import growth_direction
from .matcore import ensure_matrix, smin_points


@dataclass(frozen=True)
class PathOptions:
    """Step policy; the defaults follow the ascent structure of the proof
    with explicit numeric substitutes for its uncomputable radii."""

    step_fraction: float = 0.5        # of the distance to the spectrum
    backtrack: float = 0.5
    min_step_rtol: float = 1e-9       # scaled by 1 + |z|
    max_vertices: int = 10_000
    samples_per_segment: int = 64
    fallback_angles: int = 64
    gap_tol: float = DEFAULT_GAP_TOL


@dataclass(frozen=True)
class PolygonalPath:
    epsilon: float
    vertices: np.ndarray
    terminal_eigenvalue: complex
    floor: float
    vertex_norms: np.ndarray

    def __post_init__(self):
        self.vertices.setflags(write=False)
        self.vertex_norms.setflags(write=False)


def _norms_on_segment(a, x: complex, y: complex, samples: int) -> np.ndarray:
    ts = np.linspace(0.0, 1.0, samples)
    pts = x + ts * (y - x)
    with np.errstate(divide="ignore"):
        return 1.0 / smin_points(a, pts)


def build_path(a, z: complex, epsilon: float, opts: PathOptions = PathOptions()) -> PolygonalPath:
    """Build a polygonal path from z to an eigenvalue ball of radius eps/2.

    Requires smin(A - zI) < epsilon. At each vertex the growth certificate
    provides an uphill direction; the longest feasible step up to half the
    distance to the spectrum is taken, backtracking geometrically, with a
    64-direction circle search as fallback when the line search underflows.
    Feasible means every sampled point of the segment keeps its norm at or
    above the floor and the endpoint strictly improves.
    """
    a = ensure_matrix(a)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    eigs = np.linalg.eigvals(a)
    smin0 = float(smin_points(a, np.array([z]))[0])
    if not smin0 < epsilon:
        raise DomainError(f"z={z} is not in the pseudospectrum (smin={smin0:.6e} >= {epsilon:g})")
    f0 = np.inf if smin0 == 0.0 else 1.0 / smin0
    floor = 0.5 * (f0 + 1.0 / epsilon) if math.isfinite(f0) else np.inf

    vertices = [complex(z)]
    norms = [f0]
    min_step = opts.min_step_rtol * (1.0 + abs(z))
    consecutive_stalls = 0

    for _ in range(opts.max_vertices):
        current = vertices[-1]
        f_cur = norms[-1]
        dist = float(np.abs(eigs - current).min())
        if dist < 0.5 * epsilon:
            terminal = complex(eigs[int(np.abs(eigs - current).argmin())])
            return PolygonalPath(float(epsilon), np.array(vertices),
                                 terminal, float(floor), np.array(norms))

        # NoGapError propagates with the stalled vertex in its payload
        report = spectral_gap_report(a, current, opts.gap_tol)
        cert = growth_direction(a, current, report)

        accepted = None
        if cert.phi is not None:
            direction = cmath.exp(1j * cert.phi)
            step = opts.step_fraction * dist
            while step >= min_step:
                y = current + step * direction
                seg = _norms_on_segment(a, current, y, opts.samples_per_segment)
                if np.all(seg >= floor) and seg[-1] > f_cur:
                    accepted = (y, float(seg[-1]), step)
                    break
                step *= opts.backtrack

        if accepted is None:
            # the certificate guarantees an uphill direction exists, but not
            # how far it reaches; scan a circle for the best strict gain
            radius = 0.25 * dist
            best = None
            for j in range(opts.fallback_angles):
                theta = 2.0 * math.pi * j / opts.fallback_angles
                y = current + radius * cmath.exp(1j * theta)
                seg = _norms_on_segment(a, current, y, opts.samples_per_segment)
                if np.all(seg >= floor) and seg[-1] > f_cur:
                    if best is None or seg[-1] > best[1]:
                        best = (y, float(seg[-1]), radius)
            if best is None:
                raise StallDetected(
                    f"no uphill step found at vertex {current} (norm {f_cur:.6e})")
            accepted = best
            consecutive_stalls += 1
            if consecutive_stalls >= 2 and accepted[2] < min_step:
                raise StallDetected(
                    f"step underflow at two consecutive vertices near {current}")
        else:
            consecutive_stalls = 0

        vertices.append(accepted[0])
        norms.append(accepted[1])

    raise MaxVerticesExceeded(f"no eigenvalue ball reached within {opts.max_vertices} vertices")


def validate_path(a, path: PolygonalPath, epsilon: float,
                  samples_per_segment: int = 64) -> bool:
    """Re-check the path invariants by independent sampling.

    Verifies membership of the first vertex, the floor bound at
    ``samples_per_segment`` equispaced points of every segment, and the
    terminal eigenvalue ball condition.
    """
    a = ensure_matrix(a)
    v = np.asarray(path.vertices, dtype=complex)
    if v.size == 0:
        return False
    smin_first = float(smin_points(a, v[:1])[0])
    if not smin_first < epsilon:
        return False
    if not path.floor > 1.0 / epsilon:
        return False
    eigs = np.linalg.eigvals(a)
    if not float(np.abs(eigs - v[-1]).min()) < 0.5 * epsilon:
        return False
    if abs(complex(path.terminal_eigenvalue) - complex(v[-1])) >= 0.5 * epsilon:
        return False
    for x, y in zip(v[:-1], v[1:]):
        seg = _norms_on_segment(a, complex(x), complex(y), samples_per_segment)
        if not np.all(seg >= path.floor):
            return False
    return True
