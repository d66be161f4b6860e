"""Polygonal ascent paths inside the pseudospectrum."""

import numpy as np
import pytest

from resolventlab.builders import example_last
from resolventlab.errors import DomainError, ResolventLabError
from resolventlab.matcore import distance_to_spectrum, smin_points
from resolventlab.path import PathOptions, PolygonalPath, build_path, validate_path

from conftest import random_matrix

DIAG03 = np.diag([0.0 + 0j, 3.0])


def interior_point(rng, a, min_dist=0.2):
    for _ in range(64):
        cand = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        if distance_to_spectrum(a, cand) >= min_dist:
            return cand
    raise AssertionError("no interior point found")


class TestBuildPath:
    def test_one_dimensional_descent_to_zero(self):
        # oracle: norm = 1/min(|z|, |z - 3|) along the real axis
        p = build_path(DIAG03, 1.4, 1.5)
        assert abs(p.vertices[-1] - 0.0) < 0.75
        assert p.terminal_eigenvalue == pytest.approx(0.0, abs=1e-12)
        assert np.all(np.diff(p.vertex_norms) > 0)
        for v, f in zip(p.vertices, p.vertex_norms):
            assert f == pytest.approx(1.0 / min(abs(v), abs(v - 3)), rel=1e-12)

    def test_single_vertex_when_already_close(self):
        p = build_path(DIAG03, 0.2, 1.5)
        assert len(p.vertices) == 1
        assert p.vertices[0] == 0.2
        assert p.terminal_eigenvalue == pytest.approx(0.0, abs=1e-12)

    def test_example_last_near_block_eigenvalue(self):
        b = example_last()
        p = build_path(b, 0.9j, 0.97)
        assert abs(p.vertices[-1] - 1j) < 0.485
        assert p.terminal_eigenvalue == pytest.approx(1j, abs=1e-9)

    def test_not_member_raises(self):
        with pytest.raises(DomainError):
            build_path(DIAG03, 1.5, 0.4)   # smin = 1.5 >= 0.4

    def test_floor_definition(self):
        p = build_path(DIAG03, 1.4, 1.5)
        f0 = 1.0 / 1.4
        assert p.floor == pytest.approx(0.5 * (f0 + 1.0 / 1.5), rel=1e-12)

    def test_monotone_norms_statistical(self):
        ok = 0
        for seed in range(100):
            rng = np.random.default_rng(1000 + seed)
            a = random_matrix(rng, 8)
            z = interior_point(rng, a)
            smin = float(smin_points(a, np.array([z]))[0])
            try:
                p = build_path(a, z, 1.3 * smin)
            except ResolventLabError:
                continue
            assert np.all(np.diff(p.vertex_norms) > 0)
            assert validate_path(a, p, 1.3 * smin, samples_per_segment=64)
            ok += 1
        assert ok >= 95


class TestExtremeLandscape:
    def test_cyclic_high_contrast_paths(self):
        # resolvent norms up to 1e6 and terminal balls of radius 5e-7:
        # the ascent must thread from near the local minimum at the origin
        # out to the eigenvalue ring at |z| = 0.1
        from resolventlab.builders import cyclic_matrix
        a = cyclic_matrix([1e6] + [1.0] * 5)
        for z0, eps in [(0.05 + 0j, 1e-5), (0.002 + 0.001j, 2e-6)]:
            p = build_path(a, z0, eps)
            assert validate_path(a, p, eps)
            assert np.all(np.diff(p.vertex_norms) > 0)
            assert abs(p.vertices[-1] - p.terminal_eigenvalue) < 0.5 * eps


class TestValidatePath:
    def test_accepts_build_output(self):
        p = build_path(DIAG03, 1.4, 1.5)
        assert validate_path(DIAG03, p, 1.5)

    def test_rejects_vertex_below_floor(self):
        p = build_path(DIAG03, 1.4, 1.5)
        bad = PolygonalPath(p.epsilon, np.array([1.4 + 0j, 1.5 + 0j, 0.7 + 0j]),
                            p.terminal_eigenvalue, p.floor, p.vertex_norms)
        assert not validate_path(DIAG03, bad, 1.5)

    def test_rejects_terminal_far_from_spectrum(self):
        p = build_path(DIAG03, 1.4, 1.5)
        bad = PolygonalPath(p.epsilon, np.array([1.4 + 0j]), p.terminal_eigenvalue,
                            p.floor, p.vertex_norms[:1])
        assert not validate_path(DIAG03, bad, 1.5)

    def test_rejects_non_member_start(self):
        p = PolygonalPath(0.4, np.array([1.5 + 0j]), 0j, 0.5 * (1 / 1.5 + 1 / 0.4),
                          np.array([1 / 1.5]))
        assert not validate_path(DIAG03, p, 0.4)


class TestPathOptions:
    def test_max_vertices_respected(self):
        # one loop iteration can append a vertex but never certify arrival
        opts = PathOptions(max_vertices=1)
        from resolventlab.errors import MaxVerticesExceeded
        with pytest.raises(MaxVerticesExceeded):
            build_path(DIAG03, 1.4, 1.5, opts)

    def test_custom_sampling_density(self):
        opts = PathOptions(samples_per_segment=128)
        p = build_path(DIAG03, 1.4, 1.5, opts)
        assert validate_path(DIAG03, p, 1.5, samples_per_segment=128)
