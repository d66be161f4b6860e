"""Constructors for the example matrix families used in tests and demos.

Covers the trace-zero 2x2 normal forms (double eigenvalue and eigenvalues
+-1), their scaled/rotated block-diagonal combinations, the weighted cyclic
matrices whose resolvent norm has a local minimum at the origin, the
periodic truncation of the weighted bilateral shift, the discretized
multiplication-operator example, and the zigzag diagonal connectivity
example.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .matcore import ensure_matrix

# eigenvalue placement tolerance for BlockSpec validation
BLOCK_EIG_TOL = 1e-10


@dataclass(frozen=True)
class BlockSpec:
    """2x2 blocks sharing a center z0, with per-block eigenvalue ray data.

    Block j must have eigenvalues z0 +- r_j e^{i phi_j}; this is validated
    at construction.
    """

    blocks: tuple
    center: complex
    rays: tuple  # (r_j, phi_j) pairs

    def __post_init__(self):
        if len(self.blocks) != len(self.rays):
            raise DomainError("one (r, phi) ray per block required")
        for blk, (r, phi) in zip(self.blocks, self.rays):
            m = ensure_matrix(blk)
            if m.shape != (2, 2) or r <= 0:
                raise DomainError("blocks must be 2x2 with positive ray radius")
            expected = self.center + r * cmath.exp(1j * phi)
            eigs = np.linalg.eigvals(m)
            scale = 1.0 + float(np.abs(eigs).max())
            d1 = min(abs(eigs[0] - expected), abs(eigs[1] - expected))
            d2 = min(abs(eigs[0] - (2 * self.center - expected)),
                     abs(eigs[1] - (2 * self.center - expected)))
            if max(d1, d2) > BLOCK_EIG_TOL * scale:
                raise DomainError(
                    f"block eigenvalues {eigs} do not match z0 +- r e^(i phi) = {expected}")


def type1_matrix(variant: int, *, c: complex | None = None,
                 a: complex | None = None, b: complex | None = None) -> np.ndarray:
    """Trace- and determinant-free 2x2 normal forms (double eigenvalue 0).

    Variant 1 is [[0, 0], [c, 0]]; variant 2 is [[a, b], [-a^2/b, -a]] with
    b != 0.
    """
    if variant == 1:
        if c is None:
            raise DomainError("variant 1 needs parameter c")
        return np.array([[0, 0], [c, 0]], dtype=complex)
    if variant == 2:
        if a is None or b is None:
            raise DomainError("variant 2 needs parameters a and b")
        if b == 0:
            raise DomainError("variant 2 requires b != 0")
        return np.array([[a, b], [-a * a / b, -a]], dtype=complex)
    raise DomainError(f"unknown variant {variant}")


def type2_matrix(variant: int, *, c: complex | None = None, sign: int = 1,
                 a: complex | None = None, b: complex | None = None) -> np.ndarray:
    """Trace-zero 2x2 normal forms with eigenvalues +-1 (determinant -1).

    Variant 1 is +-[[1, 0], [c, -1]]; variant 2 is [[a, b], [(1-a^2)/b, -a]]
    with b != 0.
    """
    if variant == 1:
        if c is None:
            raise DomainError("variant 1 needs parameter c")
        if sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        return sign * np.array([[1, 0], [c, -1]], dtype=complex)
    if variant == 2:
        if a is None or b is None:
            raise DomainError("variant 2 needs parameters a and b")
        if b == 0:
            raise DomainError("variant 2 requires b != 0")
        return np.array([[a, b], [(1 - a * a) / b, -a]], dtype=complex)
    raise DomainError(f"unknown variant {variant}")


def scaled_rotated(core, r: float, phi: float, z0: complex = 0j) -> np.ndarray:
    """A = z0 I + r e^{i phi} core, moving eigenvalues +-1 to z0 +- r e^{i phi}."""
    m = ensure_matrix(core)
    if m.shape != (2, 2):
        raise DomainError("core must be 2x2")
    if r <= 0:
        raise DomainError("r must be positive")
    eigs = sorted(np.linalg.eigvals(m), key=lambda v: v.real)
    if abs(eigs[0] + 1) > 1e-10 or abs(eigs[1] - 1) > 1e-10:
        raise DomainError(f"core must have eigenvalues +-1, got {eigs}")
    return z0 * np.eye(2) + r * cmath.exp(1j * phi) * m


def block_diag(blocks) -> np.ndarray:
    """Direct sum of square blocks; the resolvent norm is the blockwise max."""
    mats = [ensure_matrix(b) for b in blocks]
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n), dtype=complex)
    at = 0
    for m in mats:
        k = m.shape[0]
        out[at:at + k, at:at + k] = m
        at += k
    return out


def example_last_blocks():
    """The three scaled/rotated blocks of the norm-1 local-minimum example.

    The third scale is computed numerically from the SVD so that
    ||R_{A3}(0)|| = 1 holds exactly at working precision (it equals
    sqrt(2/(34 - sqrt(1152))) = 3 + 2 sqrt(2)).
    """
    a1 = np.diag([1j, -1j])
    core2 = type2_matrix(2, a=1, b=2)
    c2 = math.sqrt(2.0 / (6.0 - math.sqrt(32.0)))
    a2 = c2 * cmath.exp(-1j * math.pi / 6.0) * core2
    core3 = np.array([[2j, -1], [-5, -2j]], dtype=complex)
    c3 = 1.0 / float(np.linalg.svd(core3, compute_uv=False)[-1])
    a3 = c3 * cmath.exp(1j * math.pi / 6.0) * core3
    return [a1, a2, a3]


def example_last() -> np.ndarray:
    """6x6 block diagonal with ||R(0)|| = 1 and a local minimum at the origin."""
    return block_diag(example_last_blocks())


def cyclic_matrix(a) -> np.ndarray:
    """Weighted cyclic matrix with inverse carrying a_2..a_N on the superdiagonal.

    A has subdiagonal entries 1/a_{j+1} and corner entry (1, N) equal to
    1/a_1; its inverse has superdiagonal a_2, ..., a_N and corner (N, 1)
    entry a_1, so S(0) = diag(|a_1|^2, ..., |a_N|^2).
    """
    w = np.asarray(a, dtype=complex).ravel()
    n = w.size
    if n < 2:
        raise DomainError("cyclic matrix needs at least 2 weights")
    if np.any(w == 0):
        raise DomainError("all weights must be nonzero")
    m = np.zeros((n, n), dtype=complex)
    m[0, n - 1] = 1.0 / w[0]
    for j in range(1, n):
        m[j, j - 1] = 1.0 / w[j]
    return m


def cyclic_inverse(a) -> np.ndarray:
    """The displayed inverse of :func:`cyclic_matrix` (test oracle)."""
    w = np.asarray(a, dtype=complex).ravel()
    n = w.size
    m = np.zeros((n, n), dtype=complex)
    m[n - 1, 0] = w[0]
    for j in range(1, n):
        m[j - 1, j] = w[j]
    return m


def truncated_shift(a) -> np.ndarray:
    """Periodic finite section of the weighted bilateral shift.

    ``a`` lists the weights a_{-M}, ..., a_0, ..., a_M (odd length, the
    dominant weight a_0 at the center). A zero-boundary section of the
    shift is singular, so the truncation wraps periodically, reproducing
    the cyclic structure on 2M + 1 sites and preserving the local-minimum
    conditions at the origin.
    """
    w = np.asarray(a, dtype=complex).ravel()
    if w.size < 3 or w.size % 2 == 0:
        raise DomainError("weights must have odd length 2M + 1 >= 3")
    if np.any(w == 0):
        raise DomainError("all weights must be nonzero")
    center = w.size // 2
    others = np.abs(np.delete(w, center))
    if not abs(w[center]) > others.max():
        raise DomainError("|a_0| must strictly dominate all other weights")
    return cyclic_matrix(w)


def multiplication_example(n_grid: int, n_block: int) -> np.ndarray:
    """Midpoint discretization of multiplication by x on [0, 1], plus 2I.

    diag(x_1, ..., x_{n_grid}, 2, ..., 2) with x_k = (k - 1/2)/n_grid; the
    gap condition holds cleanly to the right of 3/2 and degrades as the
    grid refines elsewhere.
    """
    if n_grid < 1 or n_block < 1:
        raise DomainError("n_grid and n_block must be >= 1")
    xs = (np.arange(1, n_grid + 1) - 0.5) / n_grid
    return np.diag(np.concatenate([xs, np.full(n_block, 2.0)]).astype(complex))


def connectivity_example(n: int) -> np.ndarray:
    """Zigzag diagonal A_jj = j + i (-1)^j sqrt(3)/2 (j = 1..n)."""
    if n < 2:
        raise DomainError("n must be >= 2")
    j = np.arange(1, n + 1)
    return np.diag(j + 1j * (-1.0) ** j * math.sqrt(3.0) / 2.0)
