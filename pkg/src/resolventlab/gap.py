"""Spectral-gap verification for S(z) = R(z)* R(z).

The growth and perturbation machinery requires the top of sigma(S(z)) to be
an isolated eigenvalue lambda_max(z) above the rest of the spectrum, which
sits in [0, a(z)]. :func:`spectral_gap_report` checks this numerically and
packages the eigenspace data everything downstream consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoGapError
from .matcore import ensure_matrix, gram

DEFAULT_GAP_TOL = 1e-6

# eigenvalues of S(z) within this relative distance of the top are counted
# into the lambda_max eigenspace; kept below DEFAULT_GAP_TOL so that a
# cluster is either merged into the top or flagged as NoGap, never both
TOP_CLUSTER_RTOL = 1e-9


@dataclass(frozen=True)
class SpectralGapReport:
    """Numerical verdict on the gap condition at a point z.

    ``basis`` holds an orthonormal basis of the lambda_max-eigenspace as
    columns of an n x multiplicity array. ``gap_ratio`` is
    lambda_max / a_z, infinite when the rest of the spectrum is empty.
    """

    z: complex
    lambda_max: float
    a_z: float
    multiplicity: int
    basis: np.ndarray
    gap_ratio: float

    def __post_init__(self):
        self.basis.setflags(write=False)


@dataclass(frozen=True)
class GapDisk:
    """Disk around lambda_max(z) of radius half the gap width."""

    center: float
    radius: float

    def contains(self, values) -> np.ndarray:
        return np.abs(np.asarray(values) - self.center) < self.radius


def gram_eigensystem(a, z: complex):
    """Eigendecomposition of S(z), eigenvalues descending."""
    s = gram(a, z)
    evals, evecs = np.linalg.eigh(s)
    return evals[::-1], evecs[:, ::-1]


def top_cluster_size(evals_desc: np.ndarray) -> int:
    """Number of leading eigenvalues within TOP_CLUSTER_RTOL of the top."""
    lam = evals_desc[0]
    return int(np.sum(evals_desc >= lam * (1.0 - TOP_CLUSTER_RTOL)))


def spectral_gap_report(a, z: complex, gap_tol: float = DEFAULT_GAP_TOL) -> SpectralGapReport:
    """Verify the gap condition at z and return the eigenspace data.

    Raises :class:`NoGapError` when the relative gap
    (lambda_max - a_z) / lambda_max falls below ``gap_tol``, and
    :class:`SingularPoint` when z lies in the spectrum.
    """
    m = ensure_matrix(a)
    evals, evecs = gram_eigensystem(m, z)
    lam = float(evals[0])
    mult = top_cluster_size(evals)
    a_z = float(evals[mult]) if mult < m.shape[0] else 0.0
    rel_gap = (lam - a_z) / lam
    if rel_gap < gap_tol:
        raise NoGapError(z, lam, a_z, rel_gap)
    ratio = np.inf if a_z <= 0.0 else lam / a_z
    return SpectralGapReport(z, lam, a_z, mult, np.ascontiguousarray(evecs[:, :mult]), float(ratio))


def riesz_projection(report: SpectralGapReport) -> np.ndarray:
    """Orthogonal projection onto the lambda_max-eigenspace.

    For Hermitian S(z) the Riesz projection of the isolated top eigenvalue
    is the orthogonal eigenprojection sum psi psi*.
    """
    b = report.basis
    return b @ b.conj().T


def gap_disk(report: SpectralGapReport) -> GapDisk:
    return GapDisk(report.lambda_max, 0.5 * (report.lambda_max - report.a_z))
