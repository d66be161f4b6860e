"""Exception hierarchy shared by all resolventlab modules.

Domain errors (everything below ``ResolventLabError``) map to CLI exit
code 1; file-format problems (``MatrixFormatError``) map to exit code 2.
"""


class ResolventLabError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(ResolventLabError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularPoint(ResolventLabError):
    """z lies in the spectrum (within the singularity tolerance)."""


class NoGapError(ResolventLabError):
    """The top of sigma(S(z)) is not separated from the rest.

    Carries the measured quantities so callers can report diagnostics.
    """

    def __init__(self, z, lambda_max, a_z, rel_gap):
        self.z = z
        self.lambda_max = lambda_max
        self.a_z = a_z
        self.rel_gap = rel_gap
        super().__init__(
            f"no spectral gap at z={z}: lambda_max={lambda_max:.6e}, "
            f"a_z={a_z:.6e}, relative gap {rel_gap:.3e}"
        )


class BlockSingular(ResolventLabError):
    """The complementary block lambda*P_perp - P_perp S P_perp is not invertible."""


class GapLost(ResolventLabError):
    """The spectral gap closed along a perturbation sweep."""


class EmptySetError(ResolventLabError):
    """Hausdorff distance of an empty set is undefined."""


class SegmentHitsSpectrum(ResolventLabError):
    """A sampled line segment passes through the spectrum."""


class DiskHitsSpectrum(ResolventLabError):
    """A sampling disk contains a point of the spectrum."""


class StallDetected(ResolventLabError):
    """Path construction cannot make further progress."""


class MaxVerticesExceeded(ResolventLabError):
    """Path construction exceeded the vertex budget."""


class MatrixFormatError(ResolventLabError):
    """A matrix file or complex literal could not be parsed."""


class EigenvalueOutsideRegion(UserWarning):
    """An eigenvalue lies outside the scanned region."""
