"""Growth-direction certificates and local-minimum certification.

At a gapped point z the compressions of R(z) and R(z)^2 onto the top
eigenspace of S(z) decide how the resolvent norm grows: a non-vanishing
first compression gives linear growth along phi = -arg<psi, R psi>, a
vanishing first but non-vanishing second gives quadratic growth along
phi = -arg<psi, R^2 psi>/2, and when zero lies in the numerical range of
both the point is a local-minimum candidate. Circle sampling certifies
minima independently of the algebraic conditions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import DiskHitsSpectrum, DomainError, SegmentHitsSpectrum
from .gap import SpectralGapReport
from .matcore import (
    distance_to_spectrum,
    ensure_matrix,
    resolvent,
    resolvent_norm,
    singularity_floor,
    smin_points,
)

FIRST_ORDER = "first-order"
SECOND_ORDER = "second-order"
MIN_CANDIDATE = "min-candidate"

# relative tolerances for deciding that the compressed quadratic forms vanish:
# eta1 against ||R(z)||, eta2 against ||R(z)||^2
ETA_RTOL = 1e-9

NUMERICAL_RADIUS_ANGLES = 256


@dataclass(frozen=True)
class GrowthCertificate:
    """Certified growth order at z with its direction and inner products.

    ``eta1`` is the numerical radius of the compression P R(z) P, ``eta2``
    the modulus of <psi, R^2 psi> for the chosen witness psi, and ``c2``
    the strictly positive quadratic coefficient <R psi, S(z) R psi>.
    ``phi`` is the growth direction angle, absent for min candidates.
    """

    z: complex
    order: str
    phi: float | None
    eta1: float
    eta2: float
    c2: float
    psi: np.ndarray

    def __post_init__(self):
        self.psi.setflags(write=False)


@dataclass(frozen=True)
class MinCandidateReport:
    holds: bool
    prp_norm: float
    zero_in_range: bool


@dataclass(frozen=True)
class GrowthVerification:
    fitted_c: float
    order_ok: bool


@dataclass(frozen=True)
class LocalMinCertificate:
    is_min: bool
    margin: float
    norm_at_center: float


_TWO_PI = 2.0 * math.pi


def _inside_open_arc(angle: float, start: float, end: float) -> bool:
    offset = (angle - start) % _TWO_PI
    return 0.0 < offset < (end - start)


@dataclass(frozen=True)
class ArcSet:
    """Pairwise disjoint open arcs on the circle.

    Each arc is stored as (start, end) with the start normalized into
    [0, 2 pi) and end - start its length, so arcs may wrap the seam; the
    total measure is at most 2 pi.
    """

    arcs: tuple

    def __post_init__(self):
        norm = []
        total = 0.0
        for s, e in self.arcs:
            if not e > s:
                raise DomainError(f"arc ({s}, {e}) has nonpositive length")
            total += e - s
            norm.append((s % _TWO_PI, s % _TWO_PI + (e - s)))
        if total > _TWO_PI + 1e-12:
            raise DomainError(f"arc measure {total} exceeds the full circle")
        for i, (s1, e1) in enumerate(norm):
            for s2, e2 in norm[i + 1:]:
                if (_inside_open_arc(s2, s1, e1) or _inside_open_arc(e2, s1, e1)
                        or _inside_open_arc(s1, s2, e2)):
                    raise DomainError("arcs overlap after normalization")
        object.__setattr__(self, "arcs", tuple(norm))

    def contains(self, angle: float) -> bool:
        return any(_inside_open_arc(angle, s, e) for s, e in self.arcs)


def increase_arcs(phi: float, theta: float) -> ArcSet:
    """The two open arcs ]phi - theta, phi + theta[ and its pi-shift.

    These are the directions along which the resolvent norm of a 2x2
    matrix with eigenvalue-ray angle phi and half-width theta increases
    away from the center.
    """
    if not 0.0 < theta <= math.pi / 2.0:
        raise DomainError(f"arc half-width must lie in (0, pi/2], got {theta}")
    return ArcSet(tuple((c - theta, c + theta) for c in (phi, phi + math.pi)))


def _hermitian_part(m: np.ndarray, theta: float) -> np.ndarray:
    phase = cmath.exp(1j * theta)
    return 0.5 * (phase * m + np.conj(phase) * m.conj().T)


def numerical_radius(m, n_angles: int = NUMERICAL_RADIUS_ANGLES):
    """max |<psi, M psi>| over unit psi, via the Hermitian-part angle sweep.

    Returns ``(radius, psi)`` where psi attains the sweep maximum. Accuracy
    is O(1/n_angles^2) relative; the m = 1 case is exact.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape == (1, 1):
        val = complex(m[0, 0])
        return abs(val), np.array([1.0 + 0j])
    best = -math.inf
    best_psi = None
    for j in range(n_angles):
        theta = 2.0 * math.pi * j / n_angles
        evals, evecs = np.linalg.eigh(_hermitian_part(m, theta))
        if evals[-1] > best:
            best = float(evals[-1])
            best_psi = evecs[:, -1]
    return best, best_psi


def numerical_range_distance(m, n_angles: int = NUMERICAL_RADIUS_ANGLES) -> float:
    """Distance from 0 to the (convex) numerical range of M.

    By convexity, 0 lies outside iff some rotated Hermitian part is
    strictly positive; the support sweep max_theta lambda_min(H(theta))
    is that signed distance (negative values mean 0 is interior).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape == (1, 1):
        return abs(complex(m[0, 0]))
    best = -math.inf
    for j in range(n_angles):
        theta = 2.0 * math.pi * j / n_angles
        evals = np.linalg.eigvalsh(_hermitian_part(m, theta))
        best = max(best, float(evals[0]))
    return max(best, 0.0)


def _quadratic_form(m: np.ndarray, psi: np.ndarray) -> complex:
    return complex(psi.conj() @ (m @ psi))


def numerical_range_zero_witness(m, tol: float):
    """Search for a unit psi with <psi, M psi> = 0 (within tol).

    Candidates: coordinate vectors, eigenvectors, the Hermitian-part
    interpolation that kills Re(e^{i theta} q) exactly followed by a phase
    solve for the imaginary part, over a theta grid; the best candidate is
    polished by local minimization of |q|^2. Returns ``(psi, |q(psi)|)``
    for the best vector found.
    """
    m = np.asarray(m, dtype=complex)
    dim = m.shape[0]
    if dim == 1:
        return np.array([1.0 + 0j]), abs(complex(m[0, 0]))

    candidates = [np.eye(dim, dtype=complex)[:, i] for i in range(dim)]
    candidates.extend(np.linalg.eig(m)[1].T)
    for j in range(16):
        theta = math.pi * j / 16.0
        h = _hermitian_part(m, theta)
        evals, evecs = np.linalg.eigh(h)
        if evals[0] > 0 or evals[-1] < 0:
            continue
        u_plus, u_minus = evecs[:, -1], evecs[:, 0]
        h_plus, h_minus = float(evals[-1]), float(evals[0])
        denom = h_plus - h_minus
        alpha = math.asin(math.sqrt(min(max(h_plus / denom, 0.0), 1.0))) if denom > 0 else 0.0
        ca, sa = math.cos(alpha), math.sin(alpha)
        # Re(e^{i theta} q) = 0 on this beta-circle; pick beta minimizing |q|
        base = ca * ca * _quadratic_form(m, u_plus) + sa * sa * _quadratic_form(m, u_minus)
        c_fwd = ca * sa * complex(u_plus.conj() @ (m @ u_minus))
        c_rev = ca * sa * complex(u_minus.conj() @ (m @ u_plus))
        betas = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
        vals = np.abs(base + np.exp(1j * betas) * c_fwd + np.exp(-1j * betas) * c_rev)
        beta = betas[int(np.argmin(vals))]
        candidates.append(ca * u_plus + cmath.exp(1j * beta) * sa * u_minus)

    def objective(x):
        v = x[:dim] + 1j * x[dim:]
        nrm = np.linalg.norm(v)
        if nrm == 0:
            return 1e300
        v = v / nrm
        return abs(_quadratic_form(m, v)) ** 2

    best_psi = min(candidates, key=lambda v: abs(_quadratic_form(m, v / np.linalg.norm(v))))
    best_psi = best_psi / np.linalg.norm(best_psi)
    if abs(_quadratic_form(m, best_psi)) > tol:
        x0 = np.concatenate([best_psi.real, best_psi.imag])
        res = minimize(objective, x0, method="Nelder-Mead",
                       options={"maxiter": 2000, "fatol": (0.1 * tol) ** 2, "xatol": 1e-12})
        v = res.x[:dim] + 1j * res.x[dim:]
        v = v / np.linalg.norm(v)
        if abs(_quadratic_form(m, v)) < abs(_quadratic_form(m, best_psi)):
            best_psi = v
    return best_psi, abs(_quadratic_form(m, best_psi))


def growth_direction(a, z: complex, report: SpectralGapReport,
                     n_angles: int = NUMERICAL_RADIUS_ANGLES) -> GrowthCertificate:
    """Select the certified growth direction at a gapped point z.

    For degenerate eigenspaces eta1 is the numerical radius of the
    compression P R(z) P, maximized over unit psi in ran P; the maximizing
    psi is returned with the certificate.
    """
    a = ensure_matrix(a)
    b = report.basis
    r = resolvent(a, z)
    s = r.conj().T @ r
    norm_r = math.sqrt(report.lambda_max)
    m1 = b.conj().T @ r @ b
    m2 = b.conj().T @ (r @ r) @ b

    def c2_of(psi_small: np.ndarray) -> float:
        rpsi = r @ (b @ psi_small)
        return float((rpsi.conj() @ (s @ rpsi)).real)

    eta1, psi1 = numerical_radius(m1, n_angles)
    if eta1 > ETA_RTOL * norm_r:
        val = _quadratic_form(m1, psi1)
        return GrowthCertificate(z, FIRST_ORDER, -cmath.phase(val), float(eta1),
                                 abs(_quadratic_form(m2, psi1)), c2_of(psi1), b @ psi1)

    tol2 = ETA_RTOL * norm_r ** 2
    if numerical_range_distance(m2, n_angles) <= tol2:
        witness, q_abs = numerical_range_zero_witness(m2, tol2)
        eta2 = q_abs if q_abs <= tol2 else numerical_range_distance(m2, n_angles)
        return GrowthCertificate(z, MIN_CANDIDATE, None, float(eta1),
                                 float(eta2), c2_of(witness), b @ witness)

    eta2, psi2 = numerical_radius(m2, n_angles)
    val2 = _quadratic_form(m2, psi2)
    return GrowthCertificate(z, SECOND_ORDER, -cmath.phase(val2) / 2.0, float(eta1),
                             float(eta2), c2_of(psi2), b @ psi2)


def min_candidate_check(a, z: complex, report: SpectralGapReport,
                        tol: float = ETA_RTOL) -> MinCandidateReport:
    """Test the two algebraic local-minimum conditions at z.

    Condition (i), the first compression vanishing on the whole eigenspace,
    is tested as ||P R(z) P|| <= tol * ||R(z)|| (equivalent by
    polarization); condition (ii) as 0 lying in the numerical range of
    P R(z)^2 P within tol * ||R(z)||^2. ``holds`` does not by itself
    certify a minimum; use :func:`certify_local_min` for that.
    """
    a = ensure_matrix(a)
    b = report.basis
    r = resolvent(a, z)
    norm_r = math.sqrt(report.lambda_max)
    m1 = b.conj().T @ r @ b
    m2 = b.conj().T @ (r @ r) @ b
    prp_norm = float(np.linalg.norm(m1, 2))
    zero_in = numerical_range_distance(m2) <= tol * norm_r ** 2
    return MinCandidateReport(prp_norm <= tol * norm_r and zero_in, prp_norm, zero_in)


def verify_growth(a, z: complex, cert: GrowthCertificate, r_max: float,
                  n_samples: int = 16) -> GrowthVerification:
    """Sample the certified segment and fit the largest growth constant.

    Checks ||R(zeta)|| - ||R(z)|| >= c |zeta - z|^p at all samples, p = 1
    for first order and p = 2 for second order; ``order_ok`` means the
    fitted c is strictly positive.
    """
    a = ensure_matrix(a)
    if cert.phi is None:
        raise DomainError("a min-candidate certificate carries no growth direction")
    if r_max <= 0 or n_samples < 1:
        raise DomainError("r_max and n_samples must be positive")
    p = 1 if cert.order == FIRST_ORDER else 2
    base = resolvent_norm(a, z)
    if not math.isfinite(base.norm):
        raise SegmentHitsSpectrum(f"base point {z} lies in the spectrum")
    ts = r_max * np.arange(1, n_samples + 1) / n_samples
    zetas = z + ts * cmath.exp(1j * cert.phi)
    smins = smin_points(a, zetas)
    a_norm = float(np.linalg.norm(a, 2))
    floors = np.array([singularity_floor(a_norm, zz) for zz in zetas])
    if np.any(smins <= floors):
        raise SegmentHitsSpectrum(f"segment [z, z + {r_max:g} e^(i phi)] meets the spectrum")
    growth = 1.0 / smins - base.norm
    fitted_c = float((growth / ts ** p).min())
    return GrowthVerification(fitted_c, fitted_c > 0.0)


def certify_local_min(a, z: complex, radius: float, n_angles: int) -> LocalMinCertificate:
    """Certify a local minimum by circle sampling at radius and radius/2.

    ``is_min`` requires every sampled norm to exceed ||R(z)|| strictly;
    ``margin`` is the smallest sampled excess.
    """
    a = ensure_matrix(a)
    if radius <= 0 or n_angles < 3:
        raise DomainError("radius must be positive and n_angles >= 3")
    if distance_to_spectrum(a, z) <= radius:
        raise DiskHitsSpectrum(f"disk of radius {radius:g} around {z} meets the spectrum")
    base = resolvent_norm(a, z)
    angles = 2.0 * math.pi * np.arange(n_angles) / n_angles
    ring = np.exp(1j * angles)
    pts = np.concatenate([z + radius * ring, z + 0.5 * radius * ring])
    norms = 1.0 / smin_points(a, pts)
    margin = float(norms.min() - base.norm)
    return LocalMinCertificate(bool(np.all(norms > base.norm)), margin, base.norm)


def theta_arc(k: float) -> float:
    """Half-width theta = pi/2 - arccos(gamma)/2 of the increase arcs.

    gamma = (k - sqrt(k^2 - 4))/2 computed in the cancellation-free form;
    theta lies in (pi/4, pi/2], equal to pi/2 exactly at k = 2.
    """
    if k < 2.0:
        raise DomainError(f"theta_arc requires k >= 2, got {k}")
    gamma = 2.0 / (k + math.sqrt(k * k - 4.0))
    return math.pi / 2.0 - 0.5 * math.acos(min(gamma, 1.0))


def torus_coverage(pairs, grid_points: int = 100_000) -> bool:
    """Do the open arcs ]phi_j - theta_j, phi_j + theta_j[ cover all directions mod pi?

    Tested on a uniform grid of [0, pi). Arcs are kept open; a grid point
    left uncovered is accepted only when there are at most two of them and
    each coincides with an arc endpoint that is shared by the pi-shifted
    copy of an arc (the k = 2 case, where a single arc covers everything
    except the exact perpendicular direction).
    """
    pairs = [(float(p), float(t)) for p, t in pairs]
    for _, theta in pairs:
        if not (math.pi / 4.0 < theta <= math.pi / 2.0 + 1e-15):
            raise DomainError(f"arc half-width {theta} outside (pi/4, pi/2]")
    ts = math.pi * np.arange(grid_points) / grid_points
    covered = np.zeros(grid_points, dtype=bool)
    for phi, theta in pairs:
        x = np.mod(ts - (phi - theta), math.pi)
        covered |= (x > 0.0) & (x < 2.0 * theta)
    uncovered = ts[~covered]
    if uncovered.size == 0:
        return True
    if uncovered.size > 2:
        return False
    lefts = np.array([(phi - theta) % math.pi for phi, theta in pairs])
    rights = np.array([(phi + theta) % math.pi for phi, theta in pairs])
    step = math.pi / grid_points

    def near(u, ends):
        d = np.abs(ends - u)
        return bool(np.any(np.minimum(d, math.pi - d) <= 0.5 * step))

    return all(near(u, lefts) and near(u, rights) for u in uncovered)
