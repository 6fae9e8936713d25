"""Local Lorentz generators, Wigner rotation rates and accumulated angles.

Momenta are dimensionless (p = p^3/mc, q = q^3/mc) and the mass shell is
gamma = sqrt(q^2 + 1).  For a circular orbit in the equatorial plane the
rotation rate has a single independent component, the 1-3 element; the
accumulated angle for the charged hole is

    Theta = 2 pi (tau/tau_s) * (2 z^2 - 3 z + 4 xi2) / (2 z^2 sqrt(z^2 - z + xi2))
            * M(q, p)

with the shared momentum factor

    M(q, p) = q sqrt(q^2+1) (sqrt(q^2+1) - q p / (sqrt(p^2+1) + 1)).

tau_s, the period of a photon circling at the mass radius, equals 2 pi in
these units and is absorbed into the prefactor; callers pass tau/tau_s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.optimize import brentq

from .errors import DomainError, HorizonError
from .spacetime import ChargedBlackHole, HORIZON_TOL, metric_potentials, outer_horizon

TAU_S = 2.0 * math.pi


def momentum_factor(q, p):
    """M(q, p), the momentum dependence shared by every rotation-rate formula.

    Vectorized over p.  M(q, q) reduces to q*gamma exactly, and M is odd
    under (q, p) -> (-q, -p).
    """
    gamma = np.sqrt(q * q + 1.0)
    p = np.asarray(p, dtype=float)
    return q * gamma * (gamma - q * p / (np.sqrt(p * p + 1.0) + 1.0))


@dataclass(frozen=True)
class OrbitParams:
    """Dimensionless configuration of the circular-orbit experiment.

    xi2: squared charge of the hole; z: orbit radius (units of r_s);
    q: centroid momentum; beta: width of the Gaussian momentum
    distribution; tau_ratio: elapsed proper time in units of tau_s.
    """

    xi2: float
    z: float
    q: float
    beta: float
    tau_ratio: float

    def __post_init__(self):
        if self.xi2 < 0:
            raise DomainError(f"xi2 must be >= 0, got {self.xi2}")
        if self.z <= 0:
            raise DomainError(f"orbit radius must be positive, got z={self.z}")
        if self.beta <= 0:
            raise DomainError(f"beta must be positive, got {self.beta}")
        if self.tau_ratio < 0:
            raise DomainError(f"tau_ratio must be >= 0, got {self.tau_ratio}")
        zp = outer_horizon(self.xi2)
        if zp is not None and self.z <= zp:
            raise HorizonError(
                f"orbit at z={self.z} is not outside the outer horizon z+={zp}"
            )

    @property
    def model(self) -> ChargedBlackHole:
        return ChargedBlackHole(self.xi2)


@dataclass(frozen=True)
class CircularOrbitState:
    """Frame-measured four-momentum and proper acceleration of the centroid."""

    gamma: float
    q0: float
    q3: float
    a1: float


def circular_orbit_state(model, z: float, q: float) -> CircularOrbitState:
    """Centroid kinematics on the circle of radius z with momentum q.

    q0 = gamma = sqrt(q^2+1), q3 = q (mass shell holds identically), and
    the only acceleration component is radial:
    a1 = gamma^2 e^{-B} (A' - (1/z)(gamma^2-1)/gamma^2).
    """
    a, b, a_prime = metric_potentials(model, z)
    gamma2 = q * q + 1.0
    gamma = math.sqrt(gamma2)
    a1 = gamma2 * math.exp(-b) * (a_prime - (q * q / gamma2) / z)
    return CircularOrbitState(gamma=gamma, q0=gamma, q3=q, a1=a1)


def lambda_circular(model, z: float, q: float) -> np.ndarray:
    """4x4 boost-rotation generator of the circular orbit.

    Four non-zero entries:
        lam[0,1] = lam[1,0] = gamma (gamma^2 - 1) e^{-B} (A' - 1/z)
        lam[1,3] = -lam[3,1] = -gamma^3 v e^{-B} (A' - 1/z),  v = q/gamma.
    lam @ ETA is antisymmetric, as for any Lorentz-algebra element.
    """
    _, b, a_prime = metric_potentials(model, z)
    gamma = math.sqrt(q * q + 1.0)
    fac = math.exp(-b) * (a_prime - 1.0 / z)
    lam = np.zeros((4, 4))
    lam[0, 1] = lam[1, 0] = gamma * q * q * fac          # gamma (gamma^2-1)
    lam[1, 3] = -q * (q * q + 1.0) * fac                 # -gamma^3 v = -gamma^2 q
    lam[3, 1] = -lam[1, 3]
    return lam


def wigner_rate_w13(model, z: float, q: float, p) -> float | np.ndarray:
    """The 1-3 rotation-rate element for particle momentum p.

    w13 = -e^{-B} (A' - 1/z) M(q, p); all other independent components
    vanish for equatorial circular motion.
    """
    _, b, a_prime = metric_potentials(model, z)
    return -math.exp(-b) * (a_prime - 1.0 / z) * momentum_factor(q, p)


def wigner_rate_matrix(model, z: float, q: float, p: float) -> np.ndarray:
    """3x3 antisymmetric rotation-rate matrix over spatial labels (1,2,3)."""
    w13 = float(wigner_rate_w13(model, z, q, p))
    w = np.zeros((3, 3))
    w[0, 2] = w13
    w[2, 0] = -w13
    return w


def theta_circular(params: OrbitParams, p) -> float | np.ndarray:
    """Accumulated rotation angle for the charged hole, closed form.

    Vanishes identically in p when q = 0, tau = 0, or 2z^2 - 3z + 4 xi2 = 0;
    diverges toward the horizons, where z^2 - z + xi2 -> 0.
    """
    z, xi2 = params.z, params.xi2
    s = z * z - z + xi2
    if s <= 0 or s / (z * z) < HORIZON_TOL:
        raise HorizonError(
            f"Theta is imaginary on or inside the horizons (z={z}, xi2={xi2})"
        )
    prefactor = (2 * z * z - 3 * z + 4 * xi2) / (2 * z * z * math.sqrt(s))
    return TAU_S * params.tau_ratio * prefactor * momentum_factor(params.q, p)


def _theta_radial_prefactor(z: float, xi2: float) -> float:
    # z-dependence of Theta with momentum and time factored out
    s = z * z - z + xi2
    return (2 * z * z - 3 * z + 4 * xi2) / (2 * z * z * math.sqrt(s))


def theta_zeros(xi2: float) -> list[float]:
    """Orbit radii where the rotation angle vanishes for every momentum.

    Real roots of 2z^2 - 3z + 4 xi2 = 0 (empty for xi2 > 9/32), keeping
    only radii outside the outer horizon.  Analytic roots are verified
    against a bracketed root-finder on the angle's radial prefactor.
    """
    if xi2 < 0:
        raise DomainError(f"xi2 must be >= 0, got {xi2}")
    disc = 9.0 - 32.0 * xi2
    if disc < 0:
        return []
    if disc == 0:
        roots = [0.75]
    else:
        d = math.sqrt(disc)
        roots = sorted([(3.0 - d) / 4.0, (3.0 + d) / 4.0])
    zp = outer_horizon(xi2)
    floor = zp if zp is not None else 0.0
    accessible = [r for r in roots if r > floor]
    if disc == 0:
        return accessible  # tangential zero, no sign change to bracket

    polished = []
    for root in accessible:
        half_gap = 0.5 * math.sqrt(disc) / 2.0
        eps = min(1e-3, 0.5 * half_gap, 0.5 * (root - floor))
        try:
            refined = brentq(
                lambda z: _theta_radial_prefactor(z, xi2),
                root - eps,
                root + eps,
                xtol=1e-12,
            )
        except ValueError:
            refined = root
        if abs(refined - root) > 1e-10:
            raise DomainError(
                f"root verification failed for xi2={xi2}: {refined} vs {root}"
            )
        polished.append(refined)
    return polished


def lambda_radial(model, z: float, v: float) -> tuple[np.ndarray, np.ndarray]:
    """Generator and rotation rate for radial free fall at local speed v.

    The generator is a pure boost, lam[0,1] = lam[1,0] = -gamma A' e^{-B};
    the associated 3x3 rotation rate is exactly zero, so the accumulated
    spin rotation is the identity whatever the elapsed time.
    """
    if abs(v) >= 1.0:
        raise DomainError(f"|v| must be < 1, got v={v}")
    _, b, a_prime = metric_potentials(model, z)
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    lam = np.zeros((4, 4))
    lam[0, 1] = lam[1, 0] = -gamma * a_prime * math.exp(-b)
    return lam, np.zeros((3, 3))


def rotation_matrix(theta: float) -> np.ndarray:
    """Rotation by theta about the 2-axis of the local frame."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def spin_rep(theta: float) -> np.ndarray:
    """Spin-1/2 representation of rotation_matrix(theta); unitary, det 1.

    spin_rep(a) @ spin_rep(b) == spin_rep(a + b) and the half angle makes
    it double-cover the rotation.
    """
    c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
    return np.array([[c, -s], [s, c]], dtype=complex)


def product_integral(rate_fn, tau_i: float, tau_f: float, steps: int) -> np.ndarray:
    """Time-ordered product of exp(rate * dtau) factors, later times leftmost.

    Each step exponentiates the rate at the step midpoint, so every factor
    is an exact group element and the global error is O(dtau^2).  rate_fn
    must return a square matrix of fixed shape with finite entries.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    dtau = (tau_f - tau_i) / steps
    acc = None
    for k in range(steps):
        rate = np.asarray(rate_fn(tau_i + (k + 0.5) * dtau), dtype=float)
        if not np.all(np.isfinite(rate)):
            raise DomainError(f"non-finite rate at step {k}")
        step = expm(rate * dtau)
        acc = step if acc is None else step @ acc
    return acc


def schwarzschild_rate(r: float, q: float, p) -> float | np.ndarray:
    """Static-frame rotation rate around the uncharged hole.

    ((1 - 3/(2r)) / (r sqrt(1 - 1/r))) M(q, p): zero on the circle
    r = 3/2, divergent toward the horizon r = 1.
    """
    if r - 1.0 < HORIZON_TOL:
        raise HorizonError(f"static frame rate singular at r={r} (horizon r=1)")
    prefactor = (1.0 - 1.5 / r) / (r * math.sqrt(1.0 - 1.0 / r))
    return prefactor * momentum_factor(q, p)


def kruskal_rate(r: float, q: float, p) -> float | np.ndarray:
    """Falling-frame (Kruskal tetrad) rotation rate; finite at r = 1.

    (1/(4r)) sqrt(e^{-r}/r) (3 + r) M(q, p), where q and p are the momenta
    the falling observer assigns.  Valid for all r > 0 down to the
    central singularity.
    """
    if r <= 0:
        raise DomainError(f"radius must be positive, got r={r}")
    prefactor = 0.25 / r * math.sqrt(math.exp(-r) / r) * (3.0 + r)
    return prefactor * momentum_factor(q, p)
