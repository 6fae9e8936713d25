"""Static spherically symmetric metrics, tetrads, horizons and Kruskal maps.

Everything is dimensionless: c = 1 and radii are measured in units of the
mass radius, z = r / r_s.  The line element handled here is

    ds^2 = -e^{2A(z)} dt^2 + e^{2B(z)} dz^2 + z^2 (dtheta^2 + sin^2 theta dphi^2)

with asymptotically flat potentials A, B.  The charged-black-hole closed
form e^{2A} = e^{-2B} = 1 - 1/z + xi2/z^2 is built in; generic models
supply their own potentials together with analytic derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, HorizonError

# Minkowski metric in the local inertial frame, signature (-, +, +, +).
ETA = np.diag([-1.0, 1.0, 1.0, 1.0])

# |e^{2A}| below this counts as sitting on a horizon.
HORIZON_TOL = 1e-9


@dataclass(frozen=True)
class MetricModel:
    """User-defined metric potentials with analytic radial derivatives.

    A and B map the dimensionless radius z to the potentials of the line
    element above; A_prime and B_prime are dA/dz and dB/dz.  No numerical
    differentiation happens in the library, so derivative noise cannot
    leak into root-finding.
    """

    A: Callable[[float], float]
    B: Callable[[float], float]
    A_prime: Callable[[float], float]
    B_prime: Callable[[float], float]
    description: str = ""


@dataclass(frozen=True)
class ChargedBlackHole:
    """Charged (mass + charge) black hole, e^{2A} = 1 - 1/z + xi2/z^2.

    xi2 is the squared dimensionless charge.  Two horizons exist for
    xi2 < 1/4, one degenerate horizon at z = 1/2 for xi2 = 1/4, and none
    (naked singularity) for xi2 > 1/4.
    """

    xi2: float

    def __post_init__(self):
        if self.xi2 < 0:
            raise DomainError(f"xi2 must be >= 0, got {self.xi2}")

    @property
    def description(self) -> str:
        return f"charged black hole (xi2={self.xi2})"

    def metric_factor(self, z: float) -> float:
        """e^{2A(z)} in closed form; negative between the horizons."""
        if z <= 0:
            raise DomainError(f"radius must be positive, got z={z}")
        return 1.0 - 1.0 / z + self.xi2 / (z * z)

    def A(self, z: float) -> float:
        return 0.5 * math.log(self._guarded_factor(z))

    def B(self, z: float) -> float:
        return -self.A(z)

    def A_prime(self, z: float) -> float:
        g = self._guarded_factor(z)
        gp = 1.0 / (z * z) - 2.0 * self.xi2 / (z * z * z)
        return 0.5 * gp / g

    def B_prime(self, z: float) -> float:
        return -self.A_prime(z)

    def _guarded_factor(self, z: float) -> float:
        g = self.metric_factor(z)
        if g < HORIZON_TOL:
            raise HorizonError(
                f"z={z} is on or inside a horizon of {self.description} "
                f"(e^{{2A}}={g:.3e})"
            )
        return g


def horizons(xi2: float) -> list[float]:
    """Real roots of z^2 - z + xi2 = 0, ascending.

    These are the event-horizon radii of the charged hole: two for
    xi2 < 1/4, the single degenerate root 1/2 for xi2 = 1/4, none for
    xi2 > 1/4.  The product-of-roots form keeps the small root accurate.
    """
    if xi2 < 0:
        raise DomainError(f"xi2 must be >= 0, got {xi2}")
    disc = 1.0 - 4.0 * xi2
    if disc < 0:
        return []
    if disc == 0:
        return [0.5]
    z_plus = 0.5 * (1.0 + math.sqrt(disc))
    z_minus = xi2 / z_plus if z_plus > 0 else 0.0
    return [z_minus, z_plus]


def outer_horizon(xi2: float) -> float | None:
    """Largest horizon radius, or None for a naked singularity."""
    roots = horizons(xi2)
    return roots[-1] if roots else None


def metric_potentials(model, z: float) -> tuple[float, float, float]:
    """(A, B, dA/dz) at radius z, guarded against horizons.

    Raises DomainError for z <= 0 and HorizonError when e^{2A} falls
    below HORIZON_TOL (on or inside a horizon, where the Wigner angle
    turns imaginary).
    """
    if z <= 0:
        raise DomainError(f"radius must be positive, got z={z}")
    if isinstance(model, ChargedBlackHole):
        model._guarded_factor(z)
        return model.A(z), model.B(z), model.A_prime(z)
    a = model.A(z)
    if not math.isfinite(a) or math.exp(2.0 * a) < HORIZON_TOL:
        raise HorizonError(f"e^{{2A}} vanishes at z={z} for {model.description!r}")
    return a, model.B(z), model.A_prime(z)


@dataclass(frozen=True)
class Tetrad:
    """Diagonal orthonormal frame components for the static chart.

    e0t, e1r, e2theta, e3phi are the non-zero entries of e_a^mu; the frame
    satisfies e_a^mu e_b^nu g_munu = eta_ab at its construction point.
    """

    e0t: float
    e1r: float
    e2theta: float
    e3phi: float

    def as_matrix(self) -> np.ndarray:
        """Columns are the frame vectors in coordinate components."""
        return np.diag([self.e0t, self.e1r, self.e2theta, self.e3phi])


def tetrad_static(model, z: float, theta: float) -> Tetrad:
    """Static-observer tetrad (e^{-A}, e^{-B}, 1/z, 1/(z sin theta)).

    Diverges on horizons (HorizonError) and on the polar axis
    (DomainError at sin theta = 0).
    """
    a, b, _ = metric_potentials(model, z)
    sin_t = math.sin(theta)
    if abs(sin_t) < 1e-12:
        raise DomainError(f"tetrad undefined on the polar axis (theta={theta})")
    return Tetrad(math.exp(-a), math.exp(-b), 1.0 / z, 1.0 / (z * sin_t))


def metric_matrix(model, z: float, theta: float) -> np.ndarray:
    """Coordinate metric diag(-e^{2A}, e^{2B}, z^2, z^2 sin^2 theta)."""
    a, b, _ = metric_potentials(model, z)
    s = math.sin(theta)
    return np.diag([-math.exp(2 * a), math.exp(2 * b), z * z, z * z * s * s])


# ---------------------------------------------------------------------------
# Kruskal chart of the uncharged hole (xi2 = 0), still in units r_s = c = 1.
# The defining relations are
#     R^2 - T^2 = 4 (r - 1) e^r,          T/R = tanh(t/2)   (exterior)
# with the roles of T and R swapped inside the horizon.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KruskalPoint:
    """A point of the Kruskal chart together with its areal radius."""

    T: float
    R: float
    r: float


def kruskal_map(r: float, t: float) -> KruskalPoint:
    """Map (r, t) of the static chart to Kruskal (T, R).

    Exterior branch for r >= 1, future-interior branch for 0 < r < 1;
    both satisfy R^2 - T^2 = 4 (r - 1) e^r.
    """
    if r <= 0:
        raise DomainError(f"radius must be positive, got r={r}")
    if r >= 1.0:
        amp = 2.0 * math.sqrt(r - 1.0) * math.exp(0.5 * r)
        return KruskalPoint(amp * math.sinh(0.5 * t), amp * math.cosh(0.5 * t), r)
    amp = 2.0 * math.sqrt(1.0 - r) * math.exp(0.5 * r)
    return KruskalPoint(amp * math.cosh(0.5 * t), amp * math.sinh(0.5 * t), r)


def kruskal_radius(T: float, R: float) -> float:
    """Invert R^2 - T^2 = 4 (r - 1) e^r for the areal radius r.

    The left side ranges over (-4, inf) for r in (0, inf) and the map is
    strictly increasing, so a bracketed bisection is exact business.
    Targets at or below -4 lie beyond the r = 0 singularity.
    """
    target = R * R - T * T
    if target <= -4.0:
        raise DomainError(
            f"(T={T}, R={R}) lies past the r=0 singularity (R^2-T^2={target})"
        )

    def g(r: float) -> float:
        return 4.0 * (r - 1.0) * math.exp(r) - target

    lo, hi = 1e-300, 1.0
    while g(hi) < 0.0:
        lo = hi
        hi *= 2.0
        if hi > 1e6:
            raise DomainError(f"no bracket found for R^2-T^2={target}")
    # bisection to ~1e-13 relative tolerance
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def frame_transform_matrix(p: KruskalPoint) -> np.ndarray:
    """Local frame map from the static tetrad to the Kruskal tetrad.

    A boost along the radial axis built from the point's (T, R); satisfies
    T eta T^t = eta.  Real only outside the horizon (r > 1).
    """
    if p.r - 1.0 < HORIZON_TOL:
        raise HorizonError(f"frame transform singular at the horizon (r={p.r})")
    a = 0.5 * math.sqrt(math.exp(-p.r) / (p.r - 1.0))
    out = np.eye(4)
    out[0, 0] = a * p.R
    out[0, 1] = -a * p.T
    out[1, 0] = -a * p.T
    out[1, 1] = a * p.R
    return out


def kruskal_tetrad(r: float, theta: float = 0.5 * math.pi) -> Tetrad:
    """Free-falling frame adapted to the Kruskal chart; finite at r = 1.

    Components (sqrt(r) e^{r/2}, sqrt(r) e^{r/2}, 1/r, 1/(r sin theta)).
    """
    if r <= 0:
        raise DomainError(f"radius must be positive, got r={r}")
    sin_t = math.sin(theta)
    if abs(sin_t) < 1e-12:
        raise DomainError(f"tetrad undefined on the polar axis (theta={theta})")
    amp = math.sqrt(r) * math.exp(0.5 * r)
    return Tetrad(amp, amp, 1.0 / r, 1.0 / (r * sin_t))


def kruskal_metric_matrix(r: float, theta: float = 0.5 * math.pi) -> np.ndarray:
    """Kruskal-chart metric diag(-(1/r)e^{-r}, (1/r)e^{-r}, r^2, r^2 sin^2)."""
    if r <= 0:
        raise DomainError(f"radius must be positive, got r={r}")
    f = math.exp(-r) / r
    s = math.sin(theta)
    return np.diag([-f, f, r * r, r * r * s * s])
