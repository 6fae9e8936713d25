"""Gaussian trig moments, Bell-state reduced density matrices, concurrence.

The two-particle wave packet is separable in momentum with identical
Gaussian weights w(p) = exp(-(p-q)^2/beta^2) / (sqrt(pi) beta) for each
particle, and a maximally entangled spin part.  Tracing out momentum
after both spins pick up a momentum-dependent rotation leaves matrices
that depend only on the two averages

    C = <cos Theta>,   S = <sin Theta>

over w(p).  The closed forms are checked against a brute-force average of
rotated projectors, which is the reference implementation whenever the
two disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_hermite

from .errors import ConvergenceError, DomainError, NumericalError


@dataclass(frozen=True)
class BellState:
    """One of the four maximally entangled two-spin states."""

    tag: str
    vector: tuple[float, float, float, float]

    def array(self) -> np.ndarray:
        return np.array(self.vector)

    def projector(self) -> np.ndarray:
        v = self.array()
        return np.outer(v, v).astype(complex)


_INV_SQRT2 = 1.0 / math.sqrt(2.0)
CHI1 = BellState("chi1", (_INV_SQRT2, 0.0, 0.0, _INV_SQRT2))
CHI2 = BellState("chi2", (_INV_SQRT2, 0.0, 0.0, -_INV_SQRT2))
CHI3 = BellState("chi3", (0.0, _INV_SQRT2, _INV_SQRT2, 0.0))
CHI4 = BellState("chi4", (0.0, _INV_SQRT2, -_INV_SQRT2, 0.0))
BELL_STATES = (CHI1, CHI2, CHI3, CHI4)


def bell_state(tag: str) -> BellState:
    for chi in BELL_STATES:
        if chi.tag == tag:
            return chi
    raise DomainError(f"unknown Bell state {tag!r}; expected chi1..chi4")


@dataclass(frozen=True)
class MomentumDistribution:
    """Normalized Gaussian weight centered at q with width beta."""

    q: float
    beta: float

    def __post_init__(self):
        if self.beta <= 0:
            raise DomainError(f"beta must be positive, got {self.beta}")

    def weight(self, p) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        u = (p - self.q) / self.beta
        return np.exp(-u * u) / (math.sqrt(math.pi) * self.beta)


@dataclass(frozen=True)
class QuadConfig:
    """Adaptive Gauss-Hermite settings: double nodes until converged.

    Doubling stops once successive estimates agree to `tol` or the node
    count reaches `max_nodes`; a cap hit with residual above
    `fail_residual` raises ConvergenceError instead of returning a value.
    """

    tol: float = 1e-10
    start_nodes: int = 64
    max_nodes: int = 2048
    fail_residual: float = 1e-6

    def __post_init__(self):
        if self.start_nodes < 2:
            raise DomainError("start_nodes must be >= 2")
        if self.max_nodes < 2 * self.start_nodes:
            raise DomainError("max_nodes must be at least twice start_nodes")


DEFAULT_QUAD = QuadConfig()

# Node tables are computed once per count and shared; immutable thereafter.
_HERMITE_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _hermite_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _HERMITE_CACHE:
        x, w = roots_hermite(n)
        w = w / math.sqrt(math.pi)
        keep = w > 0.0  # weights underflow beyond |x| ~ 27; drop dead nodes
        x = x[keep].copy()
        w = w[keep].copy()
        x.setflags(write=False)
        w.setflags(write=False)
        _HERMITE_CACHE[n] = (x, w)
    return _HERMITE_CACHE[n]


def _adaptive_average(rows_fn, dist: MomentumDistribution, quad: QuadConfig):
    """Average each row of rows_fn(p) over the distribution, adaptively.

    rows_fn maps an array of momenta to an array whose last axis runs over
    the nodes.  Returns (averages, residual, nodes_used).
    """
    prev = None
    n = quad.start_nodes
    while True:
        x, w = _hermite_rule(n)
        p = dist.q + dist.beta * x
        rows = np.asarray(rows_fn(p))
        if not np.all(np.isfinite(rows)):
            raise DomainError("integrand is not finite on the quadrature support")
        est = rows @ w
        if prev is not None:
            residual = float(np.abs(est - prev).max())
            if residual < quad.tol:
                return est, residual, n
            if n >= quad.max_nodes:
                if residual > quad.fail_residual:
                    raise ConvergenceError(
                        f"residual {residual:.3e} at the {n}-node cap "
                        f"(limit {quad.fail_residual:.1e})"
                    )
                return est, residual, n
        prev = est
        n = min(2 * n, quad.max_nodes)


def _finite_theta(theta_fn, p) -> np.ndarray:
    th = np.asarray(theta_fn(p), dtype=float)
    if not np.all(np.isfinite(th)):
        raise DomainError("theta is not finite on the quadrature support")
    return th


@dataclass(frozen=True)
class TrigMoments:
    """<cos Theta> and <sin Theta> plus the achieved-tolerance report."""

    C: float
    S: float
    residual: float = 0.0
    nodes: int = 0


def trig_moments(theta_fn, dist: MomentumDistribution,
                 quad: QuadConfig = DEFAULT_QUAD) -> TrigMoments:
    """Gaussian averages of cos Theta(p) and sin Theta(p).

    theta_fn must accept an array of momenta.  Under the probability
    weight, C^2 + S^2 <= 1 always, with equality only for constant Theta.
    """

    def rows(p):
        th = _finite_theta(theta_fn, p)
        return np.vstack([np.cos(th), np.sin(th)])

    (c, s), residual, nodes = _adaptive_average(rows, dist, quad)
    return TrigMoments(C=float(c), S=float(s), residual=residual, nodes=nodes)


def reduced_density_closed(bell: BellState, m: TrigMoments) -> np.ndarray:
    """Final two-spin density matrix in closed form.

    Built from K = C^2 + S^2, X = C^2 - S^2 and Y = 2 C S; the sign of the
    Y cross terms follows from direct integration of the rotated Bell
    projectors.  All four outputs share the eigenvalue pair (1 +- K)/2 on
    a two-dimensional support, hence equal concurrence K.
    """
    K = m.C * m.C + m.S * m.S
    X = m.C * m.C - m.S * m.S
    Y = 2.0 * m.C * m.S
    if bell.tag in ("chi1", "chi4"):
        sgn = 1.0 if bell.tag == "chi1" else -1.0
        a = 1.0 + sgn * K
        b = 1.0 - sgn * K
        rho = np.array([
            [a, 0.0, 0.0, a],
            [0.0, b, -b, 0.0],
            [0.0, -b, b, 0.0],
            [a, 0.0, 0.0, a],
        ])
    elif bell.tag in ("chi2", "chi3"):
        sgn = 1.0 if bell.tag == "chi2" else -1.0
        a = 1.0 + sgn * X
        b = 1.0 - sgn * X
        y = sgn * Y
        rho = np.array([
            [a, y, y, -a],
            [y, b, b, -y],
            [y, b, b, -y],
            [-a, -y, -y, a],
        ])
    else:
        raise DomainError(f"unknown Bell state {bell.tag!r}")
    return 0.25 * rho.astype(complex)


def reduced_density_bruteforce(bell: BellState, theta_fn,
                               dist: MomentumDistribution,
                               quad: QuadConfig = DEFAULT_QUAD) -> np.ndarray:
    """Reference reduced density matrix from the component integrals.

    Each entry is a sum of products of two one-dimensional averages of
    half-angle rotation entries, one per particle.  Both particles carry
    the same distribution, so a single 2x2x2x2 second-moment tensor
    m[i,a,k,c] = <D[i,a] D[k,c]> feeds the whole contraction.
    """

    def rows(p):
        th = 0.5 * _finite_theta(theta_fn, p)
        c, s = np.cos(th), np.sin(th)
        d = np.empty((2, 2, p.size))
        d[0, 0] = c
        d[0, 1] = -s
        d[1, 0] = s
        d[1, 1] = c
        prod = d[:, :, None, None, :] * d[None, None, :, :, :]
        return prod.reshape(16, -1)

    flat, _, _ = _adaptive_average(rows, dist, quad)
    moments = flat.reshape(2, 2, 2, 2)
    chi = bell.array().reshape(2, 2)
    rho = np.einsum("iakc,jbld,ab,cd->ijkl", moments, moments, chi, chi)
    return rho.reshape(4, 4).astype(complex)


_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SYSY = np.kron(_SIGMA_Y, _SIGMA_Y)


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    return _SYSY @ rho.conj() @ _SYSY


def wootters_concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence max{0, l1 - l2 - l3 - l4}.

    The l_i are the decreasingly ordered square roots of the eigenvalues
    of rho @ spin_flip(rho); those are non-negative for any physical rho,
    so an eigenvalue below -1e-6 flags an invalid input while smaller
    negatives are clipped as round-off.  The l_i themselves are computed
    as the singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)), an
    equivalent form whose zero values carry eps-level noise instead of
    the sqrt(eps) a generic eigensolver leaves on rho rho~.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise DomainError(f"expected a 4x4 matrix, got shape {rho.shape}")
    evals = np.linalg.eigvals(rho @ spin_flip(rho))
    if np.abs(evals.imag).max() > 1e-6:
        raise NumericalError(f"complex eigenvalue {evals[np.abs(evals.imag).argmax()]}")
    if evals.real.min() < -1e-6:
        raise NumericalError(f"negative eigenvalue {evals.real.min():.3e} of rho rho~")
    w, u = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    root = (u * np.sqrt(np.clip(w, 0.0, None))) @ u.conj().T
    lam = np.linalg.svd(root @ _SYSY @ root.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0."""
    total = 0.0
    for v in (x, 1.0 - x):
        if v > 0.0:
            total -= v * math.log2(v)
    return total


def entanglement_of_formation(concurrence: float) -> float:
    """Entanglement of formation h((1 + sqrt(1 - C^2))/2) for C in [0, 1]."""
    if not -1e-12 <= concurrence <= 1.0 + 1e-12:
        raise DomainError(f"concurrence must lie in [0, 1], got {concurrence}")
    c = min(max(concurrence, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


@dataclass(frozen=True)
class DensityMatrixDiagnostics:
    hermiticity: float
    trace_error: float
    min_eigenvalue: float

    def is_physical(self, herm_tol=1e-12, trace_tol=1e-10, psd_tol=-1e-10) -> bool:
        return (self.hermiticity < herm_tol
                and self.trace_error < trace_tol
                and self.min_eigenvalue > psd_tol)


def density_matrix_diagnostics(rho: np.ndarray) -> DensityMatrixDiagnostics:
    """Hermiticity residual, trace deviation and smallest eigenvalue."""
    rho = np.asarray(rho)
    herm = float(np.abs(rho - rho.conj().T).max())
    trace = float(abs(rho.trace() - 1.0))
    min_eig = float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min())
    return DensityMatrixDiagnostics(herm, trace, min_eig)
