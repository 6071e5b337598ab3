"""Harary matrix assembly and its spectrum.

Two independent routes give the largest eigenvalue: :func:`spectral_radius`
runs power iteration from the all-ones vector (which also yields the positive
Perron vector), and :func:`full_spectrum` diagonalizes with cyclic Jacobi
rotations. Callers that need certified inequalities compare both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphError, NonConvergenceError
from .families import Complete, CompleteBipartite, FamilySpec
from .graph import DistanceMatrix, Graph, apsp

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200_000
# iterations of the plain method before switching to the shifted one
SHIFT_AFTER = 2_000
SHIFT = 1.0


@dataclass(frozen=True)
class HararyMatrix:
    n: int
    entries: np.ndarray = field(repr=False)

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    vector: np.ndarray = field(repr=False)
    iterations: int
    residual: float
    shifted: bool = False


def harary_matrix(d: DistanceMatrix) -> HararyMatrix:
    dist = np.asarray(d.d, dtype=np.float64)
    if np.any(~np.isfinite(dist)) or np.any(dist[~np.eye(d.n, dtype=bool)] < 1):
        raise GraphError("distance matrix has missing or non-positive off-diagonal entries")
    h = np.zeros((d.n, d.n))
    off = ~np.eye(d.n, dtype=bool)
    h[off] = 1.0 / dist[off]
    h.setflags(write=False)
    return HararyMatrix(d.n, h)


def harary_of(g: Graph) -> HararyMatrix:
    return harary_matrix(apsp(g))


def spectral_radius(
    h: HararyMatrix, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> SpectralResult:
    """Perron root and unit Perron vector of an irreducible Harary matrix.

    Power iteration from the all-ones vector; the radius is the Rayleigh
    quotient, and the loop stops once ``max|RD x - rho x| <= tol``. If the
    plain iteration has not converged after ``SHIFT_AFTER`` steps (a negative
    eigenvalue of nearly equal modulus), it continues on ``RD + I``, which has
    the same eigenvectors and a better separated top eigenvalue.
    """
    a = h.entries
    n = h.n
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0, 0.0)
    x = np.full(n, 1.0 / math.sqrt(n))
    shift = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol:
            if np.any(x <= 0):
                raise NonConvergenceError(it, residual)
            return SpectralResult(rho, x, it - 1, residual, shifted=shift != 0.0)
        if it == SHIFT_AFTER:
            shift = SHIFT
        y = ax + shift * x
        x = y / np.linalg.norm(y)
    raise NonConvergenceError(max_iter, residual)


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations (unsorted)."""
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    scale = max(float(np.linalg.norm(a)), 1e-300)
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        if math.sqrt(2.0 * float(np.sum(a[iu] ** 2))) <= tol * scale:
            return a.diagonal().copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp, rq = a[p].copy(), a[q].copy()
                a[p], a[q] = c * rp - s * rq, s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * cp - s * cq, s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise RuntimeError(f"Jacobi rotations did not converge in {max_sweeps} sweeps")


def full_spectrum(h: HararyMatrix) -> list[float]:
    """All eigenvalues of ``RD``, largest first."""
    return sorted((float(v) for v in jacobi_eigenvalues(h.entries)), reverse=True)


def harary_energy(h: HararyMatrix) -> float:
    return sum(abs(v) for v in full_spectrum(h))


def rho(g: Graph) -> float:
    return spectral_radius(harary_of(g)).radius


def rho_pair(g: Graph) -> tuple[float, float]:
    """Largest eigenvalue by power iteration and by Jacobi, for cross-checked margins."""
    h = harary_of(g)
    return spectral_radius(h).radius, full_spectrum(h)[0]


def rho_closed_form(spec: FamilySpec) -> float:
    match spec:
        case Complete(n):
            return float(n - 1)
        case CompleteBipartite(n1, n2):
            n = n1 + n2
            return (n - 2 + math.sqrt(n * n + 12 * n1 * n2)) / 4
    raise GraphError(f"no closed form for {type(spec).__name__}")
