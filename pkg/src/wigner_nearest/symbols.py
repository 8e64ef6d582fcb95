"""Phase-space symbol specifications.

A symbol is a real square-integrable function F on R^2, given in one of four
forms: a Gaussian family N exp(-alpha (z-z0).A(z-z0)) with det A = 1, a radial
profile G(rho(z)), a dispersive-pulse snapshot exp(2 t omega_I(k)) W psi0(x -
nu(k) t, k), or a sampled grid (bilinear interpolation, zero outside).

Every symbol is callable as ``F(x, k)`` on broadcast numpy arrays, which is
the only contract the quadrature and coefficient layers rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import cross_wigner
from .quadrature import PhaseGrid

__all__ = [
    "StateVector",
    "GaussianSymbol",
    "RadialProfileSymbol",
    "WignerApproxSnapshot",
    "GridSymbol",
    "wigner_of_state",
]

DET_TOL = 1e-10


@dataclass(frozen=True)
class StateVector:
    """Expansion coefficients c_n of a signal psi = sum_n c_n e_n."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex).ravel()
        if coeffs.size == 0:
            raise ValueError("StateVector needs at least one coefficient")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("StateVector coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


def wigner_of_state(state: StateVector, x, k) -> np.ndarray:
    """W psi(z) = sum_{n,m} c_n conj(c_m) W(e_n, e_m)(z), real up to rounding."""
    c = state.coeffs
    x = np.asarray(x, dtype=float)
    k = np.asarray(k, dtype=float)
    total = np.zeros(np.broadcast_shapes(x.shape, k.shape), dtype=complex)
    for n in range(c.size):
        if c[n] == 0:
            continue
        # diagonal term once, off-diagonal pairs via 2*Re(...)
        total += (c[n] * np.conj(c[n])) * cross_wigner(n, n, x, k)
        for m in range(n):
            if c[m] == 0:
                continue
            total += 2.0 * np.real(c[n] * np.conj(c[m]) * cross_wigner(n, m, x, k))
    return np.real(total)


def _validate_quadratic_form(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.shape != (2, 2):
        raise ValueError("A must be a 2x2 matrix")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("A must be symmetric")
    eigs = np.linalg.eigvalsh(a)
    if eigs[0] <= 0:
        raise ValueError("A must be positive-definite")
    return a


def _quadratic_form(a: np.ndarray, z0, x, k) -> np.ndarray:
    dx = np.asarray(x, dtype=float) - z0[0]
    dk = np.asarray(k, dtype=float) - z0[1]
    return a[0, 0] * dx * dx + 2.0 * a[0, 1] * dx * dk + a[1, 1] * dk * dk


@dataclass(frozen=True)
class GaussianSymbol:
    """F(z) = amplitude * exp(-alpha (z - z0) . A (z - z0)), det A = 1."""

    amplitude: float
    alpha: float
    a_matrix: np.ndarray = field(default_factory=lambda: np.eye(2))
    z0: tuple = (0.0, 0.0)

    def __post_init__(self):
        if self.amplitude <= 0:
            raise ValueError("amplitude must be positive")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        a = _validate_quadratic_form(self.a_matrix)
        if abs(float(np.linalg.det(a)) - 1.0) >= DET_TOL:
            raise ValueError("A must have unit determinant")
        object.__setattr__(self, "a_matrix", a)
        object.__setattr__(self, "z0", (float(self.z0[0]), float(self.z0[1])))

    def __call__(self, x, k):
        return self.amplitude * np.exp(-self.alpha * _quadratic_form(self.a_matrix, self.z0, x, k))

    def radial_profile(self) -> "RadialProfileSymbol":
        amp, alpha = self.amplitude, self.alpha
        return RadialProfileSymbol(
            profile=lambda rho: amp * np.exp(-alpha * rho * rho),
            a_matrix=self.a_matrix,
            z0=self.z0,
        )


@dataclass(frozen=True)
class RadialProfileSymbol:
    """F(z) = G(rho(z)) with rho(z)^2 = (z - z0) . A (z - z0).

    A non-unit determinant is folded away on construction: with
    B = A / sqrt(det A) the same function is G~(rho~) where
    G~(r) = G((det A)^(1/4) r), so the stored matrix always has det 1.
    """

    profile: object  # callable rho -> G(rho), vectorized over ndarrays
    a_matrix: np.ndarray = field(default_factory=lambda: np.eye(2))
    z0: tuple = (0.0, 0.0)

    def __post_init__(self):
        if not callable(self.profile):
            raise ValueError("profile must be callable")
        a = _validate_quadratic_form(self.a_matrix)
        det = float(np.linalg.det(a))
        if abs(det - 1.0) >= DET_TOL:
            scale = det**0.25
            inner = self.profile
            object.__setattr__(self, "profile", lambda rho: inner(scale * rho))
            a = a / np.sqrt(det)
        object.__setattr__(self, "a_matrix", a)
        object.__setattr__(self, "z0", (float(self.z0[0]), float(self.z0[1])))

    def rho(self, x, k) -> np.ndarray:
        return np.sqrt(np.maximum(_quadratic_form(self.a_matrix, self.z0, x, k), 0.0))

    def __call__(self, x, k):
        return self.profile(self.rho(x, k))


@dataclass(frozen=True)
class WignerApproxSnapshot:
    """Transported-and-damped initial Wigner function at a fixed time.

    F(x, k) = exp(2 t omega_I(k)) * W psi0(x - nu(k) t, k), where psi0 is
    given by its Hermite coefficients, nu is the group velocity and omega_I
    the damping part of the dispersion relation.
    """

    initial: StateVector
    omega_i: object  # callable k -> Im omega(k)
    nu: object  # callable k -> group velocity
    t: float

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("t must be non-negative")
        if not callable(self.omega_i) or not callable(self.nu):
            raise ValueError("omega_i and nu must be callable")

    def __call__(self, x, k):
        x = np.asarray(x, dtype=float)
        k = np.asarray(k, dtype=float)
        x, k = np.broadcast_arrays(x, k)
        exponent = 2.0 * self.t * np.asarray(self.omega_i(k), dtype=float)
        if not np.all(np.isfinite(exponent)):
            raise ValueError("non-finite damping exponent 2*t*omega_I(k)")
        shifted = x - np.asarray(self.nu(k), dtype=float) * self.t
        return np.exp(exponent) * wigner_of_state(self.initial, shifted, k)


@dataclass(frozen=True)
class GridSymbol:
    """Bilinear interpolation of a sampled grid, zero outside the grid box."""

    grid: PhaseGrid

    def __post_init__(self):
        if np.iscomplexobj(self.grid.values):
            raise ValueError("grid symbols must be real-valued")

    def __call__(self, x, k):
        g = self.grid
        x = np.asarray(x, dtype=float)
        k = np.asarray(k, dtype=float)
        x, k = np.broadcast_arrays(x, k)
        inside = (x >= g.x_min) & (x <= g.x_max) & (k >= g.k_min) & (k <= g.k_max)

        hx = (g.x_max - g.x_min) / (g.nx - 1) if g.nx > 1 else 1.0
        hk = (g.k_max - g.k_min) / (g.nk - 1) if g.nk > 1 else 1.0
        fx = np.clip((x - g.x_min) / hx, 0.0, g.nx - 1.0)
        fk = np.clip((k - g.k_min) / hk, 0.0, g.nk - 1.0)
        ix = np.minimum(fx.astype(int), g.nx - 2) if g.nx > 1 else np.zeros_like(fx, dtype=int)
        jk = np.minimum(fk.astype(int), g.nk - 2) if g.nk > 1 else np.zeros_like(fk, dtype=int)
        tx = fx - ix
        tk = fk - jk

        v = g.values
        i1 = np.minimum(ix + 1, g.nx - 1)
        j1 = np.minimum(jk + 1, g.nk - 1)
        interp = (
            v[ix, jk] * (1 - tx) * (1 - tk)
            + v[i1, jk] * tx * (1 - tk)
            + v[ix, j1] * (1 - tx) * tk
            + v[i1, j1] * tx * tk
        )
        return np.where(inside, interp, 0.0)
