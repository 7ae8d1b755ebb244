"""Parameter space, logarithmic spectrum and thermal-phase amplitudes.

Everything downstream (synthesis, evolution, hardware export) is a pure
function of the quadruple (n_levels, a, sigma, omega) defined here.
Internally hbar = omega = 1; omega only enters when labeling the complex
coordinate s = sigma + i*omega*t of the output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

__all__ = [
    "SimulationParams",
    "Spectrum",
    "AmplitudeVector",
    "log_spectrum",
    "riemann_amplitudes",
]


@dataclass(frozen=True)
class SimulationParams:
    """Defining quadruple of a simulation run.

    n_levels : chain length N (>= 1)
    a        : shift of the zeta series, 0 < a <= 1
    sigma    : real part of s; must exceed 1 for the series to converge
    omega    : angular frequency scale, used only for axis labeling
    """

    n_levels: int
    a: float
    sigma: float
    omega: float = 1.0

    def __post_init__(self):
        if int(self.n_levels) != self.n_levels or self.n_levels < 1:
            raise ValidationError(f"n_levels must be a positive integer, got {self.n_levels}")
        if not (0.0 < self.a <= 1.0):
            raise ValidationError(f"a must lie in (0, 1], got {self.a}")
        if not self.sigma > 1.0:
            raise ValidationError(f"sigma must exceed 1 (series convergence), got {self.sigma}")
        if not self.omega > 0.0:
            raise ValidationError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalue targets ln(n + a), n = 0..N-1, in units hbar*omega."""

    energies: np.ndarray = field(repr=False)

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float)
        object.__setattr__(self, "energies", e)
        if e.ndim != 1 or e.size < 1:
            raise ValidationError("spectrum must be a nonempty 1-d array")
        if e.size > 1 and not np.all(np.diff(e) > 0):
            raise ValidationError("spectrum must be strictly increasing")

    def __len__(self):
        return self.energies.size


@dataclass(frozen=True)
class AmplitudeVector:
    """Unit-norm ground-site overlaps C_n = norm_constant * (n+a)**(-sigma/2)."""

    amplitudes: np.ndarray = field(repr=False)
    norm_constant: float = 1.0

    def __post_init__(self):
        c = np.asarray(self.amplitudes, dtype=float)
        object.__setattr__(self, "amplitudes", c)
        if c.ndim != 1 or c.size < 1:
            raise ValidationError("amplitudes must be a nonempty 1-d array")

    def __len__(self):
        return self.amplitudes.size


def log_spectrum(params: SimulationParams) -> Spectrum:
    """Return the logarithmic spectrum [ln(a), ln(1+a), ..., ln(N-1+a)]."""
    n = np.arange(params.n_levels, dtype=float)
    return Spectrum(np.log(n + params.a))


def riemann_amplitudes(params: SimulationParams) -> AmplitudeVector:
    """Return the normalized amplitudes C_n proportional to (n+a)**(-sigma/2).

    The squared amplitudes are the Dirichlet weights of the truncated
    series at t = 0; the normalization constant is the inverse square
    root of their unnormalized sum.
    """
    n = np.arange(params.n_levels, dtype=float)
    weights = (n + params.a) ** (-params.sigma)
    norm_constant = 1.0 / np.sqrt(weights.sum())
    return AmplitudeVector(norm_constant * np.sqrt(weights), float(norm_constant))
