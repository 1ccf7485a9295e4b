"""Configuration types for the line-supported d'Alembertian perturbation."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from ..errors import AliasWarning, ContractViolation, DimensionError

#: required ratio of grid length to the largest Gaussian width
PADDING_FACTOR = 12.0


@dataclass(frozen=True)
class Gaussian1D:
    """L2-normalized Gaussian on the line: (pi w^2)^(-1/4) exp(-(t-c)^2 / 2 w^2)."""

    center: float = 0.0
    width: float = 1.0

    def __post_init__(self):
        if self.width <= 0.0:
            raise ContractViolation("Gaussian width must be positive")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return (np.pi * self.width**2) ** -0.25 * np.exp(
            -((t - self.center) ** 2) / (2.0 * self.width**2)
        )

    def hat(self, h):
        """Continuum Fourier transform (unitary convention)."""
        h = np.asarray(h, dtype=float)
        return (
            (self.width**2 / np.pi) ** 0.25
            * np.exp(-0.5 * self.width**2 * h**2)
            * np.exp(-1j * h * self.center)
        )


@dataclass(frozen=True)
class Gaussian3D:
    """L2-normalized isotropic Gaussian in R^3."""

    center: tuple = (0.0, 0.0, 0.0)
    width: float = 1.0

    def __post_init__(self):
        if self.width <= 0.0:
            raise ContractViolation("Gaussian width must be positive")
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        r2 = np.sum((y - np.asarray(self.center)) ** 2, axis=-1)
        return (np.pi * self.width**2) ** -0.75 * np.exp(-r2 / (2.0 * self.width**2))


@dataclass(frozen=True)
class LineConfig:
    """A time-like straight line y + s*(gamma_v, gamma_v v) with scalar coupling."""

    y: tuple = (0.0, 0.0, 0.0, 0.0)
    v: tuple = (0.0, 0.0, 0.0)
    theta: float = 0.0

    def __post_init__(self):
        y = tuple(float(c) for c in self.y)
        v = tuple(float(c) for c in self.v)
        if len(y) != 4 or len(v) != 3:
            raise DimensionError("y must be a 4-vector and v a 3-vector")
        if np.linalg.norm(v) >= 1.0:
            raise ContractViolation(f"|v| must be < 1, got {np.linalg.norm(v):.6g}")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def gamma_v(self) -> float:
        return float(1.0 / np.sqrt(1.0 - np.linalg.norm(self.v) ** 2))

    @property
    def direction(self) -> np.ndarray:
        """Unit time-like direction w = (gamma_v, gamma_v v)."""
        g = self.gamma_v
        return np.array([g, *(g * vi for vi in self.v)])


@dataclass(frozen=True)
class MultiplierGrid:
    """Uniform time grid with its dual frequency grid for Fourier multipliers."""

    n: int
    spacing: float
    t: np.ndarray = field(init=False)
    h: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.n < 256 or self.n & (self.n - 1):
            raise DimensionError(f"n must be a power of two >= 256, got {self.n}")
        if self.spacing <= 0.0:
            raise DimensionError("spacing must be positive")
        t = (np.arange(self.n) - self.n // 2) * self.spacing
        h = 2.0 * np.pi * np.fft.fftfreq(self.n, self.spacing)
        t.setflags(write=False)
        h.setflags(write=False)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "h", h)

    @property
    def length(self) -> float:
        return self.n * self.spacing

    @property
    def nyquist(self) -> float:
        return np.pi / self.spacing

    def check_padding(self, *widths):
        """Warn when the grid is too short for the Gaussian tails."""
        need = PADDING_FACTOR * max(widths)
        if self.length < need:
            warnings.warn(
                f"grid length {self.length:.3g} below the padding rule "
                f"{PADDING_FACTOR:g} x width = {need:.3g}; periodization error "
                "may exceed the tolerance budget",
                AliasWarning,
                stacklevel=3,
            )
