"""Configuration for a finite family of 3D point interactions."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ..errors import ContractViolation, DimensionError
from ..system import ThetaMatrix


@dataclass(frozen=True)
class PointConfig:
    """n distinct interaction centers in R^3 plus the coupling matrix Theta."""

    centers: np.ndarray
    theta: ThetaMatrix

    def __post_init__(self):
        c = np.atleast_2d(np.asarray(self.centers, dtype=float))
        if c.ndim != 2 or c.shape[1] != 3 or c.shape[0] < 1:
            raise DimensionError(f"centers must be an n x 3 array, got shape {c.shape}")
        if self.theta.n != c.shape[0]:
            raise DimensionError(
                f"Theta is {self.theta.n} x {self.theta.n} but there are {c.shape[0]} centers"
            )
        d = np.linalg.norm(c[:, None, :] - c[None, :, :], axis=-1)
        if np.any(d[~np.eye(len(c), dtype=bool)] == 0.0):
            raise ContractViolation("centers must be pairwise distinct")
        c.setflags(write=False)
        object.__setattr__(self, "centers", c)

    @property
    def n(self) -> int:
        return self.centers.shape[0]

    @property
    def d_min(self) -> float:
        """Smallest pairwise distance; inf for a single center."""
        if self.n == 1:
            return np.inf
        d = np.linalg.norm(self.centers[:, None, :] - self.centers[None, :, :], axis=-1)
        return float(np.min(d[~np.eye(self.n, dtype=bool)]))

    @classmethod
    def from_dict(cls, data: dict) -> "PointConfig":
        centers = np.asarray(data["centers"], dtype=float)
        th = data["theta"]
        if "scalar" in th:
            theta = ThetaMatrix.scalar(float(th["scalar"]), n=len(centers))
        elif "matrix" in th:
            m = np.asarray(th["matrix"], dtype=float)
            if m.ndim == 3 and m.shape[-1] == 2:
                m = m[..., 0] + 1j * m[..., 1]
            theta = ThetaMatrix(m)
        else:
            raise ContractViolation("theta must specify 'scalar' or 'matrix'")
        return cls(centers, theta)

    @classmethod
    def from_json(cls, text: str) -> "PointConfig":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        m = self.theta.entries
        return {
            "centers": self.centers.tolist(),
            "theta": {"matrix": np.stack([m.real, m.imag], axis=-1).tolist()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
