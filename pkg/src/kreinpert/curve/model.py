"""Arclength-parametrized curves in R^3 with discretization nodes."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractViolation, DimensionError, SelfIntersectionError

#: relative slack allowed in the unit-speed check
_SPEED_TOL = 1e-3

#: minimum admissible chord/arclength ratio for non-adjacent nodes
_CHORD_RATIO_MIN = 1e-6


@dataclass(frozen=True)
class CurveModel:
    """Unit-speed curve gamma: [0, L] -> R^3 with N uniform arclength nodes.

    Closed curves get nodes at i*h; open curves at (i + 1/2)*h (midpoint
    offsets keep endpoint singularities of the diagonal integrals away from
    the nodes).
    """

    gamma: callable
    closed: bool
    L: float
    N: int
    curvature_bound: float
    nodes: np.ndarray = field(init=False)
    points: np.ndarray = field(init=False)
    chord_ratio: float = field(init=False)

    def __post_init__(self):
        if self.N < 4:
            raise DimensionError(f"need at least 4 nodes, got {self.N}")
        if self.L <= 0:
            raise DimensionError("curve length must be positive")
        h = self.L / self.N
        if self.closed:
            nodes = h * np.arange(self.N)
        else:
            nodes = h * (np.arange(self.N) + 0.5)
        points = np.array([self.gamma(t) for t in nodes], dtype=float)
        if points.shape != (self.N, 3):
            raise DimensionError("gamma must map scalars to points in R^3")

        dt = self.L / (100 * self.N)
        for t, p in zip(nodes, points):
            t2 = t + dt if (self.closed or t + dt <= self.L) else t - dt
            speed = np.linalg.norm(np.asarray(self.gamma(t2 % self.L if self.closed else t2)) - p) / dt
            if not (1.0 - _SPEED_TOL <= speed <= 1.0 + _SPEED_TOL):
                raise ContractViolation(
                    f"parametrization is not unit speed at t={t:.6g} (speed {speed:.6g})"
                )

        chord = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
        sep = np.abs(nodes[:, None] - nodes[None, :])
        if self.closed:
            sep = np.minimum(sep, self.L - sep)
        adjacent = sep <= 1.5 * h
        off = ~adjacent
        ratio = 1.0 if not np.any(off) else float(np.min(chord[off] / sep[off]))
        if ratio < _CHORD_RATIO_MIN:
            raise SelfIntersectionError(
                f"non-adjacent nodes nearly coincide (chord/arclength ratio {ratio:.3e})"
            )
        nodes.setflags(write=False)
        points.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "chord_ratio", ratio)

    @property
    def h(self) -> float:
        """Node spacing; also the uniform quadrature weight."""
        return self.L / self.N

    def arc_distance(self, t, s):
        """Arclength distance, periodic for closed curves."""
        d = np.abs(t - s)
        return np.minimum(d, self.L - d) if self.closed else d

    def point(self, t):
        return np.asarray(self.gamma(t % self.L if self.closed else t), dtype=float)

    def resample(self, N: int) -> "CurveModel":
        """Same geometry, different node count."""
        return CurveModel(self.gamma, self.closed, self.L, N, self.curvature_bound)

    @classmethod
    def circle(cls, radius: float, N: int) -> "CurveModel":
        radius = float(radius)

        def gamma(t):
            return np.array([radius * np.cos(t / radius), radius * np.sin(t / radius), 0.0])

        return cls(gamma, True, 2.0 * np.pi * radius, N, 1.0 / radius)

    @classmethod
    def segment(cls, length: float, N: int) -> "CurveModel":
        length = float(length)

        def gamma(t):
            return np.array([t, 0.0, 0.0])

        return cls(gamma, False, length, N, 0.0)

    @classmethod
    def from_samples(cls, samples, closed: bool, N: int) -> "CurveModel":
        """Piecewise-linear curve through the sample points, arclength-parametrized."""
        pts = np.atleast_2d(np.asarray(samples, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 3:
            raise DimensionError("need at least 3 sample points in R^3")
        if closed:
            pts = np.vstack([pts, pts[0]])
        seg = np.linalg.norm(np.diff(pts, axis=0), axis=-1)
        if np.any(seg == 0.0):
            raise ContractViolation("consecutive samples must be distinct")
        s = np.concatenate([[0.0], np.cumsum(seg)])
        L = float(s[-1])

        def gamma(t):
            return np.array([np.interp(t, s, pts[:, i]) for i in range(3)])

        # discrete curvature from turning angles over mean adjacent arclength
        t1 = np.diff(pts, axis=0) / seg[:, None]
        dots = np.clip(np.sum(t1[:-1] * t1[1:], axis=1), -1.0, 1.0)
        ang = np.arccos(dots)
        mean_arc = 0.5 * (seg[:-1] + seg[1:])
        kappa = float(np.max(ang / mean_arc)) if len(ang) else 0.0
        return cls(gamma, closed, L, N, kappa)
