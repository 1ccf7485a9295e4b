"""Free-resolvent action on normalized Gaussian probe states."""

from __future__ import annotations

import numpy as np

from ..spectral import as_z
from .config import PointConfig
from .states import FourierRadialState


def free_resolvent_gaussian(z, center, width, x) -> complex:
    """Value of (-Laplacian + z)^(-1) g at x, g the L2-normalized Gaussian."""
    g = FourierRadialState.gaussian(center, width)
    return g.resolvent(as_z(z)).eval_at(x)


def gbreve_gaussian(z, config: PointConfig, center, width) -> np.ndarray:
    """The boundary vector {((-Laplacian + z)^(-1) g)(y)}_y over the centers."""
    rg = FourierRadialState.gaussian(center, width).resolvent(as_z(z))
    return np.array([rg.eval_at(y) for y in config.centers])
