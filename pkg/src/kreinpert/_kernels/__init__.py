"""Hot numerical kernels with a compiled core and a numpy fallback.

The Cython extension ``_fast`` is built at install time; if it is missing
(or ``KREINPERT_BACKEND=ref`` is set) the pure-numpy reference
implementation is used.  Both expose the same three functions:

- ``yukawa_matrix(s, X, Y)``: pairwise exp(-s*d)/(4*pi*d) kernel matrix
- ``point_sum(s, centers, coeffs, X)``: superposition of Yukawa kernels
- ``fd_residual_norms(psi, h, z, mask)``: masked 8th-order finite-difference
  norms of (-Laplacian + z) psi
"""

import os

from . import _ref

_requested = os.environ.get("KREINPERT_BACKEND", "auto")

if _requested == "ref":
    _impl = _ref
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "fast":
            raise
        _impl = _ref

BACKEND = "fast" if _impl is not _ref else "ref"

yukawa_matrix = _impl.yukawa_matrix
point_sum = _impl.point_sum
fd_residual_norms = _impl.fd_residual_norms
