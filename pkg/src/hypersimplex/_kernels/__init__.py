"""Hot kernels with a compiled core and a pure-Python/numpy fallback.

`count_points` (lattice-point membership counting for the Ehrhart oracle) and
`sweep_faces` (the exhaustive face sweep of the shelling verifier) dominate
runtime; the Cython build is used when importable, otherwise the numpy
implementations with identical semantics.
"""

try:
    from . import _ckernels as _impl
    BACKEND = "compiled"
except ImportError:  # extension not built; pure fallback
    from . import _pykernels as _impl
    BACKEND = "python"

from . import _pykernels

count_points = _impl.count_points
sweep_faces = _impl.sweep_faces


def backend() -> str:
    return BACKEND
