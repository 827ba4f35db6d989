"""Backend selection for the integer kernels.

The compiled extension is used when it was built; otherwise the pure-Python
reference takes over.  Both expose ``integer_rank``, ``pivot`` and
``simplex_iterate`` with identical results.
"""

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

OPTIMAL = _kernels_py.OPTIMAL
UNBOUNDED = _kernels_py.UNBOUNDED

_BACKENDS = {"python": _kernels_py}
if _kernels_c is not None:
    _BACKENDS["compiled"] = _kernels_c

_active = _kernels_c if _kernels_c is not None else _kernels_py


def available_backends():
    return sorted(_BACKENDS)


def backend():
    return "compiled" if _active is _kernels_c and _kernels_c is not None else "python"


def use_backend(name):
    """Switch kernels process-wide; returns the previous backend name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}")
    previous = backend()
    _active = _BACKENDS[name]
    return previous


def integer_rank(rows, ncols):
    return _active.integer_rank(rows, ncols)


def pivot(rows, r, c, denom):
    return _active.pivot(rows, r, c, denom)


def simplex_iterate(rows, basis, denom, enter_limit):
    return _active.simplex_iterate(rows, basis, denom, enter_limit)
