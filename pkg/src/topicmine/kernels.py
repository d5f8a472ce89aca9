"""Sweep-kernel selection: compiled extension when available, numpy fallback otherwise."""

from topicmine import _gibbs_py

try:
    from topicmine import _gibbs

    run_sweeps = _gibbs.run_sweeps
    BACKEND = "cython"
except ImportError:
    run_sweeps = _gibbs_py.run_sweeps
    BACKEND = "python"


def available_backends():
    """Names of usable kernels, compiled one first when present."""
    if BACKEND == "cython":
        return {"cython": _gibbs.run_sweeps, "python": _gibbs_py.run_sweeps}
    return {"python": _gibbs_py.run_sweeps}
