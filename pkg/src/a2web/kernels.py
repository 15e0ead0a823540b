"""Kernel dispatch: the compiled extension when built, otherwise the Python fallback."""

from . import _pykernels

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_active = _compiled if _compiled is not None else _pykernels


def use_backend(name: str) -> None:
    """Switch between ``"compiled"`` and ``"python"`` kernels at runtime."""
    global _active, BACKEND
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        _active = _compiled
    elif name == "python":
        _active = _pykernels
    else:
        raise ValueError(name)
    BACKEND = name


def cycle_labels(perm):
    return _active.cycle_labels(perm)


def dual_bfs(face_of, mate, wall, n_faces, root):
    return _active.dual_bfs(face_of, mate, wall, n_faces, root)


def rs_insert(perm):
    return _active.rs_insert(perm)
