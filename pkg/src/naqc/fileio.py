"""JSON state files and fixed-precision serialisation.

State file layout::

    {"dims": [dA, dB] | [d], "matrix": [[[re, im], ...], ...]}

with the matrix row-major. Floats are written with 17 significant digits so
files round-trip bit-exactly.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .qmath import BipartiteState, validate_density


class StateFileError(ValueError):
    """Malformed state file."""


def format_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite value {x}")
    return format(x, ".17g")


def dumps(obj, indent=None, _level=0):
    """``json.dumps`` replacement writing floats with 17 significant digits."""
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    sep = ", " if indent is None else ","
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        # keep numeric leaves on one line
        if indent is not None and all(not isinstance(v, (list, tuple, dict, np.ndarray)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [f"{pad}{dumps(v, indent, _level + 1)}" for v in obj]
        return "[" + sep.join(items) + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def state_to_json(state):
    if isinstance(state, BipartiteState):
        return {"dims": list(state.dims), "matrix": matrix_to_json(state.matrix)}
    m = np.asarray(state, dtype=complex)
    return {"dims": [m.shape[0]], "matrix": matrix_to_json(m)}


def write_state(path, state):
    with open(path, "w", newline="\n") as fh:
        fh.write(dumps(state_to_json(state), indent=1))
        fh.write("\n")


def state_from_json(obj):
    """Parse a decoded state object.

    Returns a :class:`BipartiteState` for two dims and a plain density matrix
    for one.
    """
    try:
        dims = [int(d) for d in obj["dims"]]
        raw = np.asarray(obj["matrix"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise StateFileError(f"malformed state object: {exc}") from exc
    if len(dims) not in (1, 2) or min(dims) < 1:
        raise StateFileError(f"dims must hold one or two positive integers, got {dims}")
    n = int(np.prod(dims))
    if raw.shape != (n, n, 2):
        raise StateFileError(f"matrix has shape {raw.shape}, expected ({n}, {n}, 2)")
    mat = raw[..., 0] + 1j * raw[..., 1]
    try:
        if len(dims) == 2:
            return BipartiteState(mat, tuple(dims))
        return validate_density(mat)
    except ValueError as exc:
        raise StateFileError(str(exc)) from exc


def read_state(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    return state_from_json(obj)
