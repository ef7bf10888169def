"""Parameter sweeps over the state families and threshold location."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .advantage import averaged_value, cost_matrix, optimize_permutation
from .coherence import Measure, bound_value
from .fileio import format_float
from .mub import generate_mubs
from .states import isotropic, rho1
from .witness import eur_witness

FAMILIES = ("isotropic", "rho1")
SWEEP_HEADER = ("x", "c_na", "c_na_tilde", "bound", "e_t", "e_m", "e_f", "log_inv_c")


def family_state(family, d, x):
    if family == "isotropic":
        return isotropic(d, x)
    if family == "rho1":
        if d != 2:
            raise ValueError("rho1 is a two-qubit family; use d = 2")
        return rho1(x)
    raise ValueError(f"unknown family {family!r}")


def thread_count():
    """Worker cap from ``NAQC_THREADS`` (default: CPU count)."""
    raw = os.environ.get("NAQC_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _pmap(fn, items, threads=None):
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))  # preserves input order


@dataclass(frozen=True)
class SweepRow:
    x: float
    c_na: float
    c_na_tilde: float
    bound: float
    e_t: float | None = None
    e_m: float | None = None
    e_f: float | None = None
    log_inv_c: float | None = None

    def as_tuple(self):
        return tuple(getattr(self, k) for k in SWEEP_HEADER)


def sweep_point(family, d, measure, x, mubs=None, with_eur=True):
    mubs = mubs or generate_mubs(d)
    measure = Measure.parse(measure)
    state = family_state(family, d, x)
    costs = cost_matrix(state, mubs, measure)
    _, tilde = optimize_permutation(costs)
    row = dict(x=float(x), c_na=averaged_value(costs), c_na_tilde=tilde, bound=bound_value(measure, d).value)
    if with_eur:
        w = eur_witness(state, mubs)
        row.update(e_t=w.e_t, e_m=w.e_m, e_f=w.e_f, log_inv_c=w.log_inv_c)
    return SweepRow(**row)


def sweep(family, d, measure, xs, with_eur=True, threads=None):
    """One :class:`SweepRow` per grid point, in the order of ``xs``."""
    mubs = generate_mubs(d)
    family_state(family, d, float(xs[0]))  # fail fast on bad family/d
    return _pmap(lambda x: sweep_point(family, d, measure, float(x), mubs, with_eur), list(xs), threads)


def sweep_csv_text(rows):
    lines = [",".join(SWEEP_HEADER)]
    for row in rows:
        lines.append(",".join("" if v is None else format_float(v) for v in row.as_tuple()))
    return "\n".join(lines) + "\n"


def write_sweep_csv(rows, path):
    with open(path, "w", newline="\n") as fh:
        fh.write(sweep_csv_text(rows))


def read_sweep_csv(path):
    with open(path) as fh:
        header = fh.readline().rstrip("\n").split(",")
        if tuple(header) != SWEEP_HEADER:
            raise ValueError(f"unexpected header {header}")
        rows = []
        for line in fh:
            vals = [None if v == "" else float(v) for v in line.rstrip("\n").split(",")]
            rows.append(SweepRow(*vals))
    return rows


ESTIMATES = ("T", "M", "F")


def criterion(family, d, measure=None, framework="optimized", estimate=None):
    """Signed margin ``g(x)``; the witness fires exactly where ``g(x) > 0``.

    For an NAQC framework ``g = value - bound``; for an uncertainty estimate
    ``g = -log2 c - E``.
    """
    mubs = generate_mubs(d)
    if estimate is not None:
        if estimate not in ESTIMATES:
            raise ValueError(f"estimate must be one of {ESTIMATES}")
        attr = "e_" + estimate.lower()

        def g(x):
            w = eur_witness(family_state(family, d, x), mubs)
            return w.log_inv_c - getattr(w, attr)

        return g

    measure = Measure.parse(measure)
    bound = bound_value(measure, d).value
    if framework not in ("averaged", "optimized"):
        raise ValueError(f"threshold framework must be 'averaged' or 'optimized', got {framework!r}")

    def g(x):
        costs = cost_matrix(family_state(family, d, x), mubs, measure)
        value = averaged_value(costs) if framework == "averaged" else optimize_permutation(costs)[1]
        return value - bound

    return g


def find_crossings(g, x_min=0.0, x_max=1.0, tol=1e-8, grid=200, threads=None):
    """Roots of ``g`` on ``[x_min, x_max]``: grid scan, then bisection per sign change."""
    xs = np.linspace(x_min, x_max, grid)
    vals = _pmap(g, list(xs), threads)
    crossings = []
    for k in range(grid - 1):
        lo, hi = xs[k], xs[k + 1]
        glo, ghi = vals[k], vals[k + 1]
        if glo == 0.0:
            if not crossings or crossings[-1] != lo:
                crossings.append(float(lo))
            continue
        if ghi == 0.0 or (glo > 0) == (ghi > 0):
            continue
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            gm = g(mid)
            if gm == 0.0:
                lo = hi = mid
                break
            if (gm > 0) == (glo > 0):
                lo, glo = mid, gm
            else:
                hi = mid
        crossings.append(float(0.5 * (lo + hi)))
    if vals[-1] == 0.0:
        crossings.append(float(xs[-1]))
    return crossings


@dataclass(frozen=True)
class ThresholdResult:
    family: str
    d: int
    measure: str | None
    framework: str
    crossings: list
    tolerance: float

    def to_json(self):
        return {
            "family": self.family,
            "d": self.d,
            "measure": self.measure,
            "framework": self.framework,
            "crossings": list(self.crossings),
            "tolerance": self.tolerance,
        }


def threshold(family, d, measure=None, framework="optimized", estimate=None, tol=1e-8,
              x_min=0.0, x_max=1.0, threads=None):
    """Locate every ``x`` where a witness criterion switches on or off."""
    if tol < 1e-8:
        raise ValueError("tolerance must be >= 1e-8")
    g = criterion(family, d, measure, framework, estimate)
    crossings = find_crossings(g, x_min, x_max, tol, threads=threads)
    label = f"eur-{estimate}" if estimate is not None else framework
    m = None if estimate is not None else Measure.parse(measure).value
    return ThresholdResult(family, d, m, label, crossings, tol)
