"""Maximum-weight perfect assignment on small square score matrices."""

from __future__ import annotations

from itertools import permutations

import numpy as np


def _hungarian_min(cost):
    # Shortest augmenting path with row/column potentials, O(n^3).
    n = cost.shape[0]
    inf = float("inf")
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    match = np.zeros(n + 1, dtype=int)  # match[col] = row, 1-based, 0 = free
    way = np.zeros(n + 1, dtype=int)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = np.full(n + 1, inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1, j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    perm = np.empty(n, dtype=int)
    for j in range(1, n + 1):
        perm[match[j] - 1] = j - 1
    return perm


def path_score(weights, perm):
    """``sum_i weights[i, perm[i]]`` summed in row order."""
    total = 0.0
    for i, j in enumerate(perm):
        total += float(weights[i, j])
    return total


def max_assignment_value(weights):
    """Optimal total weight, via the Hungarian method."""
    weights = np.asarray(weights, dtype=float)
    if weights.size == 0:
        return 0.0
    return path_score(weights, _hungarian_min(-weights))


def max_assignment(weights, tie_tol=1e-12):
    """Maximum-weight permutation, lexicographically smallest among ties.

    Entries equal to ``-inf`` are forbidden cells. Two totals count as tied
    when they differ by at most ``tie_tol * max(1, |best|)``.

    Returns
    -------
    perm : tuple of int
        ``perm[i]`` is the column assigned to row ``i``.
    value : float
        Total weight of ``perm``, summed in row order.
    """
    w = np.asarray(weights, dtype=float)
    n = w.shape[0]
    if w.shape != (n, n):
        raise ValueError(f"weights must be square, got {w.shape}")
    finite = np.where(np.isfinite(w), w, np.nan)
    big = 1.0 + 2.0 * n * (np.nanmax(np.abs(finite)) if np.any(np.isfinite(w)) else 1.0)
    masked = np.where(np.isfinite(w), w, -big)

    best = max_assignment_value(masked)
    slack = tie_tol * max(1.0, abs(best))
    rows = list(range(n))
    free = list(range(n))
    chosen = []
    prefix = 0.0
    for i in rows:
        for j in sorted(free):
            if not np.isfinite(w[i, j]):
                continue
            rest = [c for c in free if c != j]
            sub = masked[np.ix_(rows[i + 1:], rest)]
            if prefix + masked[i, j] + max_assignment_value(sub) >= best - slack:
                chosen.append(j)
                free.remove(j)
                prefix += masked[i, j]
                break
        else:
            raise ValueError("no feasible assignment")
    perm = tuple(chosen)
    return perm, path_score(w, perm)


def brute_force_assignment(weights, tie_tol=1e-12, derangements_only=False):
    """Exhaustive search over all ``n!`` permutations (test oracle)."""
    w = np.asarray(weights, dtype=float)
    n = w.shape[0]
    scored = []
    for perm in permutations(range(n)):
        if derangements_only and any(i == j for i, j in enumerate(perm)):
            continue
        scored.append((perm, path_score(w, perm)))
    top = max(s for _, s in scored)
    slack = tie_tol * max(1.0, abs(top))
    for perm, s in scored:  # itertools yields lexicographic order
        if s >= top - slack:
            return perm, s
