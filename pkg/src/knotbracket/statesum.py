"""Brute-force enumeration of Kauffman smoothing states.

Crossings are given as rows ``(s0, s1, s2, s3)`` of edge indices in
counterclockwise order with ``s0``/``s2`` on the under-strand.  The
A-smoothing joins s0-s1 and s2-s3, the B-smoothing joins s0-s3 and s1-s2.
Loops are counted with a union-find over edge indices, one fresh forest per
state.

The kernels return a histogram ``hist[kind, nA, loops]`` of state counts;
turning it into a polynomial is left to the caller.  For closed diagrams
``kind`` is always 0 and ``loops`` counts every circle.  For tangles four
boundary edges are given (NW, NE, SW, SE); ``kind`` is 0 when the state
connects NW-NE and SW-SE, 1 when it connects NW-SW and NE-SE, 2 otherwise
(a non-planar input), and ``loops`` counts only closed circles.
"""

from __future__ import annotations

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

__all__ = ["state_histogram", "DEFAULT_CAP", "StateSumCapExceeded"]

DEFAULT_CAP = 26
# below this many crossings the interpreter beats the JIT warm-up
_JIT_THRESHOLD = 10


class StateSumCapExceeded(ValueError):
    """The diagram has more crossings than the configured state-sum cap."""


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _hist_py(cross, n_edges, ends):
    n = cross.shape[0]
    max_loops = n_edges + 1
    hist = np.zeros((3, n + 1, max_loops), dtype=np.int64)
    rows = [tuple(int(v) for v in r) for r in cross]
    ends = [int(e) for e in ends]
    for state in range(1 << n):
        parent = list(range(n_edges))
        n_a = 0
        for i, (s0, s1, s2, s3) in enumerate(rows):
            if (state >> i) & 1:
                n_a += 1
                pairs = ((s0, s1), (s2, s3))
            else:
                pairs = ((s0, s3), (s1, s2))
            for u, v in pairs:
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
        roots = sum(1 for x in range(n_edges) if parent[x] == x)
        if ends:
            nw, ne, sw, se = (_find(parent, e) for e in ends)
            if nw == ne and sw == se:
                kind = 0
            elif nw == sw and ne == se:
                kind = 1
            else:
                kind = 2
            roots -= 2
        else:
            kind = 0
        hist[kind, n_a, roots] += 1
    return hist


if numba is not None:

    @numba.njit(cache=True)
    def _find_nb(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    @numba.njit(cache=True)
    def _hist_nb(cross, n_edges, ends):
        n = cross.shape[0]
        hist = np.zeros((3, n + 1, n_edges + 1), dtype=np.int64)
        parent = np.empty(n_edges, dtype=np.int64)
        has_ends = ends.shape[0] == 4
        total = np.int64(1) << n
        for state in range(total):
            for x in range(n_edges):
                parent[x] = x
            n_a = 0
            for i in range(n):
                if (state >> i) & 1:
                    n_a += 1
                    u1, v1, u2, v2 = cross[i, 0], cross[i, 1], cross[i, 2], cross[i, 3]
                else:
                    u1, v1, u2, v2 = cross[i, 0], cross[i, 3], cross[i, 1], cross[i, 2]
                ru = _find_nb(parent, u1)
                rv = _find_nb(parent, v1)
                if ru != rv:
                    parent[ru] = rv
                ru = _find_nb(parent, u2)
                rv = _find_nb(parent, v2)
                if ru != rv:
                    parent[ru] = rv
            roots = 0
            for x in range(n_edges):
                if parent[x] == x:
                    roots += 1
            kind = 0
            if has_ends:
                nw = _find_nb(parent, ends[0])
                ne = _find_nb(parent, ends[1])
                sw = _find_nb(parent, ends[2])
                se = _find_nb(parent, ends[3])
                if nw == ne and sw == se:
                    kind = 0
                elif nw == sw and ne == se:
                    kind = 1
                else:
                    kind = 2
                roots -= 2
            hist[kind, n_a, roots] += 1
        return hist


def state_histogram(crossings, n_edges: int, ends=(), cap: int = DEFAULT_CAP, backend: str = "auto"):
    """Histogram of smoothing states; see the module docstring for layout.

    ``crossings`` holds rows of four edge indices in ``range(n_edges)``.
    ``backend`` is ``"python"``, ``"numba"`` or ``"auto"``.
    """
    cross = np.asarray(crossings, dtype=np.int64).reshape(-1, 4)
    n = cross.shape[0]
    if n > cap:
        raise StateSumCapExceeded(
            f"state-sum cap exceeded: {n} crossings > cap {cap} (use the tangle algebra instead)"
        )
    ends_arr = np.asarray(ends, dtype=np.int64).reshape(-1)
    if ends_arr.shape[0] not in (0, 4):
        raise ValueError("tangle state sums need exactly four boundary edges")
    if backend == "auto":
        backend = "numba" if (numba is not None and n >= _JIT_THRESHOLD) else "python"
    if backend == "numba":
        if numba is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return _hist_nb(cross, np.int64(n_edges), ends_arr)
    return _hist_py(cross, n_edges, ends_arr)
