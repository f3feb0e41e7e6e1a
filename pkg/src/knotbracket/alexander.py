"""Alexander polynomial from the crossing/arc matrix of a knot diagram.

Arcs are the maximal runs of the knot between two consecutive under-passes.
At each crossing the over-arc is labelled ``1 - t``; of the two under-arcs,
the one on the left of a traveller standing on the over-pass (facing along
the orientation) gets ``t`` and the one on the right gets ``-1``.  Labels
landing on the same arc are added.
"""

from __future__ import annotations

from .diagram import Diagram, DiagramError, crossing_signs
from .laurent import ONE, ZERO, LaurentError, LaurentPoly, monomial

__all__ = [
    "crossing_arc_matrix",
    "arcs",
    "alexander",
    "alexander_minor",
    "normalize_alexander",
    "det_cofactor",
    "det_bareiss",
    "determinant",
    "exact_divide",
]

T = monomial(1)
ONE_MINUS_T = ONE - T
MINUS_ONE = LaurentPoly({0: -1})

Matrix = list[list[LaurentPoly]]


def _require_knot(d: Diagram) -> None:
    if d.n_components != 1:
        raise DiagramError(f"knots only: diagram has {d.n_components} components")


def arcs(d: Diagram) -> dict[int, int]:
    """Map each edge to its arc index.

    Arcs are numbered in order along the knot, starting with the arc that
    begins at the first under-pass met when walking the cycle from its
    first listed edge.
    """
    _require_knot(d)
    if d.n_crossings == 0:
        raise DiagramError("a crossing-free diagram has no arcs")
    starts = {c for _, _, c, _ in d.crossings}
    cyc = d.components[0]
    k0 = next(k for k, e in enumerate(cyc) if e in starts)
    arc_of, arc = {}, -1
    for k in range(len(cyc)):
        e = cyc[(k0 + k) % len(cyc)]
        if e in starts:
            arc += 1
        arc_of[e] = arc
    return arc_of


def crossing_arc_matrix(d: Diagram) -> Matrix:
    """Row i is crossing i of ``d``; column j is arc j (see :func:`arcs`)."""
    arc_of = arcs(d)
    n = d.n_crossings
    m = [[ZERO] * n for _ in range(n)]
    for i, ((a, b, c, _), s) in enumerate(zip(d.crossings, crossing_signs(d))):
        # right-handed: under traffic moves right to left, so the outgoing arc is on the left
        left, right = (c, a) if s > 0 else (a, c)
        m[i][arc_of[b]] = m[i][arc_of[b]] + ONE_MINUS_T
        m[i][arc_of[left]] = m[i][arc_of[left]] + T
        m[i][arc_of[right]] = m[i][arc_of[right]] + MINUS_ONE
    return m


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Quotient of an exact division in Z[t, t^-1]; raises if it does not divide."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    lead_e, lead_c = q.max_degree(), q.coeff(q.max_degree())
    quot: dict[int, int] = {}
    rem = p
    low = p.min_degree() - q.min_degree()
    while not rem.is_zero():
        e = rem.max_degree() - lead_e
        c, r = divmod(rem.coeff(rem.max_degree()), lead_c)
        if r or e < low:
            raise LaurentError(f"{q} does not divide {p}")
        quot[e] = c
        rem = rem - q * monomial(e, c)
    return LaurentPoly(quot)


def det_cofactor(m: Matrix) -> LaurentPoly:
    """Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    total = ZERO
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(m: Matrix) -> LaurentPoly:
    """Fraction-free Gaussian elimination (Bareiss), with row pivoting."""
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(m: Matrix) -> LaurentPoly:
    return det_cofactor(m) if len(m) <= 8 else det_bareiss(m)


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Multiply by ±t^N so the lowest term is a positive constant."""
    if p.is_zero():
        return p
    p = p.shift(-p.min_degree())
    return p if p.coeff(0) > 0 else -p


def alexander_minor(d: Diagram, row: int, col: int) -> LaurentPoly:
    """Normalized determinant after deleting one row and one column."""
    m = crossing_arc_matrix(d)
    minor = [r[:col] + r[col + 1 :] for k, r in enumerate(m) if k != row]
    return normalize_alexander(determinant(minor))


def alexander(d: Diagram) -> LaurentPoly:
    """Alexander polynomial in t of a knot diagram (last row and column deleted)."""
    _require_knot(d)
    if d.n_crossings == 0:
        return ONE
    n = d.n_crossings
    return alexander_minor(d, n - 1, n - 1)
