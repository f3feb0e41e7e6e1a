"""Independent oracles and generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from collections import Counter

import sympy

from knotbracket.diagram import Diagram
from knotbracket.laurent import LaurentPoly
from knotbracket.randexpr import random_tangle
from knotbracket.tangle import compile_tangle, denominator_closure, numerator_closure

A_SYM = sympy.Symbol("A")


def to_sympy(p: LaurentPoly):
    return sum((c * A_SYM**e for e, c in p.terms.items()), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    out: dict[int, int] = {}
    for mono, c in sympy.expand(expr).as_coefficients_dict().items():
        e = int(mono.as_powers_dict().get(A_SYM, 0))
        out[e] = out.get(e, 0) + int(c)
    return LaurentPoly(out)


def _count_loops(crossings, choice) -> int:
    # nodes are crossing slots; walk alternately along edges and smoothing arcs
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for s, e in enumerate(x):
            where.setdefault(e, []).append((i, s))

    def partner_by_edge(node):
        i, s = node
        a, b = where[crossings[i][s]]
        return b if a == node else a

    def partner_by_smoothing(node):
        i, s = node
        if choice[i]:
            return (i, {0: 1, 1: 0, 2: 3, 3: 2}[s])
        return (i, {0: 3, 3: 0, 1: 2, 2: 1}[s])

    seen = set()
    loops = 0
    for i in range(len(crossings)):
        for s in range(4):
            if (i, s) in seen:
                continue
            loops += 1
            node = (i, s)
            while node not in seen:
                seen.add(node)
                other = partner_by_smoothing(node)
                seen.add(other)
                node = partner_by_edge(other)
    return loops


def oracle_bracket(d: Diagram, forced: dict[int, bool] | None = None) -> LaurentPoly:
    """State sum by explicit loop tracing, evaluated with sympy.

    ``forced`` fixes the smoothing of some crossings (True = A-smoothing).
    """
    forced = forced or {}
    n = d.n_crossings
    free = [i for i in range(n) if i not in forced]
    tally: Counter = Counter()
    for bits in itertools.product((True, False), repeat=len(free)):
        choice = dict(zip(free, bits))
        choice.update(forced)
        # forced crossings are already smoothed and carry no weight
        n_a = sum(bits)
        loops = _count_loops(d.crossings, choice) + d.free_loops
        tally[(2 * n_a - len(free), loops)] += 1
    delta = -A_SYM**2 - A_SYM**-2
    total = sum((cnt * A_SYM**k * delta ** (loops - 1) for (k, loops), cnt in tally.items()), sympy.Integer(0))
    return from_sympy(total)


def face_count(crossings) -> int:
    """Faces of the planar map given by counterclockwise crossing rotations."""
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for s, e in enumerate(x):
            where.setdefault(e, []).append((i, s))
    seen = set()
    faces = 0
    for i in range(len(crossings)):
        for s in range(4):
            if (i, s) in seen:
                continue
            faces += 1
            node = (i, s)
            while node not in seen:
                seen.add(node)
                j, t = node
                nxt = (j, (t + 1) % 4)
                a, b = where[crossings[j][nxt[1]]]
                node = b if a == nxt else a
    return faces


def is_planar(d: Diagram) -> bool:
    """Euler check for a connected projection: faces = crossings + 2."""
    return face_count(d.crossings) == d.n_crossings + 2


def random_diagram(seed: int, max_crossings: int = 8, min_crossings: int = 1) -> Diagram:
    """A random oriented link diagram: a closure of a random tangle."""
    rng = random.Random(seed)
    while True:
        t = random_tangle(rng, max_depth=4, omega=False)
        td = compile_tangle(t)
        if not min_crossings <= len(td.crossings) <= max_crossings:
            continue
        close = numerator_closure if rng.random() < 0.5 else denominator_closure
        return close(td)


def random_knot(seed: int, max_crossings: int = 9) -> Diagram:
    """A random one-component diagram with at least one crossing."""
    rng = random.Random(seed)
    while True:
        d = random_diagram(rng.getrandbits(32), max_crossings=max_crossings)
        if d.n_components == 1:
            return d
