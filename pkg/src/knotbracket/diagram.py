"""Oriented link diagrams in planar-diagram (PD) form.

A crossing is a quadruple ``(a, b, c, d)`` of edge labels listed
counterclockwise, starting at the incoming under-strand edge ``a``; ``c`` is
the outgoing under-strand edge.  Orientation of every component comes from
its edge cycle, which also fixes the direction of the over-strand ``b``/``d``.

The crossing sign is +1 when the over-strand enters on ``d`` and -1 when it
enters on ``b``.  With the slots read counterclockwise from the incoming
under-strand, this is exactly the rule that a crossing is right-handed when
traffic on the under-pass moves from the over-pass traveller's right to left.

Crossing-free circles have no PD representation; they are carried in the
``free_loops`` counter and count as extra (unlinked) components.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Diagram",
    "DiagramError",
    "PDParseError",
    "parse_pd",
    "to_pd",
    "crossing_signs",
    "writhe",
    "linking_number",
    "total_linking_number",
    "mirror",
    "switch_crossing",
    "reverse_component",
    "relabel",
    "add_curl",
    "add_disjoint_circle",
    "disjoint_union",
]


class DiagramError(ValueError):
    """The crossing data do not describe a valid oriented diagram."""


class PDParseError(DiagramError):
    """Malformed PD text; ``line`` and ``col`` point at the offending token."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    free_loops: int = 0
    # optional over-strand entry slots (1 or 3) per crossing; only consulted
    # where the PD data leave the direction open
    over_hint: tuple | None = field(default=None, repr=False, compare=False)
    # derived data, filled in by validation
    _succ: dict = field(default=None, init=False, repr=False, compare=False)
    _comp_of: dict = field(default=None, init=False, repr=False, compare=False)
    _over_in: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(e) for e in x) for x in self.crossings))
        object.__setattr__(self, "components", tuple(tuple(int(e) for e in c) for c in self.components))
        _validate(self)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        """Component cycles plus crossing-free circles."""
        return len(self.components) + self.free_loops

    @property
    def edges(self) -> list[int]:
        return sorted(self._succ)

    def successor(self, edge: int) -> int:
        return self._succ[edge]

    def component_of(self, edge: int) -> int:
        return self._comp_of[edge]

    def over_incoming(self, i: int) -> int:
        """Slot index (1 for ``b`` or 3 for ``d``) where the over-strand enters crossing ``i``."""
        return self._over_in[i]

    def crossing_components(self, i: int) -> tuple[int, int]:
        """(under component, over component) of crossing ``i``."""
        a, b, _, _ = self.crossings[i]
        return self._comp_of[a], self._comp_of[b]

    def __str__(self) -> str:
        return to_pd(self)


def _validate(d: Diagram) -> None:
    if d.free_loops < 0:
        raise DiagramError("free_loops must be non-negative")
    counts: dict[int, int] = {}
    for i, x in enumerate(d.crossings):
        if len(x) != 4:
            raise DiagramError(f"crossing {i} does not have four slots: {x}")
        for e in x:
            if e <= 0:
                raise DiagramError(f"crossing {i}: edge labels must be positive, got {e}")
            counts[e] = counts.get(e, 0) + 1
    for e, k in sorted(counts.items()):
        if k != 2:
            raise DiagramError(f"edge {e} appears {k} times in crossings (expected 2)")

    succ: dict[int, int] = {}
    comp_of: dict[int, int] = {}
    for ci, cyc in enumerate(d.components):
        if not cyc:
            raise DiagramError(f"component {ci} is empty")
        for k, e in enumerate(cyc):
            if e in comp_of:
                raise DiagramError(f"edge {e} listed in more than one component position")
            comp_of[e] = ci
            succ[e] = cyc[(k + 1) % len(cyc)]
    if set(comp_of) != set(counts):
        missing = sorted(set(counts) - set(comp_of))
        extra = sorted(set(comp_of) - set(counts))
        raise DiagramError(
            f"components do not partition the crossing edges (missing {missing}, extra {extra})"
        )

    for i, (a, b, c, dd) in enumerate(d.crossings):
        if succ[a] != c:
            raise DiagramError(
                f"crossing {i} X[{a},{b},{c},{dd}]: under-strand discontinuity ({a} is followed by {succ[a]}, not {c})"
            )
        if succ[b] != dd and succ[dd] != b:
            raise DiagramError(
                f"crossing {i} X[{a},{b},{c},{dd}]: over-strand edges {b}, {dd} are not adjacent in any component"
            )

    object.__setattr__(d, "_succ", succ)
    object.__setattr__(d, "_comp_of", comp_of)
    hint = d.over_hint
    if hint is not None and len(hint) != len(d.crossings):
        raise DiagramError("over_hint needs one entry per crossing")
    object.__setattr__(d, "_over_in", _resolve_over_strands(d.crossings, succ, hint))


def _resolve_over_strands(
    crossings: Sequence[Crossing], succ: dict[int, int], hint: Sequence[int | None] | None = None
) -> tuple[int, ...]:
    """Decide which over slot is incoming at each crossing.

    Every transition ``e -> succ(e)`` of a component happens at exactly one
    crossing strand.  Under-strands fix their transitions; the over-strands
    take what is left.  Only a two-edge component that never passes under
    can stay ambiguous (its two orientations are then indistinguishable in
    PD form).  There ``hint`` decides if given, else the lowest incoming label
    wins; both choices flip the two crossing signs together, and those signs
    are opposite, so writhe and linking numbers do not depend on it.
    """
    free = {(e, s) for e, s in succ.items()}
    for a, _, c, _ in crossings:
        if (a, c) not in free:
            raise DiagramError(f"transition {a}->{c} is used by more than one under-strand")
        free.discard((a, c))

    n = len(crossings)
    over_in: list[int | None] = [None] * n

    def options(i):
        _, b, _, dd = crossings[i]
        out = []
        if (b, dd) in free:
            out.append((1, (b, dd)))
        if (dd, b) in free and (dd, b) != (b, dd):
            out.append((3, (dd, b)))
        return out

    pending = list(range(n))
    while pending:
        progress = False
        still = []
        for i in pending:
            opts = options(i)
            if not opts:
                a, b, c, dd = crossings[i]
                raise DiagramError(f"crossing {i} X[{a},{b},{c},{dd}]: over-strand direction is inconsistent")
            if len(opts) == 1:
                slot, t = opts[0]
                over_in[i] = slot
                free.discard(t)
                progress = True
            else:
                still.append(i)
        pending = still
        if pending and not progress:
            hinted = [i for i in pending if hint and hint[i] in (1, 3)]
            i = hinted[0] if hinted else pending[0]
            pending.remove(i)
            opts = options(i)
            chosen = [o for o in opts if hint and o[0] == hint[i]]
            slot, t = chosen[0] if chosen else min(opts, key=lambda o: o[1][0])
            over_in[i] = slot
            free.discard(t)
    if free:
        raise DiagramError(f"edge transitions not realised by any crossing: {sorted(free)}")
    if hint:
        for i, (h, o) in enumerate(zip(hint, over_in)):
            if h is not None and h != o:
                raise DiagramError(f"crossing {i}: over_hint {h} contradicts the component cycles")
    return tuple(over_in)


# --------------------------------------------------------------------------
# PD text format

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<loops>loops\s*:)
  | (?P<components>components\s*:)
  | (?P<X>X\s*\[)
  | (?P<int>[+-]?\d+)
  | (?P<punct>[\[\](),])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise PDParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            yield kind, m.group(), line, col
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = m.start() + chunk.rfind("\n") + 1
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


def parse_pd(text: str) -> Diagram:
    """Parse PD text: ``X[a,b,c,d]`` crossings, optional ``loops: N`` and
    ``components: (e1 e2 ...) (f1 ...)`` clauses, ``#`` comments.

    Without a ``components:`` clause the cycles are inferred by consecutive
    numbering: each edge is followed by the next integer, wrapping from a
    component's largest label back to its smallest.
    """
    toks = list(_tokenize(text))
    k = 0
    crossings: list[Crossing] = []
    loops = None
    components: list[tuple[int, ...]] | None = None

    def expect(kind, value=None):
        nonlocal k
        t = toks[k]
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            raise PDParseError(f"expected {want!r}, got {got!r}", t[2], t[3])
        k += 1
        return t

    while toks[k][0] != "eof":
        kind, val, line, col = toks[k]
        if kind == "X":
            k += 1
            quad = []
            for j in range(4):
                t = expect("int")
                v = int(t[1])
                if v <= 0:
                    raise PDParseError(f"edge label must be positive, got {v}", t[2], t[3])
                quad.append(v)
                if j < 3:
                    expect("punct", ",")
            expect("punct", "]")
            crossings.append(tuple(quad))
        elif kind == "loops":
            if loops is not None:
                raise PDParseError("duplicate 'loops:' clause", line, col)
            k += 1
            t = expect("int")
            loops = int(t[1])
            if loops < 0:
                raise PDParseError("loop count must be non-negative", t[2], t[3])
        elif kind == "components":
            if components is not None:
                raise PDParseError("duplicate 'components:' clause", line, col)
            k += 1
            components = []
            while toks[k][0] == "punct" and toks[k][1] == "(":
                k += 1
                cyc = []
                while toks[k][0] == "int":
                    cyc.append(int(toks[k][1]))
                    k += 1
                    if toks[k][0] == "punct" and toks[k][1] == ",":
                        k += 1
                expect("punct", ")")
                if not cyc:
                    raise PDParseError("empty component", toks[k - 1][2], toks[k - 1][3])
                components.append(tuple(cyc))
            if not components:
                t = toks[k]
                raise PDParseError("expected '(' after 'components:'", t[2], t[3])
        else:
            raise PDParseError(f"unexpected token {val!r}", line, col)

    if components is None:
        components = _infer_components(crossings)
    return Diagram(tuple(crossings), tuple(components), loops or 0)


def _infer_components(crossings: Sequence[Crossing]) -> list[tuple[int, ...]]:
    edges = sorted({e for x in crossings for e in x})
    if not edges:
        return []
    eset = set(edges)
    maxima = {e for e in edges if e + 1 not in eset}
    for a, b, c, dd in crossings:
        if c != a + 1:
            maxima.add(a)
        if abs(b - dd) != 1:
            maxima.add(max(b, dd))
    comps, cur = [], []
    for e in edges:
        cur.append(e)
        if e in maxima:
            comps.append(tuple(cur))
            cur = []
    return comps


def to_pd(d: Diagram) -> str:
    """Serialise with an explicit ``components:`` clause so orientation round-trips."""
    lines = []
    if d.free_loops:
        lines.append(f"loops: {d.free_loops}")
    if d.crossings:
        lines.append(" ".join("X[{},{},{},{}]".format(*x) for x in d.crossings))
    if d.components:
        lines.append("components: " + " ".join("(" + " ".join(map(str, c)) + ")" for c in d.components))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# invariants of the oriented diagram


def crossing_signs(d: Diagram) -> list[int]:
    return [1 if d.over_incoming(i) == 3 else -1 for i in range(d.n_crossings)]


def writhe(d: Diagram) -> int:
    return sum(crossing_signs(d))


def _check_component(d: Diagram, i: int) -> None:
    if not 0 <= i < d.n_components:
        raise DiagramError(f"component index {i} out of range (diagram has {d.n_components})")


def linking_number(d: Diagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components ``i`` and ``j``.

    Indices past the PD cycles refer to crossing-free circles.
    """
    _check_component(d, i)
    _check_component(d, j)
    if i == j:
        raise DiagramError("linking number needs two distinct components")
    total = 0
    for k, s in enumerate(crossing_signs(d)):
        if set(d.crossing_components(k)) == {i, j}:
            total += s
    if total % 2:
        raise AssertionError(f"odd inter-component sign sum {total}; diagram is not planar")
    return total // 2


def total_linking_number(d: Diagram) -> int:
    if d.n_components < 2:
        raise DiagramError("total linking number needs at least two components")
    total = 0
    for k, s in enumerate(crossing_signs(d)):
        under, over = d.crossing_components(k)
        if under != over:
            total += s
    if total % 2:
        raise AssertionError(f"odd inter-component sign sum {total}; diagram is not planar")
    return total // 2


# --------------------------------------------------------------------------
# transformations


def _switched(d: Diagram, i: int) -> Crossing:
    a, b, c, dd = d.crossings[i]
    # re-root at the incoming end of the old over-strand
    return (dd, a, b, c) if d.over_incoming(i) == 3 else (b, c, dd, a)


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing."""
    out = tuple(_switched(d, i) for i in range(d.n_crossings))
    hint = tuple(4 - o for o in d._over_in)
    return Diagram(out, d.components, d.free_loops, hint)


def switch_crossing(d: Diagram, i: int) -> Diagram:
    """Exchange over and under at crossing ``i`` only."""
    if not 0 <= i < d.n_crossings:
        raise DiagramError(f"no crossing {i}")
    out = list(d.crossings)
    out[i] = _switched(d, i)
    hint = list(d._over_in)
    hint[i] = 4 - hint[i]
    return Diagram(tuple(out), d.components, d.free_loops, tuple(hint))


def reverse_component(d: Diagram, i: int) -> Diagram:
    """Reverse the orientation of PD component ``i``; edge labels are kept."""
    if not 0 <= i < len(d.components):
        raise DiagramError(f"no PD component {i}")
    cyc = d.components[i]
    members = set(cyc)
    out, hint = [], []
    for k, (a, b, c, dd) in enumerate(d.crossings):
        h = d._over_in[k]
        if a in members:
            # the under-strand now enters on c; the over slots trade places
            a, b, c, dd = c, dd, a, b
            h = 4 - h
        if b in members:
            h = 4 - h
        out.append((a, b, c, dd))
        hint.append(h)
    comps = list(d.components)
    comps[i] = (cyc[0],) + tuple(reversed(cyc[1:]))
    return Diagram(tuple(out), tuple(comps), d.free_loops, tuple(hint))


def relabel(d: Diagram, mapping: dict[int, int]) -> Diagram:
    """Rename edges through an injective ``mapping`` (missing keys stay put)."""
    f = lambda e: mapping.get(e, e)  # noqa: E731
    new = [f(e) for e in d.edges]
    if len(set(new)) != len(new) or min(new, default=1) <= 0:
        raise DiagramError("relabelling must be injective onto positive integers")
    return Diagram(
        tuple(tuple(f(e) for e in x) for x in d.crossings),
        tuple(tuple(f(e) for e in c) for c in d.components),
        d.free_loops,
        d._over_in,
    )


def _incoming_slots(d: Diagram, i: int) -> tuple[int, int]:
    return (0, d.over_incoming(i))


def add_curl(d: Diagram, edge: int | None = None, sign: int = 1, under_first: bool = True) -> Diagram:
    """Insert a Reidemeister-I curl of crossing sign ``sign`` on ``edge``.

    ``under_first`` picks which pass through the new crossing is the
    under-pass.  With ``edge=None`` the curl is drawn on a free loop.
    """
    if sign not in (1, -1):
        raise DiagramError("curl sign must be +1 or -1")
    top = max(d.edges, default=0)
    e, x, y = (edge, top + 1, top + 2)
    if edge is None:
        if d.free_loops < 1:
            raise DiagramError("no free loop to put a curl on")
        # the circle becomes a two-edge component: e enters the curl, x is the loop,
        # and the edge leaving the curl is e again
        e = top + 1
        x = top + 2
        quad = _curl_quad(e, x, e, sign, under_first)
        return Diagram(d.crossings + (quad,), d.components + ((e, x),), d.free_loops - 1, d._over_in + (None,))

    if edge not in d._succ:
        raise DiagramError(f"unknown edge {edge}")
    crossings = [list(q) for q in d.crossings]
    # the head of e is its incoming occurrence
    done = False
    for i, q in enumerate(crossings):
        for slot in _incoming_slots(d, i):
            if q[slot] == e and not done:
                q[slot] = y
                done = True
    assert done
    crossings = [tuple(q) for q in crossings]
    crossings.append(_curl_quad(e, x, y, sign, under_first))
    comps = []
    for cyc in d.components:
        if e in cyc:
            k = cyc.index(e)
            cyc = cyc[: k + 1] + (x, y) + cyc[k + 1 :]
        comps.append(cyc)
    return Diagram(tuple(crossings), tuple(comps), d.free_loops, d._over_in + (None,))


def _curl_quad(e: int, x: int, y: int, sign: int, under_first: bool) -> Crossing:
    # path: e -> (curl crossing) -> loop x -> (curl crossing) -> y
    if under_first:
        return (e, y, x, x) if sign > 0 else (e, x, x, y)
    return (x, x, y, e) if sign > 0 else (x, e, y, x)


def add_disjoint_circle(d: Diagram) -> Diagram:
    return Diagram(d.crossings, d.components, d.free_loops + 1, d._over_in)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    off = max(d1.edges, default=0)
    shift = lambda q: tuple(e + off for e in q)  # noqa: E731
    return Diagram(
        d1.crossings + tuple(shift(q) for q in d2.crossings),
        d1.components + tuple(shift(c) for c in d2.components),
        d1.free_loops + d2.free_loops,
        d1._over_in + d2._over_in,
    )


def diagram_from_crossings(crossings: Iterable[Crossing], components, free_loops: int = 0, over_hint=None) -> Diagram:
    return Diagram(tuple(crossings), tuple(components), free_loops, over_hint)
