"""Two-string tangles: expressions, bracket vectors and compiled diagrams.

Expression grammar (ASCII, whitespace ignored)::

    expr    := term (("+" | "-") term)*      # "-" adds the mirror image
    term    := prod ("*" prod)*              # vertical sum
    prod    := unary ("." unary)*            # T.U = T^-1 + U
    unary   := "-" unary | postfix           # prefix "-" is the mirror image
    postfix := primary ("^-1" | "^w" | "^wb")*
    primary := INT | "inf" | "(" expr ")"

All binary operators are left-associative.  A ``-`` immediately followed by
digits where an operand is expected is a signed integer literal.  ``∞`` and
``ω`` (``ω̄``) are accepted as aliases of ``inf`` and ``w`` (``wb``).

The bracket vector ``br(T) = (f, g)`` holds the coefficients of ``<T>`` on
the 0-tangle (NW-NE and SW-SE arcs) and the infinity tangle (NW-SW and
NE-SE arcs).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Union

from .bracket import bracket_from_histogram
from .diagram import Diagram
from .laurent import A, DELTA, ONE, ZERO, LaurentPoly, Mat2, conjugate, invert_monomial
from .statesum import DEFAULT_CAP, StateSumCapExceeded, state_histogram

__all__ = [
    "Int",
    "Infinity",
    "Sum",
    "VSum",
    "Prod",
    "Inv",
    "Mirror",
    "Omega",
    "OmegaBar",
    "TangleExpr",
    "TangleSyntaxError",
    "parse_tangle",
    "to_text",
    "BracketVector",
    "bracket_vector",
    "closure_brackets",
    "omega_rewrite",
    "simplify",
    "crossing_count",
    "TangleDiagram",
    "compile_tangle",
    "tangle_bracket_statesum",
    "numerator_closure",
    "denominator_closure",
    "closed_diagram",
    "glue",
    "M_PLUS",
    "M_STAR",
    "OMEGA",
    "OMEGA_INV",
    "CLOSURE",
    "sum_matrix",
    "vsum_matrix",
]

MAX_INT_LITERAL = 2**31 - 1


# --------------------------------------------------------------------------
# expression tree


@dataclass(frozen=True)
class Int:
    n: int


@dataclass(frozen=True)
class Infinity:
    pass


@dataclass(frozen=True)
class Sum:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class VSum:
    top: "TangleExpr"
    bottom: "TangleExpr"


@dataclass(frozen=True)
class Prod:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Inv:
    arg: "TangleExpr"


@dataclass(frozen=True)
class Mirror:
    arg: "TangleExpr"


@dataclass(frozen=True)
class Omega:
    arg: "TangleExpr"


@dataclass(frozen=True)
class OmegaBar:
    arg: "TangleExpr"


TangleExpr = Union[Int, Infinity, Sum, VSum, Prod, Inv, Mirror, Omega, OmegaBar]
INF = Infinity()


class TangleSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1}: {text!r}")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<inf>inf|∞)
  | (?P<pow>\^\s*(?:-\s*1|wb|w|ω̄|ω))
  | (?P<op>[-+*.()])
    """,
    re.VERBOSE,
)


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise TangleSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            val = m.group()
            if kind == "pow":
                val = re.sub(r"\s+", "", val)[1:]
                val = {"ω": "w", "ω̄": "wb"}.get(val, val)
            out.append((kind, val, m.start()))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        shown = tok[1] or "end of input"
        raise TangleSyntaxError(f"{msg} (got {shown!r})", self.text, tok[2])

    def parse(self):
        e = self.expr()
        if self.peek()[0] != "eof":
            self.error("unexpected token")
        return e

    def expr(self):
        left = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            right = self.term()
            left = Sum(left, right if op == "+" else Mirror(right))
        return left

    def term(self):
        left = self.prod()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            left = VSum(left, self.prod())
        return left

    def prod(self):
        left = self.unary()
        while self.peek()[:2] == ("op", "."):
            self.take()
            left = Prod(left, self.unary())
        return left

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            nxt = self.toks[self.k + 1]
            if nxt[0] == "int" and nxt[2] == tok[2] + 1:
                self.take()
                return self.postfix(self.integer(self.take(), negative=True, start=tok[2]))
            self.take()
            return Mirror(self.unary())
        return self.postfix(self.primary())

    def integer(self, tok, negative=False, start=None):
        n = int(tok[1])
        if n > MAX_INT_LITERAL:
            raise TangleSyntaxError("integer literal overflow", self.text, start if start is not None else tok[2])
        return Int(-n if negative else n)

    def primary(self):
        tok = self.take()
        if tok[0] == "int":
            return self.integer(tok)
        if tok[0] == "inf":
            return INF
        if tok[:2] == ("op", "("):
            e = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return e
        self.error("expected a tangle", tok)

    def postfix(self, e):
        while self.peek()[0] == "pow":
            p = self.take()[1]
            if p == "w":
                e = Omega(e)
            elif p == "wb":
                e = OmegaBar(e)
            else:
                e = Inv(e)
        return e


def parse_tangle(text: str) -> TangleExpr:
    """Parse a tangle expression (see module docstring for the grammar)."""
    return _Parser(text).parse()


_PREC = {Sum: 1, VSum: 2, Prod: 3}


def to_text(e: TangleExpr) -> str:
    """Render ``e`` so that ``parse_tangle(to_text(e)) == e``."""

    def wrap(child, min_prec, right=False):
        s = go(child)
        p = _PREC.get(type(child), 9)
        if isinstance(child, Mirror) and not (isinstance(child.arg, Int)):
            p = 4
        if p < min_prec or (right and p == min_prec):
            return f"({s})"
        return s

    def go(x):
        if isinstance(x, Int):
            return str(x.n)
        if isinstance(x, Infinity):
            return "inf"
        if isinstance(x, Sum):
            if isinstance(x.right, Mirror):
                return f"{wrap(x.left, 1)} - {wrap(x.right.arg, 1, right=True)}"
            return f"{wrap(x.left, 1)} + {wrap(x.right, 1, right=True)}"
        if isinstance(x, VSum):
            return f"{wrap(x.top, 2)}*{wrap(x.bottom, 2, right=True)}"
        if isinstance(x, Prod):
            return f"{wrap(x.left, 3)}.{wrap(x.right, 3, right=True)}"
        if isinstance(x, Mirror):
            inner = go(x.arg)
            # a bare digit after "-" would read back as a negative literal
            if isinstance(x.arg, (Int, Sum, VSum, Prod, Mirror)) or inner[0].isdigit():
                inner = f"({inner})"
            return f"-{inner}"
        suffix = {Inv: "^-1", Omega: "^w", OmegaBar: "^wb"}[type(x)]
        inner = go(x.arg)
        if not isinstance(x.arg, (Infinity, Inv, Omega, OmegaBar)) and not (
            isinstance(x.arg, Int) and x.arg.n >= 0
        ):
            inner = f"({inner})"
        return inner + suffix

    return go(e)


# --------------------------------------------------------------------------
# bracket vectors


@dataclass(frozen=True)
class BracketVector:
    f: LaurentPoly
    g: LaurentPoly

    def __iter__(self) -> Iterator[LaurentPoly]:
        yield self.f
        yield self.g

    def conjugate(self) -> "BracketVector":
        return BracketVector(conjugate(self.f), conjugate(self.g))

    def __str__(self) -> str:
        return f"({self.f}, {self.g})"


M_PLUS = Mat2(A, ZERO, invert_monomial(A), LaurentPoly({-3: -1}))
M_STAR = Mat2(LaurentPoly({3: -1}), A, ZERO, invert_monomial(A))
OMEGA = (M_PLUS @ M_PLUS) @ M_STAR @ (M_PLUS @ M_PLUS)
OMEGA_INV = OMEGA.inverse()
CLOSURE = Mat2(DELTA, ONE, ONE, DELTA)

BR_ZERO = BracketVector(ONE, ZERO)
BR_INF = BracketVector(ZERO, ONE)


def sum_matrix(u: BracketVector) -> Mat2:
    """br(T + U) = sum_matrix(br(U)) · br(T)."""
    return Mat2(u.f, ZERO, u.g, u.f + DELTA * u.g)


def vsum_matrix(u: BracketVector) -> Mat2:
    """br(T * U) = vsum_matrix(br(U)) · br(T)."""
    return Mat2(DELTA * u.f + u.g, u.f, ZERO, u.g)


@lru_cache(maxsize=4096)
def bracket_vector(t: TangleExpr) -> BracketVector:
    """br(T) computed from the expression by the tangle calculus."""
    if isinstance(t, Int):
        return (M_PLUS ** t.n).apply(BR_ZERO)
    if isinstance(t, Infinity):
        return BR_INF
    if isinstance(t, Sum):
        return sum_matrix(bracket_vector(t.right)).apply(bracket_vector(t.left))
    if isinstance(t, VSum):
        return vsum_matrix(bracket_vector(t.bottom)).apply(bracket_vector(t.top))
    if isinstance(t, Prod):
        return bracket_vector(Sum(Inv(t.left), t.right))
    if isinstance(t, Inv):
        f, g = bracket_vector(t.arg)
        return BracketVector(conjugate(g), conjugate(f))
    if isinstance(t, Mirror):
        return bracket_vector(t.arg).conjugate()
    if isinstance(t, Omega):
        return OMEGA.apply(bracket_vector(t.arg))
    if isinstance(t, OmegaBar):
        return OMEGA_INV.apply(bracket_vector(t.arg))
    raise TypeError(f"not a tangle expression: {t!r}")


def closure_brackets(t: TangleExpr) -> tuple[LaurentPoly, LaurentPoly]:
    """(<N(T)>, <D(T)>) = (delta f + g, f + delta g)."""
    return CLOSURE.apply(tuple(bracket_vector(t)))


# --------------------------------------------------------------------------
# rewriting


def omega_rewrite(t: TangleExpr, direction: str = "w") -> TangleExpr:
    """Apply the omega operation (``"w"``) or its inverse (``"wb"``) structurally.

    T^w = ((T + 2) * 1) + 2 and T^wb = ((T - 2) * (-1)) - 2.  Omega nodes
    already inside ``t`` are expanded the same way.
    """
    base = expand_omegas(t)
    if direction == "w":
        return Sum(VSum(Sum(base, Int(2)), Int(1)), Int(2))
    if direction == "wb":
        return Sum(VSum(Sum(base, Mirror(Int(2))), Int(-1)), Mirror(Int(2)))
    raise ValueError(f"direction must be 'w' or 'wb', got {direction!r}")


def expand_omegas(t: TangleExpr) -> TangleExpr:
    if isinstance(t, (Int, Infinity)):
        return t
    if isinstance(t, Omega):
        return omega_rewrite(t.arg, "w")
    if isinstance(t, OmegaBar):
        return omega_rewrite(t.arg, "wb")
    if isinstance(t, (Inv, Mirror)):
        return type(t)(expand_omegas(t.arg))
    if isinstance(t, VSum):
        return VSum(expand_omegas(t.top), expand_omegas(t.bottom))
    return type(t)(expand_omegas(t.left), expand_omegas(t.right))


def _flatten(t, cls):
    if isinstance(t, cls):
        a, b = (t.left, t.right) if cls is Sum else (t.top, t.bottom)
        return _flatten(a, cls) + _flatten(b, cls)
    return [t]


def _rebuild(items, cls):
    out = items[0]
    for x in items[1:]:
        out = cls(out, x)
    return out


def simplify(t: TangleExpr) -> TangleExpr:
    """Regular-isotopy simplifications used before compiling.

    Omega nodes are expanded, mirrors pushed down to the integers, adjacent
    integer summands merged (n + m = n+m cancels crossings in Reidemeister II
    pairs), 0 dropped from sums and infinity dropped from vertical sums.  None
    of these change the bracket vector or the writhe of any closure.
    """
    return _simp(expand_omegas(t), False)


def _simp(t, mirrored):
    if isinstance(t, Int):
        return Int(-t.n if mirrored else t.n)
    if isinstance(t, Infinity):
        return t
    if isinstance(t, Mirror):
        return _simp(t.arg, not mirrored)
    if isinstance(t, Inv):
        return Inv(_simp(t.arg, mirrored))
    if isinstance(t, Prod):
        return _simp_sum(Sum(Inv(t.left), t.right), mirrored)
    if isinstance(t, Sum):
        return _simp_sum(t, mirrored)
    if isinstance(t, VSum):
        items = [_simp(x, mirrored) for x in _flatten(t, VSum)]
        flat = []
        for x in items:
            flat.extend(_flatten(x, VSum))
        flat = [x for x in flat if not isinstance(x, Infinity)]
        return _rebuild(flat, VSum) if flat else INF
    raise TypeError(f"unexpected node {t!r}")


def _simp_sum(t, mirrored):
    items = [_simp(x, mirrored) for x in _flatten(t, Sum)]
    flat = []
    for x in items:
        flat.extend(_flatten(x, Sum))
    merged: list = []
    for x in flat:
        if isinstance(x, Int) and merged and isinstance(merged[-1], Int):
            merged[-1] = Int(merged[-1].n + x.n)
        else:
            merged.append(x)
    merged = [x for x in merged if x != Int(0)]
    return _rebuild(merged, Sum) if merged else Int(0)


def crossing_count(t: TangleExpr) -> int:
    """Crossings in the compiled diagram of ``t``."""
    return len(compile_tangle(t).crossings)


# --------------------------------------------------------------------------
# tangle diagrams

_END_NAMES = ("NW", "NE", "SW", "SE")


@dataclass(frozen=True)
class TangleDiagram:
    """Unoriented tangle diagram.

    ``crossings`` are rows of four strand labels in counterclockwise order
    with the under-strand on slots 0 and 2 (A-smoothing joins 0-1 and 2-3).
    ``ends`` are the labels leaving through NW, NE, SW, SE.  Every label
    occurs exactly twice among crossing slots and ends.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    ends: tuple[int, int, int, int]
    free_loops: int = 0
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        counts: dict[int, int] = {}
        for x in self.crossings:
            for e in x:
                counts[e] = counts.get(e, 0) + 1
        for e in self.ends:
            counts[e] = counts.get(e, 0) + 1
        bad = {e: k for e, k in counts.items() if k != 2}
        if bad:
            raise ValueError(f"tangle labels must occur exactly twice: {bad}")

    @property
    def n_labels(self) -> int:
        return len({e for x in self.crossings for e in x} | set(self.ends))

    def end(self, name: str) -> int:
        return self.ends[_END_NAMES.index(name)]


def glue(parts, pairs, ends, loops):
    """Merge labelled pieces, identify label pairs, and renumber.

    ``parts`` is a list of crossing lists already in a shared label space.
    Classes of identified labels that no longer occur anywhere are closed
    circles and are added to ``loops``.
    """
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    labels = set(ends)
    for x in parts:
        labels.update(x)
    for u, v in pairs:
        labels.update((u, v))
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    roots = {find(e) for e in labels}
    used = {find(e) for x in parts for e in x} | {find(e) for e in ends}
    loops += len(roots - used)
    index: dict[int, int] = {}

    def lab(e):
        r = find(e)
        if r not in index:
            index[r] = len(index)
        return index[r]

    crossings = tuple(tuple(lab(e) for e in x) for x in parts)
    return TangleDiagram(crossings, tuple(lab(e) for e in ends), loops)


def _offset(td: TangleDiagram, k: int):
    return [tuple(e + k for e in x) for x in td.crossings], tuple(e + k for e in td.ends)


def _td_zero():
    return TangleDiagram((), (0, 0, 1, 1))


def _td_inf():
    return TangleDiagram((), (0, 1, 0, 1))


def _td_one():
    # slots counterclockwise SW, SE, NE, NW; SW-NE passes under
    return TangleDiagram(((0, 1, 2, 3),), (3, 2, 0, 1))


def _td_sum(t: TangleDiagram, u: TangleDiagram) -> TangleDiagram:
    k = t.n_labels
    uc, ue = _offset(u, k)
    tnw, tne, tsw, tse = t.ends
    unw, une, usw, use = ue
    return glue(list(t.crossings) + uc, [(tne, unw), (tse, usw)], (tnw, une, tsw, use), t.free_loops + u.free_loops)


def _td_vsum(t: TangleDiagram, u: TangleDiagram) -> TangleDiagram:
    k = t.n_labels
    uc, ue = _offset(u, k)
    tnw, tne, tsw, tse = t.ends
    unw, une, usw, use = ue
    return glue(list(t.crossings) + uc, [(tsw, unw), (tse, une)], (tnw, tne, usw, use), t.free_loops + u.free_loops)


def _td_mirror(t: TangleDiagram) -> TangleDiagram:
    return TangleDiagram(tuple(x[1:] + x[:1] for x in t.crossings), t.ends, t.free_loops)


def _td_rotate(t: TangleDiagram) -> TangleDiagram:
    """Rotate a quarter turn counterclockwise: NW->SW, SW->SE, SE->NE, NE->NW."""
    nw, ne, sw, se = t.ends
    return TangleDiagram(t.crossings, (ne, se, nw, sw), t.free_loops)


def _td_inv(t: TangleDiagram) -> TangleDiagram:
    return _td_mirror(_td_rotate(t))


def _td_int(n: int) -> TangleDiagram:
    if n == 0:
        return _td_zero()
    unit = _td_one() if n > 0 else _td_mirror(_td_one())
    out = unit
    for _ in range(abs(n) - 1):
        out = _td_sum(out, unit)
    return out


def compile_tangle(t: TangleExpr, simplify_first: bool = True) -> TangleDiagram:
    """Build a tangle diagram realising ``t``.

    Integer n is |n| horizontal half-twists (right-handed for n > 0), sums
    glue side by side or top to bottom, the inverse is a quarter turn
    counterclockwise followed by the mirror image.  Omega nodes are expanded
    first; with ``simplify_first`` the expression is passed through
    :func:`simplify`.
    """
    t = simplify(t) if simplify_first else expand_omegas(t)
    return _compile(t)


def _compile(t):
    if isinstance(t, Int):
        return _td_int(t.n)
    if isinstance(t, Infinity):
        return _td_inf()
    if isinstance(t, Sum):
        return _td_sum(_compile(t.left), _compile(t.right))
    if isinstance(t, VSum):
        return _td_vsum(_compile(t.top), _compile(t.bottom))
    if isinstance(t, Prod):
        return _td_sum(_td_inv(_compile(t.left)), _compile(t.right))
    if isinstance(t, Inv):
        return _td_inv(_compile(t.arg))
    if isinstance(t, Mirror):
        return _td_mirror(_compile(t.arg))
    raise TypeError(f"cannot compile {t!r}")


def tangle_bracket_statesum(td: TangleDiagram, cap: int = DEFAULT_CAP, backend: str = "auto") -> BracketVector:
    """br(T) read off a tangle diagram by enumerating all smoothing states."""
    n = len(td.crossings)
    if n > cap:
        raise StateSumCapExceeded(f"state-sum cap exceeded: {n} crossings > cap {cap}")
    hist = state_histogram(td.crossings, td.n_labels, ends=td.ends, cap=cap, backend=backend)
    if hist[2].any():
        raise RuntimeError("a smoothing state joined NW to SE; the tangle diagram is not planar")
    f = bracket_from_histogram(hist[0], n, td.free_loops)
    g = bracket_from_histogram(hist[1], n, td.free_loops)
    return BracketVector(f, g)


# --------------------------------------------------------------------------
# closures and orientation


def closed_diagram(crossings, free_loops: int = 0, reverse: tuple[int, ...] = ()) -> Diagram:
    """Orient a closed unoriented diagram and return it as a PD :class:`Diagram`.

    ``crossings`` use the slot convention of :class:`TangleDiagram`; every
    label must occur exactly twice.  Components are traced starting from
    their smallest label, leaving the first occurrence of that label; edges
    are renumbered 1, 2, ... along each component in turn.  Components whose
    index is in ``reverse`` are traversed the other way.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(crossings):
        for s, e in enumerate(x):
            occ.setdefault(e, []).append((i, s))
    for e, o in occ.items():
        if len(o) != 2:
            raise ValueError(f"label {e} occurs {len(o)} times in a closed diagram")

    slot_edge: dict[tuple[int, int], int] = {}
    head_slots: set[tuple[int, int]] = set()
    components = []
    seen: set[int] = set()
    next_edge = 1
    for start in sorted(occ):
        if start in seen:
            continue
        cidx = len(components)
        tail, head = occ[start]
        if cidx in reverse:
            tail, head = head, tail
        cyc = []
        label = start
        while True:
            seen.add(label)
            cyc.append(next_edge)
            slot_edge[tail] = next_edge
            slot_edge[head] = next_edge
            head_slots.add(head)
            next_edge += 1
            i, s = head
            tail = (i, (s + 2) % 4)
            label = crossings[i][tail[1]]
            a, b = occ[label]
            head = b if a == tail else a
            if label == start and tail == _first_tail(occ, start, cidx in reverse):
                break
        components.append(tuple(cyc))

    quads, hint = [], []
    for i in range(len(crossings)):
        s0 = 0 if (i, 0) in head_slots else 2
        quads.append(tuple(slot_edge[(i, (s0 + k) % 4)] for k in range(4)))
        hint.append(1 if (i, (s0 + 1) % 4) in head_slots else 3)
    return Diagram(tuple(quads), tuple(components), free_loops, tuple(hint))


def _first_tail(occ, start, reversed_):
    return occ[start][1] if reversed_ else occ[start][0]


def numerator_closure(td: TangleDiagram, reverse: tuple[int, ...] = ()) -> Diagram:
    """Join NW to NE and SW to SE."""
    nw, ne, sw, se = td.ends
    closed = glue(list(td.crossings), [(nw, ne), (sw, se)], (), td.free_loops)
    return closed_diagram(closed.crossings, closed.free_loops, reverse)


def denominator_closure(td: TangleDiagram, reverse: tuple[int, ...] = ()) -> Diagram:
    """Join NW to SW and NE to SE."""
    nw, ne, sw, se = td.ends
    closed = glue(list(td.crossings), [(nw, sw), (ne, se)], (), td.free_loops)
    return closed_diagram(closed.crossings, closed.free_loops, reverse)
