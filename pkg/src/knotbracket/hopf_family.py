"""Doubled-Hopf satellites H(T, U) and links with trivial Jones polynomial.

H(T, U) replaces each component of the Hopf link by a band of two parallel
strands, giving two 4-crossing clasps, and cuts each band open to hold a
tangle.  Its bracket is bilinear in the bracket vectors of the two tangles:

    <H(T, U)> = br(T)^t · M · br(U),   M = [[h00, delta^2], [delta^2, delta]].

Because ``Omega^t · M · Omega^-1 == M``, replacing (T, U) by (T^w, U^wb)
keeps the bracket.  Starting from the unlink H(inf - 2, inf + 2) this gives
the family S(n) of 2-component links whose Jones polynomial is that of the
unlink (even n) or t^(±6) times it (odd n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bracket import DEFAULT_CAP, JonesPoly, jones_from_bracket, kauffman_bracket
from .diagram import Diagram, reverse_component, writhe
from .laurent import DELTA, LaurentPoly, Mat2, parse_laurent
from .tangle import (
    BracketVector,
    Infinity,
    Int,
    Mirror,
    Omega,
    OmegaBar,
    Sum,
    TangleExpr,
    glue,
    bracket_vector,
    closed_diagram,
    compile_tangle,
)

__all__ = [
    "HopfForm",
    "HOPF_FORM",
    "H00",
    "hopf_bracket",
    "compile_H",
    "omega_transform",
    "thistlethwaite",
    "thistlethwaite_pair",
    "SFamilyEntry",
    "s_family",
    "family_tangle",
    "writhes_over_orientations",
    "NOT_VERIFIED",
]

# Claims about S(n) that this package does not check.  Telling the links
# apart needs a stronger invariant, such as the two-variable Kauffman
# polynomial; only the Jones side is computed here.
NOT_VERIFIED = (
    "S(n) is a non-trivial link for every n",
    "the links S(n) are pairwise distinct",
)

H00 = -parse_laurent("A^-14 + A^-6 + 2A^-2 + 2A^2 + A^6 + A^14", "A")
H01 = DELTA * DELTA
H11 = DELTA


@dataclass(frozen=True)
class HopfForm:
    """Symmetric bilinear form giving <H(T, U)> from br(T) and br(U)."""

    h00: LaurentPoly = H00
    h01: LaurentPoly = H01
    h11: LaurentPoly = H11

    def __post_init__(self):
        if (self.h00, self.h01, self.h11) != (H00, H01, H11):
            raise ValueError("HopfForm entries are fixed by the doubled-Hopf pattern")

    @property
    def matrix(self) -> Mat2:
        return Mat2(self.h00, self.h01, self.h01, self.h11)

    def __call__(self, bt: BracketVector, bu: BracketVector) -> LaurentPoly:
        return (
            self.h00 * bt.f * bu.f
            + self.h01 * (bt.f * bu.g + bt.g * bu.f)
            + self.h11 * bt.g * bu.g
        )


HOPF_FORM = HopfForm()


def hopf_bracket(t: TangleExpr, u: TangleExpr) -> LaurentPoly:
    return HOPF_FORM(bracket_vector(t), bracket_vector(u))


# Template: band 1 runs around a circle centred left of band 2's circle, each
# band being an inner and an outer strand.  Band 1 passes over at the upper
# clasp, band 2 at the lower one.  Rows use the tangle slot convention
# (counterclockwise, under-strand on slots 0 and 2).  The T slot cuts band 1
# at its leftmost point and the U slot cuts band 2 at its rightmost point;
# each slot lists the labels meeting NW, NE, SW, SE, with N on the inner
# strand and W on the side the band arrives from when run counterclockwise.
_TEMPLATE = (
    (12, 4, 11, 0),
    (3, 13, 4, 12),
    (17, 0, 16, 1),
    (2, 18, 3, 17),
    (11, 9, 10, 5),
    (8, 14, 9, 13),
    (16, 5, 15, 6),
    (7, 19, 8, 18),
)
_SLOT_T = (1, 2, 6, 7)
_SLOT_U = (14, 10, 19, 15)
_TEMPLATE_LABELS = 20


def compile_H(t: TangleExpr, u: TangleExpr, reverse: tuple[int, ...] = ()) -> Diagram:
    """Oriented PD diagram of H(T, U); ``reverse`` flips the listed components."""
    td_t, td_u = compile_tangle(t), compile_tangle(u)
    k_t = _TEMPLATE_LABELS
    k_u = k_t + td_t.n_labels
    parts = list(_TEMPLATE)
    parts += [tuple(e + k_t for e in x) for x in td_t.crossings]
    parts += [tuple(e + k_u for e in x) for x in td_u.crossings]
    pairs = [(s, e + k_t) for s, e in zip(_SLOT_T, td_t.ends)]
    pairs += [(s, e + k_u) for s, e in zip(_SLOT_U, td_u.ends)]
    closed = glue(parts, pairs, (), td_t.free_loops + td_u.free_loops)
    return closed_diagram(closed.crossings, closed.free_loops, reverse)


def omega_transform(t: TangleExpr, u: TangleExpr) -> tuple[TangleExpr, TangleExpr]:
    """H(T, U) -> H(T^w, U^wb)."""
    return Omega(t), OmegaBar(u)


def thistlethwaite_pair() -> tuple[TangleExpr, TangleExpr]:
    return omega_transform(Int(-1), Sum(Infinity(), Int(2)))


def thistlethwaite() -> Diagram:
    """Thistlethwaite's 15-crossing link: H(T, U)^w for T = -1, U = inf + 2."""
    return compile_H(*thistlethwaite_pair())


def writhes_over_orientations(d: Diagram) -> frozenset[int]:
    """Writhes of ``d`` over all relative orientations of its cycle components."""
    out = set()
    for flips in itertools.product((False, True), repeat=max(len(d.components) - 1, 0)):
        x = d
        for i, flip in enumerate(flips, start=1):
            if flip:
                x = reverse_component(x, i)
        out.add(writhe(x))
    return frozenset(out)


def family_tangle(n: int) -> TangleExpr:
    """T_n: T_0 = inf - 2 and T_(n+1) = T_n^w."""
    if n < 0:
        raise ValueError(f"family index must be non-negative, got {n}")
    t: TangleExpr = Sum(Infinity(), Mirror(Int(2)))
    for _ in range(n):
        t = Omega(t)
    return t


@dataclass(frozen=True)
class SFamilyEntry:
    """S(n) = H(T_n, -T_n) with its invariants.

    ``writhe`` and ``jones`` are for the orientation chosen by
    :func:`compile_H`; ``writhes`` covers both relative orientations.
    ``oracle_bracket`` is the state-sum bracket of ``diagram`` when it was
    requested and the crossing count is within the cap, else ``None``.
    """

    n: int
    T: TangleExpr
    U: TangleExpr
    diagram: Diagram
    writhe: int
    writhes: frozenset[int]
    bracket: LaurentPoly
    jones: JonesPoly
    oracle_bracket: LaurentPoly | None = field(default=None, compare=False)

    @property
    def oracle_checked(self) -> bool:
        return self.oracle_bracket is not None


def s_family(n: int, verify: bool = False, cap: int = DEFAULT_CAP) -> SFamilyEntry:
    """Build S(n); with ``verify`` also run the state sum when within ``cap``."""
    t = family_tangle(n)
    u = Mirror(t)
    d = compile_H(t, u)
    w = writhe(d)
    br = hopf_bracket(t, u)
    oracle = None
    if verify and d.n_crossings <= cap:
        oracle = kauffman_bracket(d, cap=cap)
    return SFamilyEntry(
        n=n,
        T=t,
        U=u,
        diagram=d,
        writhe=w,
        writhes=writhes_over_orientations(d),
        bracket=br,
        jones=jones_from_bracket(br, w),
        oracle_bracket=oracle,
    )
