"""Kauffman bracket by state sum, the normalized bracket and the Jones polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, writhe
from .laurent import DELTA, ONE, ZERO, LaurentPoly, format_terms, invert_monomial, monomial
from .statesum import DEFAULT_CAP, StateSumCapExceeded, state_histogram

__all__ = [
    "kauffman_bracket",
    "normalized_bracket",
    "jones",
    "jones_from_bracket",
    "writhe_factor",
    "JonesPoly",
    "BracketError",
    "StateSumCapExceeded",
    "DEFAULT_CAP",
    "bracket_from_histogram",
]


class BracketError(ValueError):
    pass


def _delta_powers(k: int) -> list[LaurentPoly]:
    out = [ONE]
    for _ in range(k):
        out.append(out[-1] * DELTA)
    return out


def bracket_from_histogram(hist, n: int, loop_offset: int) -> LaurentPoly:
    """Sum ``A^(nA - nB) * delta^(loops + loop_offset)`` over a histogram slice."""
    n_a_max, max_loops = hist.shape
    dp = _delta_powers(max_loops + max(loop_offset, 0))
    total = ZERO
    for n_a in range(n_a_max):
        inner = ZERO
        for loops in range(max_loops):
            cnt = int(hist[n_a, loops])
            if cnt:
                k = loops + loop_offset
                if k < 0:
                    raise BracketError("negative power of delta in state sum")
                inner = inner + dp[k] * cnt
        if inner:
            total = total + inner.shift(2 * n_a - n)
    return total


def kauffman_bracket(d: Diagram, cap: int = DEFAULT_CAP, backend: str = "auto") -> LaurentPoly:
    """<d> as the sum over all 2^n smoothing states.

    Raises :class:`StateSumCapExceeded` above ``cap`` crossings.
    """
    if d.n_crossings == 0 and d.free_loops == 0:
        raise BracketError("the empty diagram has no bracket")
    if d.n_crossings == 0:
        return DELTA ** (d.free_loops - 1)
    if d.n_crossings > cap:
        raise StateSumCapExceeded(
            f"state-sum cap exceeded: {d.n_crossings} crossings > cap {cap} (use the tangle algebra instead)"
        )
    index = {e: i for i, e in enumerate(d.edges)}
    rows = [[index[e] for e in x] for x in d.crossings]
    hist = state_histogram(rows, len(index), cap=cap, backend=backend)
    return bracket_from_histogram(hist[0], d.n_crossings, d.free_loops - 1)


def writhe_factor(w: int) -> LaurentPoly:
    """(-A)^(-3w)."""
    return invert_monomial(monomial(3 * w, (-1) ** (w % 2)))


@dataclass(frozen=True)
class JonesPoly:
    """Jones polynomial stored in q = t^(1/4); ``q`` holds integer q-exponents."""

    q: LaurentPoly

    @classmethod
    def from_normalized_bracket(cls, x: LaurentPoly) -> "JonesPoly":
        # A = t^(-1/4) = q^-1
        return cls(x.substitute_power(-1))

    def t_terms(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(e, 4), c) for e, c in self.q.terms.items()]

    def __str__(self) -> str:
        def fmt(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return format_terms(self.t_terms(), "t", fmt)

    def __eq__(self, other):
        if isinstance(other, JonesPoly):
            return self.q == other.q
        return NotImplemented

    def __hash__(self):
        return hash(self.q)


def jones_from_bracket(bracket: LaurentPoly, w: int) -> JonesPoly:
    return JonesPoly.from_normalized_bracket(writhe_factor(w) * bracket)


def normalized_bracket(d: Diagram, cap: int = DEFAULT_CAP, backend: str = "auto") -> LaurentPoly:
    """(-A)^(-3 w(d)) <d>."""
    return writhe_factor(writhe(d)) * kauffman_bracket(d, cap=cap, backend=backend)


def jones(d: Diagram, cap: int = DEFAULT_CAP, backend: str = "auto") -> JonesPoly:
    return JonesPoly.from_normalized_bracket(normalized_bracket(d, cap=cap, backend=backend))
