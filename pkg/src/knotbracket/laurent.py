"""Exact Laurent polynomials over the integers and 2x2 matrices over them.

A :class:`LaurentPoly` is a sparse map ``exponent -> coefficient`` with no
zero coefficients stored, so equality of values is equality of term maps.
Python integers are unbounded, so coefficient arithmetic never wraps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "Mat2",
    "LaurentError",
    "A",
    "ONE",
    "ZERO",
    "DELTA",
    "monomial",
    "invert_monomial",
    "conjugate",
    "parse_laurent",
]


class LaurentError(ValueError):
    """Raised for operations that leave the ring (non-unit inverses and such)."""


Coercible = Union["LaurentPoly", int]


class LaurentPoly:
    """Immutable element of Z[x, x^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # terms must already be free of zeros
        p = object.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @classmethod
    def coerce(cls, value: Coercible) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls({0: value})
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_degree(self) -> int:
        if not self._terms:
            raise LaurentError("zero polynomial has no degree")
        return next(iter(self._terms))

    def max_degree(self) -> int:
        if not self._terms:
            raise LaurentError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentPoly":
        return self

    def __add__(self, other: Coercible) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise LaurentError("negative exponent; invert unit monomials with invert_monomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace x by x^k (k may be negative)."""
        if k == 0:
            raise LaurentError("substitution x -> x^0 is not injective")
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def evaluate(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    def to_str(self, var: str = "A") -> str:
        return format_terms(self._terms.items(), var)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_str()!r})"


def format_terms(items, var: str, exp_fmt=str) -> str:
    """Render ``(exponent, coefficient)`` pairs in the given order.

    ``exp_fmt`` turns an exponent into its printed form; it lets the Jones
    renderer print fractional powers of t.
    """
    out: list[str] = []
    for exp, coeff in items:
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            power = var if exp_fmt(exp) == "1" else f"{var}^{exp_fmt(exp)}"
            body = power if mag == 1 else f"{mag}{power}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?
    (?P<coeff>\d+)?
    (?:\*?(?P<var>[A-Za-z])(?:\^(?P<exp>[+-]?\d+))?)?
    """,
    re.VERBOSE,
)


def parse_laurent(text: str, var: str = "A") -> LaurentPoly:
    """Parse the rendering produced by :meth:`LaurentPoly.to_str`.

    Accepts optional whitespace and ``*`` between coefficient and variable,
    e.g. ``"-A^-14 - 2*A^2 + 3"``.
    """
    s = re.sub(r"\s+", "", text)
    if s in ("", "0"):
        if s == "":
            raise LaurentError("empty polynomial text")
        return ZERO
    pos = 0
    acc: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise LaurentError(f"cannot parse polynomial at offset {pos}: {text!r}")
        sign, coeff, v, exp = m.group("sign", "coeff", "var", "exp")
        if sign is None and not first:
            raise LaurentError(f"missing operator at offset {pos}: {text!r}")
        if coeff is None and v is None:
            raise LaurentError(f"dangling sign at offset {pos}: {text!r}")
        if v is not None and v != var:
            raise LaurentError(f"unexpected variable {v!r} (expected {var!r})")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        e = 0 if v is None else (int(exp) if exp is not None else 1)
        acc[e] = acc.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(acc)


def monomial(exp: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly({exp: coeff})


ZERO = LaurentPoly()
ONE = monomial(0)
A = monomial(1)
# loop value of the bracket: -A^-2 - A^2
DELTA = LaurentPoly({-2: -1, 2: -1})


def invert_monomial(p: LaurentPoly) -> LaurentPoly:
    """Inverse of a unit monomial ``±x^k``."""
    if not p.is_monomial():
        raise LaurentError(f"{p} is not a monomial; it has no inverse in the ring")
    ((e, c),) = p.terms.items()
    if c not in (1, -1):
        raise LaurentError(f"{p} has non-unit coefficient {c}")
    return LaurentPoly._raw({-e: c})


def conjugate(p: LaurentPoly) -> LaurentPoly:
    """The substitution x -> x^-1 (mirror image on brackets)."""
    return LaurentPoly._raw({-e: c for e, c in p.terms.items()})


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix ``[[a, b], [c, d]]`` over Laurent polynomials."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, LaurentPoly.coerce(getattr(self, name)))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(ONE, ZERO, ZERO, ONE)

    def rows(self) -> tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if isinstance(other, tuple) and len(other) == 2:
            return self.apply(other)
        return NotImplemented

    def apply(self, vec):
        """Matrix times column vector; returns the same vector type it was given."""
        x, y = vec
        out = (self.a * x + self.b * y, self.c * x + self.d * y)
        if type(vec) is tuple:
            return out
        return type(vec)(*out)

    def scale(self, s: Coercible) -> "Mat2":
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Mat2":
        d = self.det()
        try:
            inv = invert_monomial(d)
        except LaurentError as exc:
            raise LaurentError(f"matrix is not invertible over the ring: det = {d}") from exc
        return Mat2(self.d, -self.b, -self.c, self.a).scale(inv)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Mat2.identity(), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def conjugate(self) -> "Mat2":
        return Mat2(conjugate(self.a), conjugate(self.b), conjugate(self.c), conjugate(self.d))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"
