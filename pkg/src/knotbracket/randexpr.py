"""Random tangle expressions for differential and property checks."""

from __future__ import annotations

import random

from .tangle import Infinity, Int, Inv, Mirror, Omega, OmegaBar, Prod, Sum, TangleExpr, VSum

_BINARY = (Sum, VSum, Prod)
_UNARY = (Inv, Mirror, Omega, OmegaBar)


def random_tangle(rng: random.Random, max_depth: int = 5, omega: bool = True) -> TangleExpr:
    """A random expression tree of depth at most ``max_depth``.

    Leaves are small integers or infinity.  With ``omega`` false no Omega or
    OmegaBar nodes are produced.
    """
    unary = _UNARY if omega else _UNARY[:2]
    if max_depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.2:
            return Infinity()
        return Int(rng.randint(-3, 3))
    r = rng.random()
    if r < 0.65:
        cls = rng.choice(_BINARY)
        return cls(random_tangle(rng, max_depth - 1, omega), random_tangle(rng, max_depth - 1, omega))
    return rng.choice(unary)(random_tangle(rng, max_depth - 1, omega))
