"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
output) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import oracle_bracket, random_diagram  # noqa: E402
from knotbracket.alexander import alexander, crossing_arc_matrix  # noqa: E402
from knotbracket.bracket import JonesPoly, jones, kauffman_bracket, normalized_bracket  # noqa: E402
from knotbracket.diagram import (  # noqa: E402
    add_curl,
    add_disjoint_circle,
    linking_number,
    mirror,
    reverse_component,
    switch_crossing,
    writhe,
)
from knotbracket.fixtures import load  # noqa: E402
from knotbracket.hopf_family import (  # noqa: E402
    HOPF_FORM,
    NOT_VERIFIED,
    compile_H,
    hopf_bracket,
    omega_transform,
    s_family,
    thistlethwaite,
    thistlethwaite_pair,
)
from knotbracket.laurent import DELTA, A, conjugate, monomial, parse_laurent  # noqa: E402
from knotbracket.randexpr import random_tangle  # noqa: E402
from knotbracket.tangle import (  # noqa: E402
    OMEGA,
    OMEGA_INV,
    Int,
    bracket_vector,
    compile_tangle,
    tangle_bracket_statesum,
)

SEED = int(os.environ.get("KNOTBRACKET_SEED", "0"))
CASES = 100
U_LINK = "-t^-1/2 - t^1/2"

# collected here, printed by the terminal-summary hook in conftest.py
RESULTS: list[str] = []


def L(text, var="A"):
    return parse_laurent(text, var)


def jones_from_t_text(text):
    """JonesPoly from an integer-exponent polynomial in t."""
    return JonesPoly(L(text, "t").substitute_power(4))


def report(number, title, checks, elapsed=None, limit=None):
    """Print one line for the criterion and fail the test if any check failed."""
    failed = [name for name, ok in checks if not ok]
    if limit is not None and elapsed is not None and elapsed > limit:
        failed.append(f"took {elapsed:.2f}s > {limit}s")
    timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
    status = "PASS" if not failed else "FAIL"
    line = f"criterion {number:>2}: {status} {title}{timing}"
    if failed:
        line += " -- failed: " + "; ".join(failed)
    RESULTS.append(line)
    assert not failed, line


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_trefoil():
    def work():
        t = load("trefoil")
        return kauffman_bracket(t), normalized_bracket(t), jones(t)

    (b, nb, j), dt = timed(work)
    report(
        1,
        "right trefoil bracket, normalized bracket and Jones",
        [
            ("bracket", b == L("A^-7 - A^-3 - A^5")),
            ("normalized", nb == L("-A^-16 + A^-12 + A^-4")),
            ("jones", j == jones_from_t_text("-t^4 + t^3 + t")),
        ],
        dt,
        1.0,
    )


def test_criterion_2_doubled_hopf():
    d, dt = timed(lambda: compile_H(Int(0), Int(0)))
    b, dt2 = timed(lambda: kauffman_bracket(d))
    report(
        2,
        "state sum of H(0,0) equals the doubled-Hopf value",
        [
            ("8 crossings", d.n_crossings == 8),
            ("bracket", b == -L("A^-14 + A^-6 + 2A^-2 + 2A^2 + A^6 + A^14")),
        ],
        dt + dt2,
        1.0,
    )


def test_criterion_3_basic_vectors():
    report(
        3,
        "br(1) and br(2)",
        [
            ("br(1)", tuple(bracket_vector(Int(1))) == (A, monomial(-1))),
            ("br(2)", tuple(bracket_vector(Int(2))) == (L("A^2"), L("1 - A^-4"))),
        ],
    )


def test_criterion_4_omega_matrix():
    reference = (
        L("-A^-1 + A^3 - A^7"),
        L("A^-3"),
        L("-A^-11 + 2A^-7 - 2A^-3 + 2A - A^5"),
        L("A^-13 - A^-9 + A^-5"),
    )
    m = HOPF_FORM.matrix
    report(
        4,
        "Omega matches the reference matrix and preserves the Hopf form",
        [
            ("entries", (OMEGA.a, OMEGA.b, OMEGA.c, OMEGA.d) == reference),
            ("Omega^t M Omega^-1 = M", OMEGA.transpose() @ m @ OMEGA_INV == m),
        ],
    )


def test_criterion_5_family():
    def work():
        checks = []
        for n in range(9):
            e = s_family(n, verify=n <= 2)
            checks.append((f"bracket n={n}", e.bracket == DELTA))
            shift = {0} if n % 2 == 0 else {6, -6}
            u = L("-A^-2 - A^2")  # unlink value in q = t^(1/4)
            wanted = {JonesPoly(monomial(4 * s) * u) for s in shift}
            checks.append((f"jones n={n}", e.jones in wanted))
            if n <= 3:
                ws = {0} if n % 2 == 0 else {8, -8}
                checks.append((f"writhes n={n}", e.writhes == ws))
            if n <= 2:
                checks.append((f"oracle n={n}", e.oracle_bracket == DELTA))
        return checks

    checks, dt = timed(work)
    report(5, "S(n) bracket is delta and Jones is the unlink value up to t^(+-6)", checks, dt, 60.0)


def test_criterion_6_thistlethwaite():
    def work():
        d = thistlethwaite()
        return d, kauffman_bracket(d)

    (d, b), dt = timed(work)
    form = hopf_bracket(*thistlethwaite_pair())
    report(
        6,
        "Thistlethwaite link: 15 crossings, writhe -3, trivial-looking Jones",
        [
            ("15 crossings", d.n_crossings == 15),
            ("writhe -3", writhe(d) == -3),
            ("bracket = form = -A^-9 delta", b == form == monomial(-9, -1) * DELTA),
            ("jones", str(jones(d)) == U_LINK),
        ],
        dt,
        5.0,
    )


REFERENCE_MATRIX = [
    ["1-t", "0", "-1", "t", "0"],
    ["t", "1-t", "0", "0", "-1"],
    ["0", "0", "1-t", "-1", "t"],
    ["-1", "t", "0", "1-t", "0"],
    ["0", "-1", "t", "0", "1-t"],
]


def test_criterion_7_alexander():
    import itertools

    d = load("five_two")
    m = crossing_arc_matrix(d)
    reference = [[L(x, "t") for x in row] for row in REFERENCE_MATRIX]
    n = len(m)
    match = any(
        all(m[r[i]][c[j]] == reference[i][j] for i in range(n) for j in range(n))
        for r in itertools.permutations(range(n))
        for c in itertools.permutations(range(n))
    )
    report(
        7,
        "Alexander polynomial of the five-crossing fixture",
        [("matrix up to permutation", match), ("polynomial", alexander(d) == L("2t^2 - 3t + 2", "t"))],
    )


def test_criterion_8_linking():
    w, h = load("whitehead"), load("hopf")
    report(
        8,
        "linking numbers of the Whitehead and Hopf fixtures",
        [
            ("whitehead lk 0", linking_number(w, 0, 1) == 0),
            ("hopf lk -1", linking_number(h, 0, 1) == -1),
            ("hopf reversed lk +1", linking_number(reverse_component(h, 1), 0, 1) == 1),
        ],
    )


def test_criterion_9_properties():
    rng = random.Random(SEED)
    bad: dict[str, int] = {}

    def check(name, ok):
        if not ok:
            bad[name] = bad.get(name, 0) + 1

    def work():
        for _ in range(CASES):
            d = random_diagram(rng.getrandbits(32))
            b = kauffman_bracket(d)
            check("mirror", kauffman_bracket(mirror(d)) == conjugate(b))
            e = rng.choice(d.edges)
            sign = rng.choice((1, -1))
            curl = add_curl(d, e, sign, rng.random() < 0.5)
            check("curl", kauffman_bracket(curl) == monomial(3 * sign, -1) * b)
            check("circle", kauffman_bracket(add_disjoint_circle(d)) == DELTA * b)
            i = rng.randrange(d.n_crossings)
            lhs = A * b - monomial(-1) * kauffman_bracket(switch_crossing(d, i))
            check("switching", lhs == (monomial(2) - monomial(-2)) * oracle_bracket(d, {i: True}))
        done = 0
        while done < CASES:
            t = random_tangle(rng, 5)
            td = compile_tangle(t)
            if len(td.crossings) > 20:
                continue
            check("differential", tangle_bracket_statesum(td) == bracket_vector(t))
            done += 1
        for _ in range(CASES):
            t, u = random_tangle(rng, 4), random_tangle(rng, 4)
            check("omega pair", hopf_bracket(*omega_transform(t, u)) == hopf_bracket(t, u))

    _, dt = timed(work)
    report(
        9,
        f"property suites, {CASES} cases each (seed {SEED})",
        [(f"{k} x{v}", False) for k, v in bad.items()] or [("all", True)],
        dt,
    )


def test_criterion_10_stated_limits():
    # the suite only establishes the Jones side; the remaining claims are listed as unverified
    e = s_family(2)
    report(
        10,
        "limitation stated, not reproduced by this suite: " + "; ".join(NOT_VERIFIED),
        [
            ("claims listed", len(NOT_VERIFIED) == 2),
            ("only Jones triviality asserted", e.bracket == DELTA),
        ],
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
