import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import random_knot
from knotbracket.alexander import (
    alexander,
    alexander_minor,
    crossing_arc_matrix,
    det_bareiss,
    det_cofactor,
    normalize_alexander,
)
from knotbracket.diagram import Diagram, DiagramError, mirror, parse_pd
from knotbracket.fixtures import load
from knotbracket.laurent import ONE, ZERO, LaurentPoly, parse_laurent

seeds = st.integers(0, 2**32 - 1)


def t(text):
    return parse_laurent(text, "t")


REFERENCE_MATRIX = [
    ["1-t", "0", "-1", "t", "0"],
    ["t", "1-t", "0", "0", "-1"],
    ["0", "0", "1-t", "-1", "t"],
    ["-1", "t", "0", "1-t", "0"],
    ["0", "-1", "t", "0", "1-t"],
]


def _matches_up_to_permutation(m, reference):
    n = len(m)
    hits = []
    for rows in itertools.permutations(range(n)):
        for cols in itertools.permutations(range(n)):
            if all(m[rows[i]][cols[j]] == reference[i][j] for i in range(n) for j in range(n)):
                hits.append((rows, cols))
    return hits


def test_five_two_matrix_matches_reference():
    m = crossing_arc_matrix(load("five_two"))
    reference = [[t(x) for x in row] for row in REFERENCE_MATRIX]
    hits = _matches_up_to_permutation(m, reference)
    assert hits == [((0, 1, 2, 3, 4), (4, 0, 1, 2, 3))]


def test_five_two_polynomial():
    p = alexander(load("five_two"))
    assert p == t("2 - 3t + 2t^2")
    assert p.to_str("t") == "2 - 3t + 2t^2"


def test_trefoil():
    assert alexander(load("trefoil")) == t("1 - t + t^2")


def test_unknots():
    assert alexander(Diagram((), (), 1)) == ONE
    curl = parse_pd("X[1,1,2,2]\ncomponents: (1 2)")
    assert crossing_arc_matrix(curl) == [[ZERO]]
    assert alexander(curl) == ONE


def test_links_rejected():
    with pytest.raises(DiagramError, match="knots only"):
        alexander(load("hopf"))
    with pytest.raises(DiagramError, match="knots only"):
        crossing_arc_matrix(load("whitehead"))


def test_rows_carry_at_most_three_entries():
    for name in ("trefoil", "five_two"):
        for row in crossing_arc_matrix(load(name)):
            assert sum(1 for x in row if not x.is_zero()) <= 3


def test_normalization_sign():
    assert normalize_alexander(t("-t^-2 + 3t^-1 - t^0")) == t("1 - 3t + t^2")
    assert normalize_alexander(ZERO) == ZERO


@pytest.mark.parametrize("name", ["trefoil", "five_two"])
def test_every_minor_agrees_on_fixtures(name):
    d = load(name)
    n = d.n_crossings
    ref = alexander(d)
    assert all(alexander_minor(d, i, j) == ref for i in range(n) for j in range(n))


@given(seeds)
def test_every_minor_agrees(seed):
    d = random_knot(seed, max_crossings=7)
    n = d.n_crossings
    ref = alexander(d)
    assert all(alexander_minor(d, i, j) == ref for i in range(n) for j in range(n))


@given(seeds)
def test_mirror_invariance(seed):
    d = random_knot(seed)
    assert alexander(mirror(d)) == alexander(d)


@given(seeds)
def test_alexander_at_one_is_unit(seed):
    # Delta(1) = ±1 for every knot
    assert abs(alexander(random_knot(seed)).evaluate(1)) == 1


@given(seeds)
def test_bareiss_matches_cofactor(seed):
    d = random_knot(seed)
    m = crossing_arc_matrix(d)
    minor = [r[:-1] for r in m[:-1]]
    assert det_bareiss(minor) == det_cofactor(minor)


@pytest.mark.parametrize("name", ["trefoil", "five_two"])
def test_bareiss_matches_cofactor_on_fixtures(name):
    m = crossing_arc_matrix(load(name))
    assert det_bareiss(m) == det_cofactor(m) == ZERO
    minor = [r[1:] for r in m[1:]]
    assert det_bareiss(minor) == det_cofactor(minor)


def test_bareiss_needs_pivoting():
    m = [[ZERO, ONE], [ONE, ZERO]]
    assert det_bareiss(m) == LaurentPoly({0: -1}) == det_cofactor(m)
