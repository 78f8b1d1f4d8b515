import random
from math import factorial

import pytest

from algebra.diagrams import (
    Diagram, ElementaryDiagram, canonical_decomposition, compose_elementary, concat, dim_c, dim_hom_T,
    elementary, enumerate_diagrams, format_diagram, functoriality_sign, gamma_compose, gamma_eval,
    graded_dim_A, identity_diagram, parse_diagram,
)
from algebra.errors import ShapeMismatch
from algebra.parity_ring import THETA, ZERO, GradedInt


def test_small_enumerations():
    assert len(enumerate_diagrams(1, 1, 0)) == 4
    assert len(enumerate_diagrams(1, 1, 1)) == 2
    assert len(enumerate_diagrams(2, 1, 1)) == 8
    assert enumerate_diagrams(1, 1, 2) == []


def test_dimension_formula():
    for p in range(5):
        for q in range(5):
            for r in range(min(p, q) + 1):
                expected = (1 << (p + q - r)) * factorial(p) * factorial(q) // factorial(r)
                assert dim_c(p, q, r).eval_plus() == expected
                if p + q <= 5:
                    assert len(enumerate_diagrams(p, q, r)) == expected


@pytest.mark.slow
def test_diagram_counts_up_to_four_strands_each():
    for p in range(5):
        for q in range(5):
            for r in range(min(p, q) + 1):
                assert len(enumerate_diagrams(p, q, r)) == dim_c(p, q, r).eval_plus(), (p, q, r)


def test_dimension_recursion():
    for p in range(1, 5):
        for q in range(5):
            for r in range(min(p, q) + 1):
                assert dim_c(p, q, r) == dim_c(p - 1, q, r - 1) + (p - r) * THETA * dim_c(p - 1, q, r), (p, q, r)


def test_endomorphism_counts():
    for p in range(4):
        for q in range(4 - p):
            assert len(enumerate_diagrams(p, q, 0)) == (1 << (p + q)) * factorial(p) * factorial(q)


@pytest.mark.slow
def test_endomorphism_counts_up_to_six_strands():
    for p in range(7):
        for q in range(7 - p):
            assert len(enumerate_diagrams(p, q, 0)) == (1 << (p + q)) * factorial(p) * factorial(q), (p, q)


def test_dim_c_values():
    assert dim_c(1, 1, 0) == GradedInt(2, 2)
    assert dim_c(2, 2, 2) == GradedInt(4, 4)
    assert dim_c(3, 1, 2) == ZERO


def test_dim_hom_T():
    assert dim_hom_T(2, 2, 1, 1) == dim_c(2, 2, 1)
    assert dim_hom_T(2, 1, 1, 1) == ZERO
    assert dim_hom_T(1, 1, 2, 2) == ZERO


def test_graded_dim_A():
    assert graded_dim_A(1, 0) == 1 + 2 * THETA
    assert graded_dim_A(2, 1) == THETA


def test_diagram_validation():
    with pytest.raises(ShapeMismatch):
        Diagram(1, 1, 0, (), ((2, 0), (1, 0)))   # strands change colour
    with pytest.raises(ShapeMismatch):
        Diagram(1, 1, 1, ((1, 2, 0),), ((1, 0),))
    with pytest.raises(ShapeMismatch):
        ElementaryDiagram("S", 1, 1, 1)          # would swap a white and a black node


def test_concat_laws():
    marked = elementary("O", 1, 0, 1)
    assert concat(marked, marked) == identity_diagram(1, 0)
    for p in range(3):
        for q in range(3):
            for r in range(min(p, q) + 1):
                for d in enumerate_diagrams(p, q, r):
                    assert concat(identity_diagram(p, q), d) == d
                    assert concat(d, identity_diagram(p - r, q - r)) == d


def test_marks_cancel_along_a_three_diagram_stack():
    # two marked strands close into an unmarked cap below the top diagram
    top = Diagram(2, 2, 0, (), ((1, 0), (2, 1), (3, 1), (4, 0)))
    middle = Diagram(2, 2, 1, ((2, 3, 0),), ((1, 0), (4, 1)))
    bottom = identity_diagram(1, 1)
    stacked = concat(concat(top, middle), bottom)
    assert stacked == Diagram(2, 2, 1, ((2, 3, 0),), ((1, 0), (4, 1)))
    assert stacked == concat(top, concat(middle, bottom))

    single = Diagram(2, 2, 0, (), ((1, 0), (2, 1), (3, 0), (4, 0)))
    assert concat(single, middle).pairs == ((2, 3, 1),)


def test_concat_checks_shapes():
    with pytest.raises(ShapeMismatch):
        concat(identity_diagram(1, 1), identity_diagram(2, 1))


def test_canonical_decomposition():
    assert canonical_decomposition(identity_diagram(1, 1)) == []
    assert canonical_decomposition(elementary("O", 1, 0, 1)) == [ElementaryDiagram("O", 1, 0, 1)]
    for p in range(3):
        for q in range(3):
            for r in range(min(p, q) + 1):
                for d in enumerate_diagrams(p, q, r):
                    factors = canonical_decomposition(d)
                    assert compose_elementary(factors, p, q) == d
                    kinds = "".join(f.kind for f in factors)
                    assert kinds == "".join(sorted(kinds, key="TOS".index))


def test_text_syntax():
    for d in enumerate_diagrams(2, 1, 1) + enumerate_diagrams(1, 2, 0):
        assert parse_diagram(format_diagram(d)) == d
    assert format_diagram(identity_diagram(0, 0)) == "0 0 0 | pairs: - | through: -"
    with pytest.raises(ShapeMismatch):
        parse_diagram("1 1")


def test_gamma_on_elementary_diagrams():
    n = 2
    e1, f1 = 0, 0
    ebar1, ebar2 = n, n + 1
    assert gamma_eval(elementary("T", 1, 1), n)[(e1, f1)] == (1, ())
    assert (0, 1) not in gamma_eval(elementary("T", 1, 1), n)
    assert gamma_eval(elementary("O", 1, 0, 1), n)[(e1,)] == (1, (ebar1,))
    assert gamma_eval(elementary("S", 2, 0, 1), n)[(ebar1, ebar2)] == (-1, (ebar2, ebar1))
    assert gamma_eval(elementary("S", 2, 0, 1), n)[(0, 1)] == (1, (1, 0))


def test_gamma_of_identity():
    matrix = gamma_eval(identity_diagram(1, 1), 2)
    assert all(image == (1, u) for u, image in matrix.items())
    assert len(matrix) == 16


@pytest.mark.slow
def test_functoriality_on_random_pairs():
    rng = random.Random(7)
    for _ in range(200):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        r1 = rng.randint(0, min(p, q))
        r2 = rng.randint(0, min(p, q) - r1)
        d1 = rng.choice(enumerate_diagrams(p, q, r1))
        d2 = rng.choice(enumerate_diagrams(p - r1, q - r1, r2))
        assert functoriality_sign(d1, d2, max(p + q, 1)) in (1, -1), (format_diagram(d1), format_diagram(d2))


def test_gamma_compose_order():
    swap = elementary("S", 2, 0, 1)
    mark = elementary("O", 2, 0, 1)
    # mark first, then swap: e1 (x) e2 -> ebar1 (x) e2 -> e2 (x) ebar1
    composite = gamma_compose(mark, swap, 2)
    assert composite[(0, 1)] == (1, (1, 2))
