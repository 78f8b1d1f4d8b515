import pytest

from algebra.errors import BasisSolveFailure
from algebra.partitions import BOX, EMPTY, StrictPartition, enumerate_strict
from algebra.symfunc import (
    SymPoly, expand_in_q_basis, one_row_q, p_structure_constants, q_structure_constants, schur_p, schur_q,
    tableau_p, tableau_q, two_row_q,
)

P = StrictPartition.of


def test_small_schur_q():
    assert schur_q(BOX, 2).terms == {(1, 0): 2, (0, 1): 2}
    assert schur_q(P(2), 1).terms == {(2,): 2}
    assert schur_q(EMPTY, 3).terms == {(0, 0, 0): 1}


def test_small_schur_p():
    assert schur_p(BOX, 2).terms == {(1, 0): 1, (0, 1): 1}
    assert schur_p(EMPTY, 1).terms == {(0,): 1}


def test_one_row_q():
    # q_2 in two variables: 2x^2 + 2y^2 + 4xy
    assert one_row_q(2, 2).terms == {(2, 0): 2, (0, 2): 2, (1, 1): 4}
    assert one_row_q(0, 3) == SymPoly.constant(3, 1)
    assert one_row_q(-1, 3).is_zero()


def test_two_row_q_matches_pfaffian():
    for a, b in [(2, 1), (3, 1), (3, 2)]:
        assert two_row_q(a, b, 3) == schur_q(P(a, b), 3)


def test_schur_q_is_symmetric():
    for n in range(1, 5):
        for lam in enumerate_strict(n):
            assert schur_q(lam, 3).is_symmetric()


def test_schur_q_vanishes_with_too_few_variables():
    assert schur_q(P(2, 1), 1).is_zero()


def test_tableau_sums_match_pfaffian():
    for n in range(4):
        for lam in enumerate_strict(n):
            num_vars = max(n, 1)
            assert tableau_q(lam, num_vars) == schur_q(lam, num_vars)
            assert tableau_p(lam, num_vars) == schur_p(lam, num_vars)


@pytest.mark.slow
def test_tableau_sums_match_pfaffian_in_up_to_four_variables():
    for n in range(6):
        for lam in enumerate_strict(n):
            for num_vars in range(1, 5):
                assert tableau_q(lam, num_vars) == schur_q(lam, num_vars), (lam, num_vars)


def test_structure_constants():
    assert q_structure_constants(BOX, BOX) == {P(2): 2}
    assert q_structure_constants(EMPTY, P(3, 1)) == {P(3, 1): 1}
    assert set(q_structure_constants(BOX, P(2))) == {P(3), P(2, 1)}
    assert p_structure_constants(BOX, BOX) == {P(2): 1}


@pytest.mark.slow
def test_structure_constants_are_commutative():
    labels = [lam for n in range(7) for lam in enumerate_strict(n)]
    for lam in labels:
        for nu in labels:
            if lam.size + nu.size > 6:
                continue
            assert q_structure_constants(lam, nu) == q_structure_constants(nu, lam)


def _product_coefficients(pairs):
    out = {}
    for (lam, nu), weight in pairs:
        for rho, b in q_structure_constants(lam, nu).items():
            out[rho] = out.get(rho, 0) + weight * b
    return {rho: c for rho, c in out.items() if c}


@pytest.mark.slow
def test_structure_constants_are_associative():
    labels = [lam for n in range(1, 7) for lam in enumerate_strict(n)]
    for lam in labels:
        for nu in labels:
            for kappa in labels:
                if lam.size + nu.size + kappa.size > 6:
                    continue
                left = _product_coefficients(((mu, kappa), b) for mu, b in q_structure_constants(lam, nu).items())
                right = _product_coefficients(((lam, sigma), b) for sigma, b in q_structure_constants(nu, kappa).items())
                assert left == right, (lam, nu, kappa)


def test_expansion_recovers_basis_elements():
    assert expand_in_q_basis(schur_q(P(3, 1), 4)) == {P(3, 1): 1}
    assert expand_in_q_basis(schur_q(P(2), 2) * 3) == {P(2): 3}


def test_expansion_rejects_non_q_combinations():
    # x1 + x2 is P_(1), not an integer combination of Q's
    with pytest.raises(BasisSolveFailure):
        expand_in_q_basis(schur_p(BOX, 2))
