import pytest

from algebra import lr
from algebra.errors import CliffordCountError, QtrepError, RankTooSmall
from algebra.partitions import BOX, EMPTY, StrictPartition, enumerate_strict
from oracle.finite_rank import FiniteRankAlgebra, Operator, TensorAction, in_span_of_q, supercommutator
from oracle.gamma_rank import gamma_rank, gamma_rank_check
from oracle.isotypic import sergeev_dim_check, singular_mult

P = StrictPartition.of


def test_algebra_dimension_and_closure():
    algebra = FiniteRankAlgebra(3)
    assert algebra.dimension() == 18
    assert algebra.check_closure()


def test_odd_generators_square_to_even_ones():
    x = Operator.odd(1, 1, 2)
    bracket = supercommutator(x, x)
    assert bracket.parity == 0
    assert bracket.to_matrix() == 2 * Operator.even(1, 1, 2).to_matrix()
    assert in_span_of_q(bracket.to_matrix(), 2)


def test_action_on_basis_tensors():
    action = TensorAction(FiniteRankAlgebra(2), 1)
    assert action.apply_to_basis(Operator.even(1, 2, 2), (1,)) == {(0,): 1}
    assert action.apply_to_basis(Operator.odd(1, 2, 2), (1,)) == {(2,): 1}
    assert action.apply_to_basis(Operator.even(1, 2, 2), (0,)) == {}


def test_lift_to_tensor_powers():
    assert TensorAction(FiniteRankAlgebra(2), 3).check_lift()


def test_rank_must_be_positive():
    with pytest.raises(RankTooSmall):
        FiniteRankAlgebra(0)


def test_singular_multiplicities():
    assert singular_mult(BOX, EMPTY, BOX, 3) == 2
    assert singular_mult(BOX, BOX, P(2), 2) == 4
    assert singular_mult(BOX, BOX, P(3), 2) == 0


def test_singular_mult_is_stable_in_the_rank():
    for n in (2, 3):
        assert singular_mult(BOX, BOX, P(2), n) == 4
        assert singular_mult(BOX, BOX, P(1, 1), n) == 0


@pytest.mark.slow
def test_singular_mult_is_stable_across_consecutive_ranks():
    labels = [lam for n in range(4) for lam in enumerate_strict(n)]
    for lam in labels:
        for nu in labels:
            total = lam.size + nu.size
            if total == 0 or total > 3:
                continue
            for mu in enumerate_strict(total):
                assert singular_mult(lam, nu, mu, total) == singular_mult(lam, nu, mu, total + 1), (lam, nu, mu)


def test_singular_mult_needs_stable_range():
    with pytest.raises(RankTooSmall):
        singular_mult(BOX, BOX, P(2), 1)


@pytest.mark.slow
def test_oracle_agrees_with_lr_coefficients():
    labels = [lam for n in range(3) for lam in enumerate_strict(n)]
    for lam in labels:
        for nu in labels:
            if lam.size + nu.size > 2:
                continue
            for mu in enumerate_strict(lam.size + nu.size):
                expected = lr.f_coeff(lam, nu, mu).eval_plus()
                assert singular_mult(lam, nu, mu, 3) == expected, (lam, nu, mu)


@pytest.mark.slow
def test_oracle_agrees_with_lr_coefficients_at_rank_six():
    labels = [lam for n in range(5) for lam in enumerate_strict(n)]
    for lam in labels:
        for nu in labels:
            total = lam.size + nu.size
            if total == 0 or total > 4:
                continue
            for mu in enumerate_strict(total):
                expected = lr.f_coeff(lam, nu, mu).eval_plus()
                assert singular_mult(lam, nu, mu, 6) == expected, (lam, nu, mu)


def test_gamma_basis_is_independent():
    assert gamma_rank_check(1, 0, 0, 1)
    assert gamma_rank_check(0, 1, 0, 1)
    assert gamma_rank_check(1, 1, 0, 2)
    assert gamma_rank_check(1, 1, 1, 2)


@pytest.mark.slow
def test_gamma_basis_is_independent_up_to_two_strands_each():
    for p in range(3):
        for q in range(3):
            for r in range(min(p, q) + 1):
                assert gamma_rank_check(p, q, r, max(p + q, 1)), (p, q, r)
    assert gamma_rank(2, 1, 1, 3) == 8


def test_gamma_rank_needs_enough_room():
    with pytest.raises(RankTooSmall):
        gamma_rank(1, 1, 0, 1)


def test_sergeev_dimensions_at_rank_one():
    report = sergeev_dim_check(1, 1)
    assert report.passed, report.failures
    row = report.rows[0]
    assert (row.copies, row.dim_v, row.dim_s) == (1, 2, 2)


@pytest.mark.slow
def test_sergeev_dimensions():
    report = sergeev_dim_check(2, 3)
    assert report.passed, report.failures
    assert [row.lam for row in report.rows] == [P(2)]


@pytest.mark.slow
def test_sergeev_dimensions_in_degree_three():
    report = sergeev_dim_check(3, 4)
    assert report.passed, report.failures


def test_sergeev_check_needs_rank():
    with pytest.raises(RankTooSmall):
        sergeev_dim_check(3, 2)


def test_clifford_count_error_names_its_statement():
    assert issubclass(CliffordCountError, QtrepError)
    assert "Clifford" in CliffordCountError("dim Sing = 3").statement
