import json
import logging

import pytest

from algebra import lr
from algebra.errors import ExponentUncalibrated
from algebra.parity_ring import THETA, ZERO, theta_pow
from algebra.partitions import BOX, EMPTY, StrictPartition, enumerate_strict
from algebra.symfunc import p_structure_constants

P = StrictPartition.of


def labels(bound):
    return [lam for n in range(bound + 1) for lam in enumerate_strict(n)]


def test_f_coeff_examples():
    assert lr.f_coeff(BOX, P(2), P(2, 1)) == THETA
    assert lr.f_coeff(BOX, P(2), P(3)) == theta_pow(2)
    assert lr.f_coeff(BOX, BOX, P(3)) == ZERO
    assert lr.f_coeff(BOX, BOX, P(2)).eval_plus() == 4


def test_unit():
    for lam in labels(3):
        assert lr.f_coeff(EMPTY, lam, lam) == theta_pow(lam.parity)
        assert lr.f_coeff(lam, EMPTY, lam) == theta_pow(lam.parity)


def test_pieri_closed_form():
    assert lr.pieri_f(P(2), P(2, 1)) == THETA
    assert lr.pieri_f(P(2), P(3)) == theta_pow(2)
    assert lr.pieri_f(BOX, P(3)) == ZERO


def test_pieri_agreement():
    for nu in labels(4):
        for mu in enumerate_strict(nu.size + 1):
            assert lr.f_coeff(BOX, nu, mu) == lr.pieri_f(nu, mu), (nu, mu)


def test_size_support():
    for lam in labels(3):
        for nu in labels(3 - lam.size):
            for size in range(7):
                if size == lam.size + nu.size:
                    continue
                for mu in enumerate_strict(size):
                    assert lr.f_coeff(lam, nu, mu) == ZERO


def test_totals_are_p_constants_times_powers_of_two():
    for lam in labels(2):
        for nu in labels(2):
            g = p_structure_constants(lam, nu)
            for mu, b in lr.structure_constants(lam, nu).items():
                e = lr.theta_exponent(lam, nu, mu)
                assert lr.f_coeff(lam, nu, mu).eval_plus() == g[mu] << e


def test_exponent_table_shape():
    table = lr.load_exponent_table()
    for (pl, pn, pm, k), entry in table.items():
        assert (k + pl + pn + pm) % 2 == 0
        assert entry.exponent == (k + pl + pn + pm) // 2
    calibrated = {key for key, e in table.items() if e.calibrated}
    assert (1, 1, 1, 1) in calibrated
    assert (0, 0, 1, 1) not in calibrated


def test_extrapolated_class_warns(caplog):
    # (2,1) x (1) -> (4) falls in class (0, 1, 1, 2), which has no oracle witness
    with caplog.at_level(logging.WARNING, logger="algebra.lr"):
        assert lr.theta_exponent(P(2, 1), BOX, P(4)) == 2
    assert "extrapolated" in caplog.text


def test_strict_calibration_refuses_extrapolation():
    lr.set_strict_calibration(True)
    with pytest.raises(ExponentUncalibrated):
        lr.theta_exponent(P(2, 1), BOX, P(4))
    # calibrated classes still resolve
    assert lr.theta_exponent(BOX, BOX, P(2)) == 2


def test_missing_table_is_an_error(tmp_path):
    path = tmp_path / "table.json"
    path.write_text("{not json")
    with pytest.raises(ExponentUncalibrated):
        lr.load_exponent_table(path)


def test_calibration_digest_follows_the_table(tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    first.write_text('{"classes": []}')
    second.write_text('{"classes": [], "note": "recalibrated"}')
    assert len(lr.calibration_digest(first)) == 16
    assert lr.calibration_digest(first) != lr.calibration_digest(second)
    assert len(lr.calibration_digest()) == 16
    with pytest.raises(ExponentUncalibrated):
        lr.calibration_digest(tmp_path / "missing.json")


def test_lr_row():
    rows = lr.lr_row(BOX, P(2))
    assert [mu for mu, _, _ in rows] == [P(3), P(2, 1)]
    assert dict((mu, f) for mu, _, f in rows) == {P(3): theta_pow(2), P(2, 1): THETA}
    assert lr.lr_row(BOX, P(2), P(3)) == [(P(3), 2, theta_pow(2))]


def test_calibration_table_witnesses_are_consistent():
    with open(lr.CALIBRATION_PATH) as f:
        data = json.load(f)
    for entry in data["classes"]:
        for lam, nu, mu, b, total in entry["witnesses"]:
            assert total == (b >> entry["defect"]) << entry["exponent"]


@pytest.mark.slow
def test_calibration_against_oracle():
    result = lr.calibrate(max_total=2, rank=3)
    assert result.passed, result.anomalies
    table = lr.load_exponent_table()
    for key, exponent in result.exponents.items():
        assert table[key].exponent == exponent
