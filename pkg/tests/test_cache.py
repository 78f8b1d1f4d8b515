import pytest

from algebra import lr
from algebra.errors import CacheFormatError, ExponentUncalibrated
from algebra.lr import LRKey
from algebra.parity_ring import GradedInt, theta_pow
from algebra.partitions import BOX, StrictPartition
from db.structure_cache import StructureCache, get_structure_cache, reset_structure_cache


def test_new_cache_writes_header(tmp_path):
    path = tmp_path / "cache" / "structure.tsv"
    cache = StructureCache(str(path))
    assert len(cache) == 0
    assert path.read_text() == "QTREP1 1\n"


def test_records_survive_reopening(tmp_path):
    path = tmp_path / "structure.tsv"
    cache = StructureCache(str(path))
    cache.put("f", "1;1;2", GradedInt(2, 2))
    cache.put("f", "1;1;2", GradedInt(9, 9))

    reopened = StructureCache(str(path))
    assert len(reopened) == 1
    assert reopened.get("f", "1;1;2") == GradedInt(2, 2)
    assert reopened.get("f", "missing") is None


def test_corrupt_record_rebuilds(tmp_path):
    path = tmp_path / "structure.tsv"
    StructureCache(str(path)).put("b", "1;1;2", GradedInt(2, 0))
    with open(path, "a") as f:
        f.write("garbage\n")

    cache = StructureCache(str(path))
    assert len(cache) == 0
    assert path.read_text() == "QTREP1 1\n"


def test_tampered_record_rebuilds(tmp_path):
    path = tmp_path / "structure.tsv"
    StructureCache(str(path)).put("b", "1;1;2", GradedInt(2, 0))
    path.write_text(path.read_text().replace("\t2\t0\t", "\t3\t0\t"))
    assert len(StructureCache(str(path))) == 0


def test_unknown_version_is_refused(tmp_path):
    path = tmp_path / "structure.tsv"
    path.write_text("QTREP1 9\n")
    with pytest.raises(CacheFormatError):
        StructureCache(str(path))


def test_keys_cannot_break_the_line_format(tmp_path):
    cache = StructureCache(str(tmp_path / "structure.tsv"))
    with pytest.raises(ValueError):
        cache.put("f", "a\tb", GradedInt(1, 0))


def test_global_cache_follows_environment(tmp_path, monkeypatch):
    assert get_structure_cache() is None

    reset_structure_cache()
    monkeypatch.setenv("QTREP_CACHE", str(tmp_path / "env.tsv"))
    cache = get_structure_cache()
    assert cache is not None
    assert get_structure_cache() is cache

    explicit = get_structure_cache(str(tmp_path / "explicit.tsv"))
    assert explicit is not cache
    assert get_structure_cache() is explicit


def test_lr_coefficients_are_persisted(tmp_path):
    path = tmp_path / "structure.tsv"
    get_structure_cache(str(path))
    lr.clear_memo()
    mu = StrictPartition.of(2)
    try:
        assert lr.f_coeff(BOX, BOX, mu) == theta_pow(2)
    finally:
        lr.clear_memo()

    reopened = StructureCache(str(path))
    record = f"{lr.calibration_digest()}:{LRKey(BOX, BOX, mu).text()}"
    assert reopened.get("f", record) == theta_pow(2)
    assert reopened.get("f", LRKey(BOX, BOX, mu).text()) is None
    assert reopened.get("b", "1;1;2") == GradedInt(2, 0)


def test_records_from_another_calibration_are_ignored(tmp_path):
    path = tmp_path / "structure.tsv"
    cache = get_structure_cache(str(path))
    mu = StrictPartition.of(2)
    cache.put("f", f"0000000000000000:{LRKey(BOX, BOX, mu).text()}", GradedInt(7, 7))
    lr.clear_memo()
    try:
        assert lr.f_coeff(BOX, BOX, mu) == theta_pow(2)
    finally:
        lr.clear_memo()


def test_warm_cache_still_honours_strict_calibration(tmp_path):
    get_structure_cache(str(tmp_path / "structure.tsv"))
    lam, mu = StrictPartition.of(2, 1), StrictPartition.of(4, 2)
    lr.clear_memo()
    try:
        assert lr.f_coeff(lam, lam, mu)
        lr.set_strict_calibration(True)
        with pytest.raises(ExponentUncalibrated):
            lr.f_coeff(lam, lam, mu)
        lr.clear_memo()
        with pytest.raises(ExponentUncalibrated):
            lr.f_coeff(lam, lam, mu)
    finally:
        lr.set_strict_calibration(False)
        lr.clear_memo()
