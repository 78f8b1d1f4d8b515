import pytest

from algebra import lr
from db.structure_cache import reset_structure_cache


@pytest.fixture(autouse=True)
def isolated_engine(monkeypatch):
    """No persistent cache and lenient calibration unless a test asks otherwise."""
    monkeypatch.delenv("QTREP_CACHE", raising=False)
    reset_structure_cache()
    lr.set_strict_calibration(False)
    yield
    reset_structure_cache()
    lr.set_strict_calibration(False)
