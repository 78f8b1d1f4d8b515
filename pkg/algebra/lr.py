"""
Type-Q Littlewood-Richardson coefficients with values in the parity ring.

f^mu_{lam,nu} = dim Hom(V(mu), V(lam) x V(nu)) is related to the Schur P
structure constant g^mu_{lam,nu} = b^mu_{lam,nu} / 2^k (k = len(lam) + len(nu) - len(mu))
by f = theta^E * g. The exponent E is tabulated per parity class and length
defect in lr_calibration.json; `calibrate` regenerates the table from the
finite-rank oracle.
"""

import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import settings
from algebra.errors import ExponentUncalibrated
from algebra.parity_ring import ZERO, GradedInt, theta_pow
from algebra.partitions import StrictPartition, enumerate_strict, format_partition, remove_box
from algebra.symfunc import q_structure_constants
from db.structure_cache import get_structure_cache
from oracle.isotypic import singular_mult

logger = logging.getLogger(__name__)

CALIBRATION_PATH = Path(__file__).with_name("lr_calibration.json")

ClassKey = Tuple[int, int, int, int]

_strict_calibration = settings.STRICT_CALIBRATION


@dataclass(frozen=True, order=True)
class LRKey:
    lam: StrictPartition
    nu: StrictPartition
    mu: StrictPartition

    def text(self) -> str:
        return ";".join(format_partition(x) for x in (self.lam, self.nu, self.mu))


@dataclass(frozen=True)
class ExponentClass:
    parities: Tuple[int, int, int]
    defect: int
    exponent: int
    calibrated: bool
    witnesses: Tuple[Tuple[str, str, str, int, int], ...] = ()


def set_strict_calibration(flag: bool):
    global _strict_calibration
    _strict_calibration = flag


def class_key(lam: StrictPartition, nu: StrictPartition, mu: StrictPartition) -> ClassKey:
    return (lam.parity, nu.parity, mu.parity, lam.length + nu.length - mu.length)


@lru_cache(maxsize=None)
def load_exponent_table(path: Path = CALIBRATION_PATH) -> Dict[ClassKey, ExponentClass]:
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ExponentUncalibrated(f"Failed to load calibration table '{path}': {e}")
    table = {}
    for entry in data["classes"]:
        parities = tuple(entry["parities"])
        key = parities + (entry["defect"],)
        table[key] = ExponentClass(
            parities=parities,
            defect=entry["defect"],
            exponent=entry["exponent"],
            calibrated=entry["status"] == "calibrated",
            witnesses=tuple(tuple(w) for w in entry.get("witnesses", [])),
        )
    return table


@lru_cache(maxsize=None)
def calibration_digest(path: Path = CALIBRATION_PATH) -> str:
    """Short content hash of the calibration table; persisted f records are keyed by it."""
    try:
        return hashlib.blake2b(path.read_bytes(), digest_size=8).hexdigest()
    except OSError as e:
        raise ExponentUncalibrated(f"Failed to read calibration table '{path}': {e}")


def theta_exponent(lam: StrictPartition, nu: StrictPartition, mu: StrictPartition) -> int:
    key = class_key(lam, nu, mu)
    entry = load_exponent_table().get(key)
    if entry is None:
        raise ExponentUncalibrated(f"no theta-exponent recorded for class (p(lam), p(nu), p(mu), defect) = {key}")
    if not entry.calibrated:
        if _strict_calibration:
            raise ExponentUncalibrated(f"theta-exponent for class {key} is extrapolated, not calibrated")
        logger.warning(f"Using extrapolated theta-exponent {entry.exponent} for class {key}")
    return entry.exponent


_b_memo: Dict[Tuple[StrictPartition, StrictPartition], Dict[StrictPartition, int]] = {}
_f_memo: Dict[LRKey, GradedInt] = {}


def structure_constants(lam: StrictPartition, nu: StrictPartition) -> Dict[StrictPartition, int]:
    """b^mu_{lam,nu}, read from the persistent cache when one is configured."""
    memo = _b_memo.get((lam, nu))
    if memo is not None:
        return memo

    cache = get_structure_cache()
    pair = f"{format_partition(lam)};{format_partition(nu)}"
    if cache is not None and cache.get("bdone", pair) is not None:
        out = {}
        for mu in enumerate_strict(lam.size + nu.size):
            value = cache.get("b", f"{pair};{format_partition(mu)}")
            if value is not None and value.a:
                out[mu] = value.a
    else:
        out = q_structure_constants(lam, nu)
        if cache is not None:
            for mu, b in sorted(out.items()):
                cache.put("b", f"{pair};{format_partition(mu)}", GradedInt(b, 0))
            cache.put("bdone", pair, GradedInt(len(out), 0))

    _b_memo[(lam, nu)] = out
    return out


def f_coeff(lam: StrictPartition, nu: StrictPartition, mu: StrictPartition) -> GradedInt:
    """
    f^mu_{lam,nu} as an element of Z[eps]/(eps^2-1).

    Raises:
        ExponentUncalibrated: if the parity class of (lam, nu, mu) has no recorded exponent
    """
    if lam.size + nu.size != mu.size:
        return ZERO
    key = LRKey(lam, nu, mu)
    remembered = _f_memo.get(key)
    cache = get_structure_cache()
    record = f"{calibration_digest()}:{key.text()}"
    if remembered is None and cache is not None:
        remembered = cache.get("f", record)
    if remembered is not None:
        # strict calibration applies to remembered values too
        if remembered:
            theta_exponent(lam, nu, mu)
        _f_memo[key] = remembered
        return remembered

    b = structure_constants(lam, nu).get(mu, 0)
    if b == 0:
        value = ZERO
    else:
        defect = lam.length + nu.length - mu.length
        value = theta_pow(theta_exponent(lam, nu, mu)) * (b >> defect)

    if cache is not None:
        cache.put("f", record, value)
    _f_memo[key] = value
    return value


def pieri_f(nu: StrictPartition, mu: StrictPartition) -> GradedInt:
    """Closed form f^mu_{box,nu}: theta^(p(nu)p(mu)) * theta if nu is mu minus a box, else 0."""
    if nu not in remove_box(mu):
        return ZERO
    return theta_pow(nu.parity * mu.parity + 1)


def lr_row(lam: StrictPartition, nu: StrictPartition, mu: Optional[StrictPartition] = None) -> List[Tuple[StrictPartition, int, GradedInt]]:
    """(mu, b, f) for every strict mu of size |lam| + |nu| (or the single requested mu)."""
    targets = [mu] if mu is not None else enumerate_strict(lam.size + nu.size)
    constants = structure_constants(lam, nu)
    return [(m, constants.get(m, 0), f_coeff(lam, nu, m)) for m in targets]


def clear_memo():
    _b_memo.clear()
    _f_memo.clear()


@dataclass
class CalibrationRow:
    key: LRKey
    b: int
    defect: int
    oracle_total: int

    @property
    def p_constant(self) -> int:
        return self.b >> self.defect


@dataclass
class CalibrationResult:
    max_total: int
    rank: int
    rows: List[CalibrationRow] = field(default_factory=list)
    exponents: Dict[ClassKey, int] = field(default_factory=dict)
    anomalies: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.anomalies


def calibrate(max_total: int = 4, rank: int = 6, num_threads: int = 1) -> CalibrationResult:
    """
    Derive theta-exponents from singular-vector counts at finite rank.

    For each class the ratio oracle_total / g must be one power of two; anything
    else is reported as an anomaly.
    """
    labels = [lam for n in range(max_total + 1) for lam in enumerate_strict(n)]
    keys = [
        LRKey(lam, nu, mu)
        for lam in labels for nu in labels if lam.size + nu.size <= max_total
        for mu in enumerate_strict(lam.size + nu.size)
    ]
    logger.info(f"Calibrating theta-exponents over {len(keys)} triples at rank {rank}")

    def run(key: LRKey) -> CalibrationRow:
        b = structure_constants(key.lam, key.nu).get(key.mu, 0)
        defect = key.lam.length + key.nu.length - key.mu.length
        return CalibrationRow(key, b, defect, singular_mult(key.lam, key.nu, key.mu, rank))

    with ThreadPoolExecutor(max_workers=num_threads) as pool:
        rows = list(pool.map(run, keys))

    result = CalibrationResult(max_total=max_total, rank=rank, rows=rows)
    for row in rows:
        if row.b == 0:
            if row.oracle_total != 0:
                result.anomalies.append(f"{row.key.text()}: b = 0 but oracle total {row.oracle_total}")
            continue
        g = row.p_constant
        ratio, rem = divmod(row.oracle_total, g)
        if rem or ratio <= 0 or ratio & (ratio - 1):
            result.anomalies.append(f"{row.key.text()}: oracle total {row.oracle_total} is not 2^e * {g}")
            continue
        exponent = ratio.bit_length() - 1
        ck = class_key(row.key.lam, row.key.nu, row.key.mu)
        seen = result.exponents.setdefault(ck, exponent)
        if seen != exponent:
            result.anomalies.append(f"class {ck}: exponents {seen} and {exponent} disagree")
    return result


def write_calibration(result: CalibrationResult, path: Path = CALIBRATION_PATH):
    """Rewrite the exponent table: observed classes become calibrated, the rest keep the closed-form rule."""
    if not result.passed:
        raise ExponentUncalibrated("refusing to write a calibration with anomalies: " + "; ".join(result.anomalies))
    witnesses: Dict[ClassKey, list] = {}
    for row in result.rows:
        if row.b:
            ck = class_key(row.key.lam, row.key.nu, row.key.mu)
            witnesses.setdefault(ck, []).append([
                format_partition(row.key.lam), format_partition(row.key.nu), format_partition(row.key.mu),
                row.b, row.oracle_total,
            ])

    classes = []
    for parities in sorted({k[:3] for k in load_exponent_table(path)} | {k[:3] for k in result.exponents}):
        s = sum(parities)
        for defect in range(s % 2, 5, 2):
            ck = parities + (defect,)
            if ck in result.exponents:
                exponent, status = result.exponents[ck], "calibrated"
            else:
                exponent, status = (defect + s) // 2, "extrapolated"
            classes.append({
                "parities": list(parities), "defect": defect, "exponent": exponent,
                "status": status, "witnesses": witnesses.get(ck, []),
            })

    data = {
        "format": 1,
        "rule": "exponent = (defect + p(lam) + p(nu) + p(mu)) / 2, defect = len(lam) + len(nu) - len(mu)",
        "source": f"singular-vector totals at rank {result.rank} over all |lam| + |nu| <= {result.max_total}; "
                  "regenerate with `python main.py calibrate --write`",
        "classes": classes,
    }
    with open(path, "w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    load_exponent_table.cache_clear()
    calibration_digest.cache_clear()
    clear_memo()
    logger.info(f"Wrote {len(classes)} exponent classes to {path}")

