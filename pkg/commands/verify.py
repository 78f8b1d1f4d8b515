"""
The `verify` command: suites of consistency checks, printed as status lines.

Each check returns (passed, detail). An engine error inside a check counts as a
failure and reports the statement it contradicts.
"""

import logging
import random
from math import factorial
from typing import Callable, Dict, List, Tuple

import click

from algebra import diagrams, lr, trep
from algebra.errors import QtrepError
from algebra.parity_ring import EPS, ONE, THETA, GradedInt, theta_div_total, theta_pow
from algebra.partitions import (
    BOX, EMPTY, Bipartition, StrictPartition, count_standard_shifted, dominance_leq, enumerate_bipartitions,
    enumerate_strict, parse_bipartition,
)
from algebra.symfunc import q_structure_constants, schur_q, tableau_q
from models.reports import CheckLine, VerifyReport, VerifyRun
from oracle.finite_rank import FiniteRankAlgebra, TensorAction
from oracle.gamma_rank import gamma_rank_check
from oracle.isotypic import sergeev_dim_check, singular_mult

logger = logging.getLogger(__name__)

Check = Callable[[], Tuple[bool, str]]

STRICT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]


def _labels(bound: int) -> List[StrictPartition]:
    return [lam for n in range(bound + 1) for lam in enumerate_strict(n)]


def check_theta_powers() -> Tuple[bool, str]:
    x = ONE
    for k in range(8):
        if theta_pow(k) != x:
            return False, f"theta^{k} = {theta_pow(k)}, repeated product gives {x}"
        x = x * THETA
    return EPS * EPS == ONE, "eps^2 = 1"


def check_theta_division() -> Tuple[bool, str]:
    for a in range(-3, 4):
        for b in range(-3, 4):
            x = GradedInt(a, b)
            for k in range(1, 5):
                if theta_div_total(theta_pow(k) * x, k) != x.eval_plus():
                    return False, f"theta^{k} * ({x}) / theta^{k} lost its total"
    return True, "theta_div_total(theta^k x, k) = eval_plus(x)"


def check_strict_counts() -> Tuple[bool, str]:
    counts = [len(enumerate_strict(n)) for n in range(len(STRICT_COUNTS))]
    return counts == STRICT_COUNTS, f"counts {counts}"


def check_dominance() -> Tuple[bool, str]:
    for n in range(7):
        parts = enumerate_strict(n)
        for lam in parts:
            if not dominance_leq(lam, lam) or not dominance_leq(lam, parts[0]):
                return False, f"dominance fails at {lam}"
    return True, "reflexive, (n) on top, n <= 6"


def check_shifted_tableaux() -> Tuple[bool, str]:
    staircase = count_standard_shifted(StrictPartition.of(3, 2, 1))
    return staircase == 2, f"g_(3,2,1) = {staircase}"


def check_tableau_generating_sums() -> Tuple[bool, str]:
    for lam in _labels(4):
        n = max(lam.size, 1)
        if tableau_q(lam, n) != schur_q(lam, n):
            return False, f"tableau sum differs from the Pfaffian for Q_{lam}"
    return True, "Q_lam from tableaux = Pfaffian, |lam| <= 4"


def check_first_product() -> Tuple[bool, str]:
    b = q_structure_constants(BOX, BOX)
    return b == {StrictPartition.of(2): 2}, f"Q_1 Q_1 = {b}"


def check_pieri() -> Tuple[bool, str]:
    for nu in _labels(3):
        for mu in enumerate_strict(nu.size + 1):
            if lr.f_coeff(BOX, nu, mu) != lr.pieri_f(nu, mu):
                return False, f"f^{mu}_(1),{nu} = {lr.f_coeff(BOX, nu, mu)}, Pieri gives {lr.pieri_f(nu, mu)}"
    return True, "f^mu_(1),nu matches the Pieri rule, |nu| <= 3"


def check_lr_support() -> Tuple[bool, str]:
    for lam in _labels(2):
        for nu in _labels(2):
            for size in range(5):
                if size == lam.size + nu.size:
                    continue
                for mu in enumerate_strict(size):
                    if lr.f_coeff(lam, nu, mu):
                        return False, f"f^{mu}_{lam},{nu} is nonzero off |lam| + |nu| = |mu|"
    return True, "f vanishes off the size constraint"


def check_diagram_counts() -> Tuple[bool, str]:
    for p in range(4):
        for q in range(4):
            for r in range(min(p, q) + 1):
                count = len(diagrams.enumerate_diagrams(p, q, r))
                if count != diagrams.dim_c(p, q, r).eval_plus():
                    return False, f"|D({p},{q},{r})| = {count}"
    return True, "|D(p,q,r)| = 2^(p+q-r) p! q! / r!, p, q <= 3"


def check_endomorphism_counts() -> Tuple[bool, str]:
    for p in range(5):
        for q in range(5 - p):
            if len(diagrams.enumerate_diagrams(p, q, 0)) != (1 << (p + q)) * factorial(p) * factorial(q):
                return False, f"|D({p},{q},0)| is off"
    return True, "|D(p,q,0)| = 2^(p+q) p! q!, p + q <= 4"


def check_decomposition() -> Tuple[bool, str]:
    for p, q in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        for r in range(min(p, q) + 1):
            for d in diagrams.enumerate_diagrams(p, q, r):
                if diagrams.compose_elementary(diagrams.canonical_decomposition(d), p, q) != d:
                    return False, f"decomposition does not rebuild {diagrams.format_diagram(d)}"
    return True, "canonical decompositions rebuild their diagrams, p, q <= 2"


def check_functoriality(pairs: int = 40, seed: int = 0) -> Tuple[bool, str]:
    rng = random.Random(seed)
    for _ in range(pairs):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        r1 = rng.randint(0, min(p, q))
        r2 = rng.randint(0, min(p, q) - r1)
        d1 = rng.choice(diagrams.enumerate_diagrams(p, q, r1))
        d2 = rng.choice(diagrams.enumerate_diagrams(p - r1, q - r1, r2))
        if diagrams.functoriality_sign(d1, d2, max(p + q, 1)) is None:
            return False, f"gamma(concat) is not +-composite for {diagrams.format_diagram(d1)} ; {diagrams.format_diagram(d2)}"
    return True, f"{pairs} random composable pairs, p, q <= 2"


def check_trivial_hom() -> Tuple[bool, str]:
    unit = Bipartition()
    for bp in enumerate_bipartitions(3):
        total = trep.hom_dim_Z(bp, unit).total
        if total != (1 if bp.lam == bp.mu else 0):
            return False, f"dim Hom(Z({bp}), Z(-|-)) = {total}"
    return True, "dim Hom(Z(lam,mu), Z(0,0)) = delta, |lam|, |mu| <= 3"


def check_koszul() -> Tuple[bool, str]:
    report = trep.koszul_check(3)
    return report.passed, f"{report.checked} nonzero cells, {len(report.counterexamples)} counterexample(s)"


def check_blocks() -> Tuple[bool, str]:
    components = trep.block_components(3)
    for component in components:
        if len({bp.block for bp in component}) != 1:
            return False, f"a component mixes blocks: {[str(bp) for bp in component]}"
    fibers = {bp.block for bp in enumerate_bipartitions(3)}
    if len(components) != len(fibers):
        return False, f"{len(components)} components against {len(fibers)} fibers"
    witness = parse_bipartition("3|2,1")
    home = next(c for c in components if Bipartition() in c)
    return witness in home, "components = fibers of |lam| - |mu|, (0,0) ~ ((3),(2,1))"


def check_tensor_consistency() -> Tuple[bool, str]:
    v, w = Bipartition(BOX, EMPTY), Bipartition(EMPTY, BOX)
    for bp in enumerate_bipartitions(2):
        if trep.totals(trep.tensor_ZZ(bp, v)) != trep.totals(trep.tensor_Z_V(bp)):
            return False, f"Z({bp}) x Z(1|-) differs from Z({bp}) x V"
        if trep.totals(trep.tensor_ZZ(bp, w)) != trep.totals(trep.tensor_Z_W(bp)):
            return False, f"Z({bp}) x Z(-|1) differs from Z({bp}) x W"
    return True, "Z x Z(1|-) = Z x V and Z x Z(-|1) = Z x W, |lam|, |mu| <= 2"


def check_algebra_closure() -> Tuple[bool, str]:
    algebra = FiniteRankAlgebra(3)
    return algebra.check_closure(samples=30) and algebra.dimension() == 18, "q(3) closed, dimension 18"


def check_tensor_lift() -> Tuple[bool, str]:
    return TensorAction(FiniteRankAlgebra(2), 3).check_lift(samples=20), "brackets lift to V_2^(x)3"


def check_gamma_basis() -> Tuple[bool, str]:
    for p, q in [(1, 0), (0, 1), (1, 1)]:
        for r in range(min(p, q) + 1):
            if not gamma_rank_check(p, q, r, max(p + q, 1)):
                return False, f"gamma(D({p},{q},{r})) is linearly dependent"
    return True, "gamma(D(p,q,r)) independent, p + q <= 2"


def check_oracle_agreement() -> Tuple[bool, str]:
    for lam in _labels(2):
        for nu in _labels(2 - lam.size):
            if lam.size + nu.size == 0:
                continue
            for mu in enumerate_strict(lam.size + nu.size):
                oracle = singular_mult(lam, nu, mu, 3)
                if lr.f_coeff(lam, nu, mu).eval_plus() != oracle:
                    return False, f"f^{mu}_{lam},{nu}: table {lr.f_coeff(lam, nu, mu)}, oracle {oracle}"
    return True, "eval_plus(f) = singular count at rank 3, |lam| + |nu| <= 2"


def check_sergeev() -> Tuple[bool, str]:
    report = sergeev_dim_check(2, 3)
    return report.passed, "; ".join(report.failures) or "(2n)^r = sum of dim V(lam) dim S(lam) 2^-p(lam), r = 2, n = 3"


SUITES: Dict[str, List[Tuple[str, Check]]] = {
    "parity": [
        ("theta powers", check_theta_powers),
        ("theta division", check_theta_division),
    ],
    "partitions": [
        ("strict partition counts", check_strict_counts),
        ("dominance order", check_dominance),
        ("shifted standard tableaux", check_shifted_tableaux),
    ],
    "symfunc": [
        ("tableau generating sums", check_tableau_generating_sums),
        ("Q_1 Q_1 = 2 Q_2", check_first_product),
    ],
    "lr": [
        ("Pieri rule", check_pieri),
        ("size support", check_lr_support),
    ],
    "diagrams": [
        ("diagram counts", check_diagram_counts),
        ("endomorphism counts", check_endomorphism_counts),
        ("canonical decompositions", check_decomposition),
        ("functoriality up to sign", check_functoriality),
    ],
    "trep": [
        ("trivial Hom", check_trivial_hom),
        ("Koszul grading", check_koszul),
        ("blocks", check_blocks),
        ("tensor consistency", check_tensor_consistency),
    ],
    "oracle": [
        ("q(n) closure", check_algebra_closure),
        ("tensor lift", check_tensor_lift),
        ("diagram basis", check_gamma_basis),
        ("LR against singular vectors", check_oracle_agreement),
        ("Sergeev dimensions", check_sergeev),
    ],
}


def run_suite(name: str) -> VerifyReport:
    report = VerifyReport(suite=name)
    for check_name, check in SUITES[name]:
        try:
            passed, detail = check()
        except QtrepError as e:
            passed, detail = False, f"{e} (contradicts: {e.statement})"
        logger.info(f"{name}/{check_name}: {'ok' if passed else 'FAILED'}")
        report.checks.append(CheckLine(suite=name, name=check_name, passed=passed, detail=detail))
    return report


@click.command("verify")
@click.argument("suite", type=click.Choice(list(SUITES) + ["all"]), default="all")
@click.pass_context
def verify_command(ctx: click.Context, suite: str):
    """Run a suite of consistency checks (exit code 1 if any fails)."""
    names = list(SUITES) if suite == "all" else [suite]
    run = VerifyRun(reports=[run_suite(name) for name in names])
    if ctx.obj.output == "json":
        click.echo(run.model_dump_json(indent=2))
    else:
        for report in run.reports:
            click.echo(f"[{report.suite}]")
            for line in report.checks:
                mark = "✅" if line.passed else "❌"
                click.echo(f"  {mark} {line.name}: {line.detail}")
    if not run.passed:
        ctx.exit(1)
