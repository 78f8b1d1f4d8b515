"""Commands over symmetric functions: LR tables, Schur polynomial dumps and exponent calibration."""

import logging
from typing import Optional

import click

import settings
from algebra import lr
from algebra.partitions import StrictPartition, format_partition
from algebra.symfunc import schur_p, schur_q, tableau_p, tableau_q
from commands.common import PARTITION, check_cap, emit, hard_failures
from models.reports import (
    CalibrationClass, CalibrationReport, LRReport, PolyDump, PolyTerm, graded_text, lr_row_model,
)

logger = logging.getLogger(__name__)


@click.command("lr")
@click.argument("lam", type=PARTITION)
@click.argument("nu", type=PARTITION)
@click.argument("mu", type=PARTITION, required=False)
@click.pass_context
@hard_failures
def lr_command(ctx: click.Context, lam: StrictPartition, nu: StrictPartition, mu: Optional[StrictPartition]):
    """Table of f^mu_{lam,nu} over all mu of size |lam| + |nu| (or a single mu)."""
    check_cap(lam.size + nu.size, settings.MAX_LR_DEGREE, "|lam| + |nu|")
    rows = [lr_row_model(lam, nu, m, b, f) for m, b, f in lr.lr_row(lam, nu, mu)]
    model = LRReport(query=f"lr {format_partition(lam)} {format_partition(nu)}", rows=rows)
    emit(
        ctx, model,
        ["mu", "b", "f", "total"],
        [[r.mu, r.b, graded_text(r.f), r.total] for r in rows],
        title=f"f^mu for lam = {format_partition(lam)}, nu = {format_partition(nu)}",
    )


@click.command("dump")
@click.argument("lam", type=PARTITION)
@click.option("--vars", "num_vars", type=int, default=None, help="Number of variables (default |lam|).")
@click.option("--kind", type=click.Choice(["Q", "P"]), default="Q", show_default=True)
@click.option("--tableaux", is_flag=True, help="Build the polynomial from marked shifted tableaux instead.")
@click.pass_context
@hard_failures
def dump_command(ctx: click.Context, lam: StrictPartition, num_vars: Optional[int], kind: str, tableaux: bool):
    """Monomial expansion of the Schur Q (or P) polynomial of lam."""
    n = num_vars if num_vars is not None else max(lam.size, 1)
    if n < 1:
        raise click.UsageError("need at least one variable")
    check_cap(lam.size, settings.MAX_LR_DEGREE, "|lam|")
    if tableaux:
        poly = tableau_q(lam, n) if kind == "Q" else tableau_p(lam, n)
    else:
        poly = schur_q(lam, n) if kind == "Q" else schur_p(lam, n)
    terms = sorted(poly.terms.items(), reverse=True)
    model = PolyDump(
        kind=kind, lam=format_partition(lam), num_vars=n,
        terms=[PolyTerm(exponents=list(m), coeff=c) for m, c in terms],
    )
    emit(
        ctx, model,
        ["monomial", "coeff"],
        [[" ".join(str(x) for x in m), c] for m, c in terms],
        title=f"{kind}_{format_partition(lam)} in {n} variables",
    )


@click.command("calibrate")
@click.option("--max-total", type=int, default=4, show_default=True, help="Largest |lam| + |nu| sampled.")
@click.option("--rank", type=int, default=settings.MAX_ORACLE_RANK, show_default=True, help="Rank n of q(n).")
@click.option("--write", is_flag=True, help="Rewrite the exponent table with the observed classes.")
@click.pass_context
@hard_failures
def calibrate_command(ctx: click.Context, max_total: int, rank: int, write: bool):
    """Recompute theta-exponents of LR coefficients from the finite-rank oracle."""
    check_cap(max_total, settings.MAX_ORACLE_DEGREE, "--max-total")
    check_cap(rank, settings.MAX_ORACLE_RANK, "--rank")
    if rank < max_total:
        raise click.UsageError(f"--rank {rank} is below --max-total {max_total}")

    result = lr.calibrate(max_total=max_total, rank=rank, num_threads=ctx.obj.num_threads)
    witnesses = {}
    for row in result.rows:
        if row.b:
            key = lr.class_key(row.key.lam, row.key.nu, row.key.mu)
            witnesses[key] = witnesses.get(key, 0) + 1
    classes = [
        CalibrationClass(parities=list(key[:3]), defect=key[3], exponent=e, witnesses=witnesses.get(key, 0))
        for key, e in sorted(result.exponents.items())
    ]
    model = CalibrationReport(
        max_total=max_total, rank=rank, passed=result.passed, classes=classes, anomalies=result.anomalies,
    )
    emit(
        ctx, model,
        ["p(lam)", "p(nu)", "p(mu)", "defect", "exponent", "witnesses"],
        [c.parities + [c.defect, c.exponent, c.witnesses] for c in classes],
        title=f"theta-exponents observed at rank {rank}, |lam| + |nu| <= {max_total}",
    )
    if ctx.obj.output != "json":
        for line in result.anomalies:
            click.echo(f"❌ {line}")
    if write:
        lr.write_calibration(result)
        click.echo(f"✅ Wrote {lr.CALIBRATION_PATH}", err=ctx.obj.output == "json")
    elif not result.passed:
        ctx.exit(1)
