"""Commands over the category: Hom dimensions, socle layers, tensor products, blocks, Koszul check."""

import logging
from typing import Dict, List, Optional

import click

import settings
from algebra import trep
from algebra.errors import BlockMismatch
from algebra.partitions import Bipartition, format_bipartition, simple_type
from commands.common import BIPARTITION, check_cap, emit, hard_failures
from models.reports import (
    BlockComponent, BlocksReport, KoszulReportModel, Report, ReportEntry, graded_text,
)

logger = logging.getLogger(__name__)


def _cells(e: ReportEntry) -> list:
    return [e.total, graded_text(e.graded), "yes" if e.parity_ambiguous else "no"]


def _check_label(bp: Bipartition):
    check_cap(max(bp.lam.size, bp.mu.size), settings.MAX_TRUNCATION, f"size of {format_bipartition(bp)}")


def _entries(src: Bipartition, product: Dict[Bipartition, trep.HomEntry]) -> List[ReportEntry]:
    return [ReportEntry.of(src, dst, entry) for dst, entry in sorted(product.items())]


@click.command("homdim")
@click.argument("src", type=BIPARTITION)
@click.argument("dst", type=BIPARTITION)
@click.pass_context
@hard_failures
def homdim_command(ctx: click.Context, src: Bipartition, dst: Bipartition):
    """dim Hom(Z(src), Z(dst))."""
    _check_label(src)
    _check_label(dst)
    entry = ReportEntry.of(src, dst, trep.hom_dim_Z(src, dst))
    model = Report(query=f"homdim {format_bipartition(src)} {format_bipartition(dst)}", entries=[entry])
    emit(ctx, model, ["src", "dst", "total", "graded", "ambiguous"], [[entry.src, entry.dst] + _cells(entry)])


@click.command("socle")
@click.argument("bp", type=BIPARTITION)
@click.option("--depth", type=int, default=None, help="Number of layers to print (default: all).")
@click.pass_context
@hard_failures
def socle_command(ctx: click.Context, bp: Bipartition, depth: Optional[int]):
    """Socle layers of Z(lam, mu)."""
    _check_label(bp)
    if depth is not None and depth < 1:
        raise click.UsageError("--depth must be positive")
    rows, entries = [], []
    for r, layer in sorted(trep.socle_layers(bp, depth).items()):
        for dst, hom in sorted(layer.items()):
            entry = ReportEntry.of(bp, dst, hom, r)
            entries.append(entry)
            rows.append([r, entry.dst, simple_type(dst).value] + _cells(entry))
    model = Report(query=f"socle {format_bipartition(bp)}", entries=entries)
    emit(
        ctx, model,
        ["layer", "V", "type", "total", "graded", "ambiguous"], rows,
        title=f"socle filtration of Z({format_bipartition(bp)})",
    )


@click.command("tensor")
@click.argument("a", type=BIPARTITION)
@click.argument("b", type=BIPARTITION, required=False)
@click.option("--with", "factor", type=click.Choice(["V", "W"]), default=None,
              help="Tensor with the natural module V or its dual W instead of a second Z.")
@click.pass_context
@hard_failures
def tensor_command(ctx: click.Context, a: Bipartition, b: Optional[Bipartition], factor: Optional[str]):
    """Decompose Z(a) x Z(b), or Z(a) x V / Z(a) x W, into indecomposable injectives."""
    _check_label(a)
    if (b is None) == (factor is None):
        raise click.UsageError("give either a second label or --with V|W")
    if b is not None:
        _check_label(b)
        product = trep.tensor_ZZ(a, b)
        query = f"tensor {format_bipartition(a)} {format_bipartition(b)}"
    else:
        product = trep.tensor_Z_V(a) if factor == "V" else trep.tensor_Z_W(a)
        query = f"tensor {format_bipartition(a)} --with {factor}"
    entries = _entries(a, product)
    emit(
        ctx, Report(query=query, entries=entries),
        ["Z", "total", "graded", "ambiguous"], [[e.dst] + _cells(e) for e in entries],
        title=query,
    )


@click.command("blocks")
@click.option("--bound", type=int, default=None, help="Truncation |lam|, |mu| <= bound (default --size-bound).")
@click.pass_context
@hard_failures
def blocks_command(ctx: click.Context, bound: Optional[int]):
    """Connected components of the Ext^1 graph, compared with the fibers of |lam| - |mu|."""
    bound = ctx.obj.max_size if bound is None else bound
    check_cap(bound, settings.MAX_TRUNCATION, "--bound")
    components = []
    for component in trep.block_components(bound):
        components.append(BlockComponent(
            blocks=sorted({trep.block_of(bp) for bp in component}),
            labels=[format_bipartition(bp) for bp in component],
        ))
    fibers = len({m for c in components for m in c.blocks})
    model = BlocksReport(bound=bound, fibers=fibers, components=components)
    rows = [
        [",".join(str(m) for m in c.blocks), len(c.labels), " ".join(c.labels[:6]) + (" ..." if len(c.labels) > 6 else "")]
        for c in components
    ]
    emit(
        ctx, model, ["block", "labels", "first labels"], rows,
        title=f"{len(components)} component(s), {fibers} fiber(s) of |lam| - |mu| at bound {bound}",
    )
    if len(components) != fibers or any(len(c.blocks) != 1 for c in components):
        raise BlockMismatch(f"{len(components)} Ext^1 components against {fibers} fibers at bound {bound}")


@click.command("koszul")
@click.option("--bound", type=int, default=None, help="Truncation |lam|, |mu| <= bound (default --size-bound).")
@click.pass_context
@hard_failures
def koszul_command(ctx: click.Context, bound: Optional[int]):
    """Check that socle layers follow the grading d(lam, mu) = min(|lam|, |mu|)."""
    bound = ctx.obj.max_size if bound is None else bound
    check_cap(bound, settings.MAX_TRUNCATION, "--bound")
    report = trep.koszul_check(bound, num_threads=ctx.obj.num_threads)
    model = KoszulReportModel(
        bound=bound, passed=report.passed, checked=report.checked,
        counterexamples=[
            {"src": format_bipartition(s), "dst": format_bipartition(d), "layer": str(r), "reason": why}
            for s, d, r, why in report.counterexamples
        ],
    )
    emit(
        ctx, model,
        ["src", "dst", "layer", "reason"],
        [[c["src"], c["dst"], c["layer"], c["reason"]] for c in model.counterexamples],
        title=f"{'✅' if report.passed else '❌'} Koszul grading over {report.checked} nonzero cells at bound {bound}",
    )
    if not report.passed:
        ctx.exit(1)
