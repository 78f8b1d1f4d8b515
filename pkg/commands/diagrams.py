"""The `diagrams` command: list D(p,q,r) and compare its size with c(p,q,r)."""

import click

import settings
from algebra.diagrams import canonical_decomposition, dim_c, enumerate_diagrams, format_diagram
from commands.common import check_cap, emit, hard_failures
from models.reports import DiagramListing


@click.command("diagrams")
@click.argument("p", type=click.IntRange(min=0))
@click.argument("q", type=click.IntRange(min=0))
@click.argument("r", type=click.IntRange(min=0))
@click.option("--limit", type=int, default=20, show_default=True, help="Diagrams to print (0 for a count only).")
@click.option("--factors", is_flag=True, help="Also print the canonical elementary decomposition.")
@click.pass_context
@hard_failures
def diagrams_command(ctx: click.Context, p: int, q: int, r: int, limit: int, factors: bool):
    """Enumerate the marked diagrams D(p,q,r)."""
    check_cap(p + q, settings.MAX_DIAGRAM_NODES, "p + q")
    if r > min(p, q):
        raise click.UsageError(f"r = {r} exceeds min(p, q) = {min(p, q)}")
    diagrams = enumerate_diagrams(p, q, r)
    expected = dim_c(p, q, r).eval_plus()
    shown = diagrams[:limit] if limit > 0 else []
    model = DiagramListing(
        p=p, q=q, r=r, count=len(diagrams), expected=expected,
        diagrams=[format_diagram(d) for d in shown],
    )
    rows = []
    for d in shown:
        row = [format_diagram(d)]
        if factors:
            row.append(" ".join(str(e) for e in canonical_decomposition(d)) or "1")
        rows.append(row)
    status = "✅" if len(diagrams) == expected else "❌"
    emit(
        ctx, model, ["diagram", "factors"] if factors else ["diagram"], rows,
        title=f"{status} |D({p},{q},{r})| = {len(diagrams)}, c({p},{q},{r}) = {expected}",
    )
    if len(diagrams) != expected:
        ctx.exit(1)
