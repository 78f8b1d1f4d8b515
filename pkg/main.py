import logging
from typing import Optional

import click

import settings
from algebra import lr
from db.structure_cache import get_structure_cache

logging.basicConfig(level=settings.LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
logger = logging.getLogger(__name__)


@click.group()
@click.option("--size-bound", type=int, default=None, help="Truncation bound for table commands (QTREP_MAX_SIZE).")
@click.option("--threads", type=int, default=None, help="Worker threads for table fills (QTREP_THREADS).")
@click.option("--json", "as_json", is_flag=True, default=False, help="Print JSON instead of tables.")
@click.option("--cache", type=click.Path(dir_okay=False), default=None, help="Structure-constant cache file (QTREP_CACHE wins).")
@click.option("--strict-calibration", is_flag=True, default=False, help="Refuse extrapolated LR exponent classes.")
@click.pass_context
def cli(ctx: click.Context, size_bound: Optional[int], threads: Optional[int], as_json: bool,
        cache: Optional[str], strict_calibration: bool):
    """Exact computations in the category Trep q(inf)."""
    try:
        config = settings.get_config(
            max_size=size_bound,
            num_threads=threads,
            output="json" if as_json else None,
            cache_path=cache,
            strict_calibration=True if strict_calibration else None,
        )
    except ValueError as e:
        raise click.UsageError(str(e))
    ctx.obj = config
    get_structure_cache(config.cache_path)
    lr.set_strict_calibration(config.strict_calibration)
    logger.debug(f"Running with {config}")


# Register commands
from commands.lr import calibrate_command, dump_command, lr_command
cli.add_command(lr_command)
cli.add_command(dump_command)
cli.add_command(calibrate_command)

from commands.trep import blocks_command, homdim_command, koszul_command, socle_command, tensor_command
cli.add_command(homdim_command)
cli.add_command(socle_command)
cli.add_command(tensor_command)
cli.add_command(blocks_command)
cli.add_command(koszul_command)

from commands.diagrams import diagrams_command
cli.add_command(diagrams_command)

from commands.verify import verify_command
cli.add_command(verify_command)


if __name__ == "__main__":
    cli()
