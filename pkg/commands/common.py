"""
Shared pieces of the command line: argument types, failure handling and output.
"""

import functools
import logging
from typing import Callable, List

import click
from pydantic import BaseModel

from algebra.errors import InvalidPartition, QtrepError
from algebra.partitions import parse_bipartition, parse_partition
from models.reports import render_table

logger = logging.getLogger(__name__)


class PartitionType(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_partition(value)
        except InvalidPartition as e:
            self.fail(f"'{value}' is not a strict partition ({e})", param, ctx)


class BipartitionType(click.ParamType):
    name = "bipartition"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_bipartition(value)
        except InvalidPartition as e:
            self.fail(f"'{value}' is not a bipartition 'lambda|mu' ({e})", param, ctx)


PARTITION = PartitionType()
BIPARTITION = BipartitionType()


class HardFailure(click.ClickException):
    """A computation contradicted a known statement; exits with code 1."""

    exit_code = 1

    def __init__(self, error: QtrepError):
        super().__init__(str(error))
        self.statement = error.statement

    def format_message(self) -> str:
        return f"{self.message}\n  contradicts: {self.statement}"


def hard_failures(command: Callable) -> Callable:
    """Turn engine errors into exit code 1; bad arguments stay usage errors (exit code 2)."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except InvalidPartition as e:
            raise click.UsageError(str(e))
        except QtrepError as e:
            logger.error(f"Hard failure in {command.__name__}: {e}")
            raise HardFailure(e)

    return wrapper


def check_cap(value: int, cap: int, what: str):
    if value > cap:
        raise click.UsageError(f"{what} {value} exceeds the desk-scale cap {cap}")


def emit(ctx: click.Context, model: BaseModel, headers: List[str], rows: List[List[object]], title: str = ""):
    """Print `model` as JSON or the rows as a fixed-width table, depending on the configured output."""
    if ctx.obj.output == "json":
        click.echo(model.model_dump_json(indent=2))
        return
    if title:
        click.echo(title)
    if rows:
        click.echo(render_table(headers, rows))
    else:
        click.echo("(no nonzero entries)")
