"""Helpers shared by the click commands."""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

import click

from ..config import Settings
from ..handlers import HandlerFactory
from ..utils.exceptions import PonceletError

logger = logging.getLogger(__name__)


def output_options(func: Callable) -> Callable:
    """--digits, --json and --verify, common to every command."""
    func = click.option(
        "--verify/--no-verify",
        default=False,
        help="Compare against the quadrature oracle",
    )(func)
    func = click.option(
        "--json", "as_json", is_flag=True, default=False, help="Emit a JSON report"
    )(func)
    return click.option("--digits", type=int, default=None, help="Significant digits")(
        func
    )


def run_command(command: str, params: dict[str, Any], *, as_json: bool) -> None:
    """Run a handler, print its report and exit with the report status."""
    ctx = click.get_current_context()
    settings = ctx.find_object(Settings) or Settings.from_env()
    try:
        report = HandlerFactory.get_handler(command, settings).handle(params)
    except PonceletError as e:
        logger.error("%s failed: %s", command, e)
        click.echo(f"Error: {e!s}", err=True)
        ctx.exit(e.exit_code)
    click.echo(report.to_json() if as_json else report.to_text())
    status = report.exit_status()
    if status:
        ctx.exit(status)
