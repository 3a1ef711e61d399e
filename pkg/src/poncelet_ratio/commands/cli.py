"""Command-line entry point."""

from __future__ import annotations

import logging

import click

from .. import configure_logging
from ..config import Settings, load_command_defaults
from ..utils.exceptions import PonceletError
from .ellipse import ellipse
from .nr import nr
from .theta import theta
from .verify import verify

logger = logging.getLogger(__name__)

COMMANDS = (theta, ellipse, nr, verify)


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="dotenv-format file of flag defaults (DIGITS=100, BUDGET=...)",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level (default from PONCELET_LOG_LEVEL)",
)
@click.pass_context
def cli(ctx: click.Context, config_path: str | None, log_level: str | None) -> None:
    """High-precision ratios of elliptic integrals from interscribed polygons."""
    settings = Settings.from_env()
    configure_logging((log_level or settings.log_level).upper())
    ctx.obj = settings
    if config_path:
        defaults = load_command_defaults(config_path)
        ctx.default_map = {command.name: defaults for command in COMMANDS}
        logger.info("Flag defaults read from %s", config_path)


for command in COMMANDS:
    cli.add_command(command)


def main() -> int:
    """Run the CLI and return the process exit status."""
    try:
        status = cli.main(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except PonceletError as e:
        logger.error("Unhandled failure: %s", e)
        click.echo(f"Error: {e!s}", err=True)
        return e.exit_code
    return status if isinstance(status, int) else 0
