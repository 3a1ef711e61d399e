"""Command comparing pipeline ratios with the quadrature oracle."""

from __future__ import annotations

import click

from .common import run_command
from .ellipse import ellipse_options


@click.command("verify")
@click.option("--pair", multiple=True, help="Circle pair as 'c,r'; repeatable")
@click.option("--random", "random_count", type=int, default=None, help="Random pairs")
@click.option("--seed", type=int, default=0, help="Seed for --random")
@click.option("--jobs", type=int, default=1, help="Worker processes")
@ellipse_options
@click.option("--digits", type=int, default=None, help="Significant digits")
@click.option("--json", "as_json", is_flag=True, default=False, help="Emit a JSON report")
def verify(
    pair: tuple[str, ...],
    random_count: int | None,
    seed: int,
    jobs: int,
    digits: int | None,
    *,
    as_json: bool,
    **entries: str | None,
) -> None:
    """Oracle agreement for explicit pairs, random pairs or an ellipse.

    Exits with status 3 when any case agrees to fewer than digits - 2 digits.
    """
    params = {
        **entries,
        "pair": pair,
        "random": random_count,
        "seed": seed,
        "jobs": jobs,
        "digits": digits,
    }
    run_command("verify", params, as_json=as_json)
