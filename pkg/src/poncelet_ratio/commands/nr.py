"""Command classifying interscribed polygons around a numerical range."""

from __future__ import annotations

import click

from .common import output_options, run_command


@click.command("nr")
@click.option("--a", required=True, help="Corner entry T[0, 2]")
@click.option("--b1", required=True, help="Superdiagonal entry T[0, 1]")
@click.option("--b2", required=True, help="Superdiagonal entry T[1, 2]")
@click.option("--c1", default=None, help="Diagonal entry T[0, 0]")
@click.option("--c2", default=None, help="Diagonal entry T[1, 1]")
@click.option("--c3", default=None, help="Diagonal entry T[2, 2]")
@click.option(
    "--start", type=click.Choice(["3", "4", "5"]), default="3", help="Start case"
)
@click.option("--z0", default=None, help="Free starting vertex as 're,im'")
@click.option("--budget", type=int, default=None, help="Maximum number of chords")
@click.option(
    "--fast/--exact",
    default=None,
    help="Hardware doubles with periodic re-anchoring, or full precision",
)
@click.option(
    "--trace",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write k, cos_psi, sin_psi, lambda_sq, log_h to a CSV file",
)
@output_options
def nr(
    digits: int | None, *, as_json: bool, verify: bool, **entries: str | None
) -> None:
    """Classify the trajectory: regular, attractive, repelling or undecided.

    With --verify the reflected polygon of a detected cycle is also run.
    """
    run_command("nr", {**entries, "digits": digits, "verify": verify}, as_json=as_json)
