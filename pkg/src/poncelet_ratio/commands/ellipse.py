"""Command scanning records for an ellipse inside the unit circle."""

from __future__ import annotations

from collections.abc import Callable

import click

from .common import output_options, run_command


def ellipse_options(func: Callable) -> Callable:
    """Ellipse given by axes and center, or by integrand weights."""
    for name, text in reversed(
        (
            ("--a", "Semi-axis along the real line"),
            ("--b", "Semi-axis across the real line"),
            ("--c", "Center on the real line"),
            ("--alpha0", "Constant weight"),
            ("--alpha1", "cos weight"),
            ("--alpha2", "cos^2 weight"),
            ("--cos-psi1", "Cosine of the first vertex angle"),
        )
    ):
        func = click.option(name, default=None, help=text)(func)
    func = click.option(
        "--records", type=int, default=None, help="Stop after this many records"
    )(func)
    return click.option(
        "--budget", type=int, default=None, help="Maximum number of vertices"
    )(func)


@click.command("ellipse")
@ellipse_options
@output_options
def ellipse(
    digits: int | None, *, as_json: bool, verify: bool, **entries: str | None
) -> None:
    """Convergent table of an ellipse's ratio."""
    params = {**entries, "digits": digits, "verify": verify}
    run_command("ellipse", params, as_json=as_json)
