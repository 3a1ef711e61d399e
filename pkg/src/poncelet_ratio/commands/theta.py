"""Command computing theta for a circle pair or F(psi, k)."""

from __future__ import annotations

import click

from .common import output_options, run_command


@click.command("theta")
@click.option("--c", "c", default=None, help="Center of the inner circle")
@click.option("--r", "r", default=None, help="Radius of the inner circle")
@click.option("--psi", default=None, help="Upper limit of F(psi, k), in radians")
@click.option("--k2", default=None, help="Squared modulus of F(psi, k)")
@output_options
def theta(
    c: str | None,
    r: str | None,
    psi: str | None,
    k2: str | None,
    digits: int | None,
    *,
    as_json: bool,
    verify: bool,
) -> None:
    """Ratio theta of a nested circle pair, or F(psi, k) through one."""
    params = {"c": c, "r": r, "psi": psi, "k2": k2, "digits": digits, "verify": verify}
    run_command("theta", params, as_json=as_json)
