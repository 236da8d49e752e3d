"""
Brute-force spot checks at small b.
"""
from typing import Optional

import click

from src.cli.errors import handle_errors
from src.cli.logging import log_command
from src.cli.options import seed_option
from src.core.forge import cube_root_mod_pow2
from src.core.oracle import MAX_ORACLE_BITS, brute_cuberoots_mod_pow2, validate_odd_roots_small, validate_forgery_small

bits_option = click.option(
    "--bits", "b", type=click.IntRange(min=2, max=MAX_ORACLE_BITS), required=True,
    help=f"Modulus exponent b, 2..{MAX_ORACLE_BITS}.",
)


@click.group("oracle")
def oracle():
    """Exhaustive cube-root enumeration modulo 2^b."""


@oracle.command("roots")
@click.option("--target", type=int, required=True, help="Value whose cube roots mod 2^b are listed.")
@bits_option
@log_command
@handle_errors
def roots(target: int, b: int):
    """List every cube root of TARGET mod 2^b."""
    found = brute_cuberoots_mod_pow2(target, b)
    click.echo(f"cube roots of {found.target} mod 2^{b}: {len(found)}")
    for s in sorted(found.roots):
        click.echo(f"  {s}")
    if found.target % 2:
        sigma, r = cube_root_mod_pow2(found.target, b)
        click.echo(f"inverse-exponent root: {sigma} (r = {r}), in set: {'yes' if sigma in found else 'no'}")


@oracle.command("validate")
@click.option("--trials", type=click.IntRange(min=0), default=100, show_default=True, help="Number of random trials.")
@bits_option
@seed_option
@click.option("--end-to-end", is_flag=True, help="Forge on a toy key and check acceptance independently.")
@click.option("--key-bits", type=int, default=64, show_default=True, help="Toy modulus length for --end-to-end.")
@log_command
@handle_errors
def validate(trials: int, b: int, seed: Optional[int], end_to_end: bool, key_bits: int):
    """Compare the forge against brute force on random inputs."""
    if end_to_end:
        report = validate_forgery_small(trials, b, seed=seed, bit_length=key_bits)
    else:
        report = validate_odd_roots_small(trials, b, seed=seed)
    click.echo(
        f"oracle {report.check} b={report.b}: {report.passes}/{report.trials} passed, "
        f"{report.failures} failures (odd {report.odd_cases}, even {report.even_cases})"
    )
