from typing import Optional

import click

from src.cli.errors import handle_errors
from src.cli.logging import log_command
from src.cli.options import compare_bits_option, resolve_compare_bits, resolve_transform, seed_option, transform_option
from src.core.demo import run_demo


@click.command("demo")
@click.option("--bits", type=int, default=None, help="Modulus length (default: LBF_KEY_BITS or 1024).")
@compare_bits_option
@transform_option
@seed_option
@click.pass_obj
@log_command
@handle_errors
def demo(settings, bits: Optional[int], compare_bits: Optional[int], transform_name: Optional[str], seed: Optional[int]):
    """Sign a benign payload, forge another and compare both verifiers."""
    lines = run_demo(
        bit_length=bits if bits is not None else settings.key_bits,
        compare_bits=resolve_compare_bits(compare_bits, settings),
        transform=resolve_transform(transform_name, settings),
        seed=seed,
    )
    click.echo("\n".join(lines))
