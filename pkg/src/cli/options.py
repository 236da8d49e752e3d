"""
Options shared by several commands and their resolution against settings.
"""
from typing import Optional

import click

from src.core.models import TransformSpec
from src.core.settings import Settings
from src.core.transform import parse_transform

MAX_COMPARE_BITS = 0xFFFF  # width of the container field
TRANSFORM_CHOICE = click.Choice(["sha1-low", "sha1-block", "identity"])

transform_option = click.option(
    "--transform", "transform_name", type=TRANSFORM_CHOICE, default=None,
    help="Message transformation T (default: LBF_TRANSFORM or sha1-low).",
)
compare_bits_option = click.option(
    "--compare-bits", type=click.IntRange(min=1, max=MAX_COMPARE_BITS), default=None,
    help="Number of low-order bits the verifier compares (default: LBF_COMPARE_BITS or 160).",
)
seed_option = click.option(
    "--seed", type=int, default=None,
    help="Seed for all randomness (default: OS entropy).",
)


def resolve_transform(name: Optional[str], settings: Settings) -> TransformSpec:
    return parse_transform(name or settings.transform)


def resolve_compare_bits(value: Optional[int], settings: Settings) -> int:
    return value if value is not None else settings.compare_bits
