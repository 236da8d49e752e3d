"""
Bound sweep command.
"""
from pathlib import Path
from typing import Optional, Tuple

import click

from src.cli.errors import handle_errors
from src.cli.logging import log_command
from src.cli.options import TRANSFORM_CHOICE, seed_option
from src.core.export_formats import SWEEP_FORMATS, export_sweep_report
from src.core.reporting import generate_sweep_markdown
from src.core.sweep import default_b_range, run_sweep
from src.core.transform import parse_transform


@click.command("sweep")
@click.option("--bits", type=int, default=512, show_default=True, help="Modulus length of the sweep key.")
@click.option("--b-min", type=int, default=None, help="Smallest compared-bit count (default: bits//3 - 6).")
@click.option("--b-max", type=int, default=None, help="Largest compared-bit count (default: bits//3 + 2).")
@click.option("--trials", type=click.IntRange(min=0), default=None,
              help="Forgeries per row (default: LBF_SWEEP_TRIALS or 100).")
@seed_option
@click.option("--transform", "transform_name", type=TRANSFORM_CHOICE, default="sha1-block", show_default=True,
              help="Message transformation T.")
@click.option("--export", "formats", type=click.Choice(SWEEP_FORMATS), multiple=True,
              help="Also write the report in this format; repeatable.")
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Directory for exported reports (default: LBF_REPORTS_DIR or reports).")
@click.pass_obj
@log_command
@handle_errors
def sweep(settings, bits: int, b_min: Optional[int], b_max: Optional[int], trials: Optional[int],
          seed: Optional[int], transform_name: str, formats: Tuple[str, ...], out_dir: Optional[Path]):
    """Measure flawed-verifier acceptance of forgeries around the attack bound."""
    default = default_b_range(bits)
    b_min = b_min if b_min is not None else default.start
    b_max = b_max if b_max is not None else default.stop - 1
    if b_min > b_max:
        raise click.BadParameter(f"--b-min {b_min} is larger than --b-max {b_max}", param_hint="--b-min")

    report = run_sweep(
        bits,
        range(b_min, b_max + 1),
        trials if trials is not None else settings.sweep_trials,
        parse_transform(transform_name),
        seed=seed,
    )
    click.echo(generate_sweep_markdown(report))

    out_dir = out_dir or settings.reports_dir
    for fmt in formats:
        path = export_sweep_report(report, out_dir, f"sweep_{bits}", fmt)
        click.echo(f"Saved {fmt} report: {path}", err=True)
