"""
Command-line entry point: python -m src.cli.main <command>
"""
import click

from src.cli.commands.demo import demo
from src.cli.commands.keys import keygen
from src.cli.commands.oracle import oracle
from src.cli.commands.signing import forge_cmd, sign, verify
from src.cli.commands.sweep import sweep
from src.cli.errors import ExitCode
from src.cli.logging import configure_logging
from src.core.exceptions import ConfigurationError
from src.core.settings import get_settings


@click.group()
@click.option("--log-level", default=None, help="Console log level (default: LBF_LOG_LEVEL or WARNING).")
@click.version_option("1.0.0", prog_name="lowbits-forge")
@click.pass_context
def cli(ctx, log_level):
    """Forge RSA e=3 signatures against a verifier that compares only low-order bits."""
    try:
        settings = get_settings()
    except ConfigurationError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(int(ExitCode.MALFORMED))
    configure_logging(settings.log_dir, log_level or settings.log_level)
    ctx.obj = settings


cli.add_command(keygen)
cli.add_command(sign)
cli.add_command(verify)
cli.add_command(forge_cmd)
cli.add_command(demo)
cli.add_command(sweep)
cli.add_command(oracle)


if __name__ == "__main__":
    cli()
