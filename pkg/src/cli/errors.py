"""
Exit codes and translation of library errors into them.
"""
import functools
from enum import IntEnum

import click

from src.core.exceptions import InvariantError, LowBitsError, OracleDivergenceError


class ExitCode(IntEnum):
    OK = 0
    ACCEPT = 0
    REJECT = 1
    MALFORMED = 2
    INTERNAL = 3


def handle_errors(func):
    """Turn library errors into a one-line diagnostic and a stable exit code."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (InvariantError, OracleDivergenceError) as e:
            click.echo(f"internal error: {e}", err=True)
            raise click.exceptions.Exit(int(ExitCode.INTERNAL))
        except LowBitsError as e:
            click.echo(f"error: {e}", err=True)
            raise click.exceptions.Exit(int(ExitCode.MALFORMED))

    return wrapper
