"""
Command logging.
"""
import functools
import json
import logging
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import List

import click

logger = logging.getLogger("cli")

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_FILE = "lbf.log"

_installed: List[logging.Handler] = []


def remove_handlers() -> None:
    """Detach and close the handlers installed by configure_logging."""
    root = logging.getLogger()
    for handler in _installed:
        root.removeHandler(handler)
        handler.close()
    _installed.clear()


def configure_logging(log_dir: Path, console_level: str = "WARNING") -> None:
    """
    Send INFO and above to <log_dir>/lbf.log and `console_level` and above
    to stderr. Safe to call once per command invocation: handlers installed
    by a previous call are replaced, other handlers are left alone.
    """
    remove_handlers()
    root = logging.getLogger()

    # Ensure logs directory exists
    logs_dir = Path(log_dir)
    logs_dir.mkdir(parents=True, exist_ok=True)

    formatter = logging.Formatter(LOG_FORMAT)
    file_handler = logging.FileHandler(str(logs_dir / LOG_FILE))
    file_handler.setLevel(logging.INFO)
    stream_handler = logging.StreamHandler()
    stream_handler.setLevel(getattr(logging, console_level.upper(), logging.WARNING))

    for handler in (file_handler, stream_handler):
        handler.setFormatter(formatter)
        root.addHandler(handler)
        _installed.append(handler)
    root.setLevel(logging.INFO)


def log_command(func):
    """
    Log every command invocation in structured format: the command and its
    parameters on start, the exit code and duration on completion.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        start_time = time.time()

        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "command": ctx.command_path,
            "params": {name: str(value) for name, value in ctx.params.items()},
        }
        logger.info(f"Command: {json.dumps(log_data)}")

        exit_code = 0
        try:
            return func(*args, **kwargs)
        except click.exceptions.Exit as e:
            exit_code = e.exit_code
            raise
        except Exception as e:
            exit_code = None
            error_log = {
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "command": ctx.command_path,
                "error": str(e),
                "error_type": type(e).__name__,
                "process_time_ms": round((time.time() - start_time) * 1000, 2),
            }
            logger.error(f"Error: {json.dumps(error_log)}")
            raise
        finally:
            if exit_code is not None:
                result_log = {
                    "timestamp": datetime.now(timezone.utc).isoformat(),
                    "command": ctx.command_path,
                    "exit_code": exit_code,
                    "process_time_ms": round((time.time() - start_time) * 1000, 2),
                }
                logger.info(f"Result: {json.dumps(result_log)}")

    return wrapper
