"""
Key generation command.
"""
from pathlib import Path
from typing import Optional

import click

from src.cli.errors import handle_errors
from src.cli.logging import log_command
from src.cli.options import seed_option
from src.core.file_formats import write_private_key, write_public_key
from src.core.keys import generate_keypair


@click.command("keygen")
@click.option("--bits", type=int, default=None, help="Modulus length in bits, even and >= 64 (default: LBF_KEY_BITS or 1024).")
@seed_option
@click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path),
              default=Path("keys/lbf.key"), show_default=True, help="Private key file.")
@click.option("--pub-out", "pub_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Public key file (default: <out>.pub).")
@click.pass_obj
@log_command
@handle_errors
def keygen(settings, bits: Optional[int], seed: Optional[int], out_path: Path, pub_path: Optional[Path]):
    """Generate an RSA keypair with public exponent 3."""
    key = generate_keypair(bits if bits is not None else settings.key_bits, seed=seed)
    pub_path = pub_path or out_path.with_name(out_path.name + ".pub")

    write_private_key(out_path, key)
    write_public_key(pub_path, key.public_key)

    click.echo(f"wrote {key.bit_length}-bit private key: {out_path}")
    click.echo(f"wrote public key: {pub_path}")
