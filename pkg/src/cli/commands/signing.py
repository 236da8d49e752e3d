"""
sign, verify and forge: the commands that produce or check signed containers.
"""
from pathlib import Path
from typing import Optional

import click

from src.cli.errors import ExitCode, handle_errors
from src.cli.logging import log_command
from src.cli.options import compare_bits_option, resolve_compare_bits, resolve_transform, transform_option
from src.core.exceptions import ConfigurationError
from src.core.file_formats import read_container, read_private_key, read_public_key, write_container
from src.core.forge import explain, forge, policy_for_key
from src.core.keys import sign as sign_message
from src.core.models import Signature, SignedContainer, TransformSpec
from src.core.reporting import generate_provenance_report
from src.core.transform import encode
from src.core.verifier import VerifyMode, verify as verify_message

key_option = click.option(
    "--key", "key_path", type=click.Path(dir_okay=False, path_type=Path), required=True,
    help="Key file.",
)
payload_option = click.option(
    "--payload", "payload_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True,
    help="File whose bytes are the message.",
)
out_option = click.option(
    "--out", "out_path", type=click.Path(dir_okay=False, path_type=Path), required=True,
    help="Signed container to write.",
)


@click.command("sign")
@key_option
@payload_option
@out_option
@transform_option
@compare_bits_option
@click.pass_obj
@log_command
@handle_errors
def sign(settings, key_path: Path, payload_path: Path, out_path: Path,
         transform_name: Optional[str], compare_bits: Optional[int]):
    """Sign a payload honestly with a private key."""
    key = read_private_key(key_path)
    transform = resolve_transform(transform_name, settings)
    payload = payload_path.read_bytes()

    signature = sign_message(payload, key, transform)
    container = SignedContainer(
        compare_bits=resolve_compare_bits(compare_bits, settings),
        transform_id=transform.transform_id,
        payload=payload,
        signature=signature.value,
    )
    write_container(out_path, container)
    click.echo(f"signed {len(payload)}-byte payload -> {out_path}")


@click.command("verify")
@click.argument("container_path", type=click.Path(dir_okay=False, path_type=Path))
@key_option
@click.option("--mode", type=click.Choice([m.value for m in VerifyMode]), default=VerifyMode.FLAWED.value,
              show_default=True, help="flawed: compare the low b bits only; correct: compare all bits.")
@transform_option
@compare_bits_option
@click.pass_obj
@log_command
@handle_errors
def verify(settings, container_path: Path, key_path: Path, mode: str,
           transform_name: Optional[str], compare_bits: Optional[int]):
    """
    Verify a signed container. Exit 0 on accept, 1 on reject, 2 on malformed input.

    b and T come from the container unless --compare-bits / --transform are given.
    """
    container = read_container(container_path)
    pub = read_public_key(key_path)

    b = compare_bits if compare_bits is not None else container.compare_bits
    if b < 1:
        raise ConfigurationError("Container records a compared-bit count of 0")
    transform = resolve_transform(transform_name, settings) if transform_name else TransformSpec.from_id(container.transform_id)
    policy = policy_for_key(b, transform, pub)

    accepted = verify_message(container.payload, Signature(value=container.signature), pub, policy, VerifyMode(mode))
    scope = f"low {b} bits" if mode == VerifyMode.FLAWED.value else "all bits"
    click.echo(f"{mode} verifier ({scope}, T = {transform.kind.value}): {'ACCEPT' if accepted else 'REJECT'}")
    raise click.exceptions.Exit(int(ExitCode.ACCEPT if accepted else ExitCode.REJECT))


@click.command("forge")
@click.option("--pub", "key_path", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Public key file of the victim.")
@payload_option
@out_option
@transform_option
@compare_bits_option
@click.option("--explain", "show_explain", is_flag=True, help="Print the provenance (case, r, c, tau, z).")
@click.option("--force-out-of-bound", is_flag=True, help="Attempt the forgery even when b >= bits/3 - 3.")
@click.pass_obj
@log_command
@handle_errors
def forge_cmd(settings, key_path: Path, payload_path: Path, out_path: Path, transform_name: Optional[str],
              compare_bits: Optional[int], show_explain: bool, force_out_of_bound: bool):
    """Forge a signature on a payload using only the public key."""
    pub = read_public_key(key_path)
    transform = resolve_transform(transform_name, settings)
    b = resolve_compare_bits(compare_bits, settings)
    policy = policy_for_key(b, transform, pub)
    payload = payload_path.read_bytes()

    forged = forge(payload, pub, policy, allow_out_of_bound=force_out_of_bound)
    container = SignedContainer(
        compare_bits=b,
        transform_id=transform.transform_id,
        payload=payload,
        signature=forged.sigma,
    )
    write_container(out_path, container)
    click.echo(f"forged {forged.case.value}-case signature on {len(payload)}-byte payload -> {out_path}")

    if show_explain:
        provenance = explain(forged, encode(payload, transform, pub), pub, b)
        click.echo(generate_provenance_report(provenance))
