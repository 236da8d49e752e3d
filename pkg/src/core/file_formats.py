"""
On-disk formats: key files and the LBF1 signed container.

Key files are text, one `name=lowercase-hex` field per line:
    private: n=, d=, e=, bits=
    public:  n=, e=, bits=

Signed container (all integers big-endian):
    offset  size  field
    0       4     magic "LBF1"
    4       1     version (1)
    5       2     compared-bit count b
    7       1     transform id
    8       4     payload length L
    12      L     payload
    12+L    2     signature length S
    14+L    S     signature, minimal big-endian bytes
"""
import struct
from pathlib import Path
from typing import Dict, Union

from Crypto.Util.number import bytes_to_long, long_to_bytes
from pydantic import ValidationError

from src.core.exceptions import KeyFileError, MalformedContainerError
from src.core.models import PublicKey, RsaKeyPair, SignedContainer, TRANSFORM_IDS

PathLike = Union[str, Path]

CONTAINER_MAGIC = b"LBF1"
CONTAINER_VERSION = 1
HEADER = struct.Struct(">4sBHBI")
SIG_LENGTH = struct.Struct(">H")

PRIVATE_FIELDS = ("n", "d", "e", "bits")
PUBLIC_FIELDS = ("n", "e", "bits")


# === Key files ===

def _format_fields(fields: Dict[str, int]) -> str:
    return "".join(f"{name}={value:x}\n" for name, value in fields.items())


def _parse_fields(text: str, allowed: tuple) -> Dict[str, int]:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise KeyFileError(f"Line {lineno}: expected name=hex, got '{line[:40]}'")
        if name not in allowed:
            raise KeyFileError(f"Line {lineno}: unknown field '{name}'")
        if name in fields:
            raise KeyFileError(f"Line {lineno}: duplicate field '{name}'")
        try:
            fields[name] = int(value, 16)
        except ValueError:
            raise KeyFileError(f"Line {lineno}: '{name}' is not hexadecimal") from None
    return fields


def private_key_text(key: RsaKeyPair) -> str:
    return _format_fields({"n": key.n, "d": key.d, "e": key.e, "bits": key.bit_length})


def public_key_text(pub: PublicKey) -> str:
    return _format_fields({"n": pub.n, "e": pub.e, "bits": pub.bit_length})


def write_private_key(path: PathLike, key: RsaKeyPair) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(private_key_text(key), encoding="ascii")
    return path


def write_public_key(path: PathLike, pub: PublicKey) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(public_key_text(pub), encoding="ascii")
    return path


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except FileNotFoundError:
        raise KeyFileError(f"Key file not found: {path}") from None
    except UnicodeDecodeError:
        raise KeyFileError(f"Key file is not ASCII text: {path}") from None


def read_private_key(path: PathLike) -> RsaKeyPair:
    """Load a private key file. p and q are not stored, so they come back as None."""
    fields = _parse_fields(_read_text(path), PRIVATE_FIELDS)
    missing = [name for name in PRIVATE_FIELDS if name not in fields]
    if missing:
        raise KeyFileError(f"Private key file lacks fields: {', '.join(missing)}")
    try:
        key = RsaKeyPair(n=fields["n"], d=fields["d"], e=fields["e"], bit_length=fields["bits"])
        # modulus bounds are checked by PublicKey
        _ = key.public_key
    except ValidationError as e:
        raise KeyFileError(f"Invalid private key: {e.errors()[0]['msg']}") from None
    return key


def read_public_key(path: PathLike) -> PublicKey:
    """Load a public key. A private key file is accepted too; d is ignored."""
    fields = _parse_fields(_read_text(path), PRIVATE_FIELDS)
    fields.pop("d", None)
    missing = [name for name in PUBLIC_FIELDS if name not in fields]
    if missing:
        raise KeyFileError(f"Public key file lacks fields: {', '.join(missing)}")
    try:
        return PublicKey(n=fields["n"], e=fields["e"], bit_length=fields["bits"])
    except ValidationError as e:
        raise KeyFileError(f"Invalid public key: {e.errors()[0]['msg']}") from None


# === Signed container ===

def encode_container(container: SignedContainer) -> bytes:
    sig_bytes = long_to_bytes(container.signature)
    if len(sig_bytes) > 0xFFFF:
        raise MalformedContainerError("Signature does not fit a 2-byte length prefix")
    header = HEADER.pack(
        CONTAINER_MAGIC,
        container.version,
        container.compare_bits,
        container.transform_id,
        len(container.payload),
    )
    return header + container.payload + SIG_LENGTH.pack(len(sig_bytes)) + sig_bytes


def decode_container(data: bytes) -> SignedContainer:
    """
    Parse LBF1 bytes.

    Raises:
        MalformedContainerError: bad magic or version, unknown transform,
            inconsistent lengths or a non-minimal signature encoding
    """
    if len(data) < HEADER.size:
        raise MalformedContainerError(f"Container too short: {len(data)} bytes")
    magic, version, compare_bits, transform_id, payload_len = HEADER.unpack_from(data, 0)
    if magic != CONTAINER_MAGIC:
        raise MalformedContainerError(f"Bad magic {magic!r}")
    if version != CONTAINER_VERSION:
        raise MalformedContainerError(f"Unsupported container version {version}")
    if transform_id not in TRANSFORM_IDS.values():
        raise MalformedContainerError(f"Unknown transform id {transform_id}")

    offset = HEADER.size
    if len(data) < offset + payload_len + SIG_LENGTH.size:
        raise MalformedContainerError("Payload length exceeds container size")
    payload = data[offset:offset + payload_len]
    offset += payload_len

    (sig_len,) = SIG_LENGTH.unpack_from(data, offset)
    offset += SIG_LENGTH.size
    if sig_len == 0 or len(data) != offset + sig_len:
        raise MalformedContainerError(
            f"Signature length {sig_len} inconsistent with {len(data) - offset} remaining bytes"
        )
    sig_bytes = data[offset:]
    if sig_len > 1 and sig_bytes[0] == 0:
        raise MalformedContainerError("Signature encoding has leading zero bytes")

    return SignedContainer(
        version=version,
        compare_bits=compare_bits,
        transform_id=transform_id,
        payload=payload,
        signature=bytes_to_long(sig_bytes),
    )


def write_container(path: PathLike, container: SignedContainer) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_container(container))
    return path


def read_container(path: PathLike) -> SignedContainer:
    try:
        data = Path(path).read_bytes()
    except FileNotFoundError:
        raise MalformedContainerError(f"Container not found: {path}") from None
    return decode_container(data)
