"""
Message transformations T: bytes -> [0, n).

- sha1-low:       SHA-1 digest as a big-endian integer, so it sits in bits
                  0..159 and every higher bit of M is zero
- sha1-block:     the digest repeated to fill bit_length - 8 bits, reduced mod n
- identity-mod-n: the message bytes as a big-endian integer, reduced mod n
"""
from Crypto.Hash import SHA1
from Crypto.Util.number import bytes_to_long

from src.core.exceptions import ConfigurationError
from src.core.models import EncodedMessage, PublicKey, SHA1_WIDTH, TransformKind, TransformSpec

CLI_NAMES = {
    "sha1-low": TransformKind.SHA1_LOW,
    "sha1-block": TransformKind.SHA1_BLOCK,
    "identity": TransformKind.IDENTITY_MOD_N,
    "identity-mod-n": TransformKind.IDENTITY_MOD_N,
}


def parse_transform(name: str) -> TransformSpec:
    """Turn a command-line transform name into a TransformSpec."""
    try:
        return TransformSpec(kind=CLI_NAMES[name.strip().lower()])
    except KeyError:
        raise ConfigurationError(
            f"Unknown transform '{name}'. Use one of: sha1-low, sha1-block, identity"
        ) from None


def _sha1(message: bytes) -> bytes:
    return SHA1.new(message).digest()


def _sha1_block(message: bytes, width: int) -> int:
    digest = _sha1(message)
    n_bytes = (width + 7) // 8
    repeats = -(-n_bytes // len(digest))
    block = (digest * repeats)[:n_bytes]
    return bytes_to_long(block) >> (8 * n_bytes - width)


def encode(message: bytes, spec: TransformSpec, pub: PublicKey) -> EncodedMessage:
    """
    Apply T to a message for the given key.

    Args:
        message: raw message bytes
        spec: which transformation to apply
        pub: key whose modulus bounds the result

    Returns:
        EncodedMessage with value in [0, n)

    Raises:
        ConfigurationError: the modulus is too short for the transformation
    """
    if spec.kind == TransformKind.SHA1_LOW:
        if pub.bit_length <= SHA1_WIDTH:
            raise ConfigurationError(
                f"sha1-low needs a modulus longer than {SHA1_WIDTH} bits, got {pub.bit_length}"
            )
        value = bytes_to_long(_sha1(message))
    elif spec.kind == TransformKind.SHA1_BLOCK:
        width = pub.bit_length - 8
        if width < 1:
            raise ConfigurationError("sha1-block needs a modulus longer than 8 bits")
        value = _sha1_block(message, width) % pub.n
    else:
        value = bytes_to_long(message) % pub.n

    return EncodedMessage.from_value(value)
