"""
Textbook RSA with public exponent 3.

Key generation draws every random bit from a seeded generator so that the
same seed always yields the same keypair. Signing is M^d mod n with M = T(m);
verify_correct compares all bits of T(m) and sig^3 mod n.
"""
import logging
import random
from typing import Optional

from Crypto.Math.Primality import COMPOSITE, miller_rabin_test
from Crypto.Util.number import sieve_base

from src.core.exceptions import ConfigurationError, MalformedSignatureError
from src.core.mathcore import mod_inverse, mod_pow
from src.core.models import PUBLIC_EXPONENT, PublicKey, RsaKeyPair, Signature, TransformSpec
from src.core.transform import encode

logger = logging.getLogger(__name__)

MIN_KEY_BITS = 64
MILLER_RABIN_ROUNDS = 40
TRIAL_DIVISION_PRIMES = sieve_base[:500]


def _is_probable_prime(candidate: int, rng: random.Random) -> bool:
    for small in TRIAL_DIVISION_PRIMES:
        if candidate == small:
            return True
        if candidate % small == 0:
            return False
    return miller_rabin_test(candidate, MILLER_RABIN_ROUNDS, randfunc=rng.randbytes) != COMPOSITE


def _random_prime(bits: int, rng: random.Random) -> int:
    """
    Sample a prime of exactly `bits` bits with p mod 3 = 2.

    The two top bits are forced so that the product of two such primes has
    exactly 2*bits bits. p mod 3 = 1 would make 3 divide p - 1.
    """
    top = 0b11 << (bits - 2)
    while True:
        candidate = rng.getrandbits(bits) | top | 1
        if candidate % 3 != 2:
            continue
        if _is_probable_prime(candidate, rng):
            return candidate


def generate_keypair(bit_length: int, seed: Optional[int] = None) -> RsaKeyPair:
    """
    Generate an RSA keypair with e = 3 and an exactly bit_length-bit modulus.

    Args:
        bit_length: modulus length, even and at least 64
        seed: seed for the generator; None draws from OS entropy

    Returns:
        RsaKeyPair with p and q retained for self-tests

    Raises:
        ConfigurationError: bit_length is odd or below the minimum
    """
    if bit_length < MIN_KEY_BITS or bit_length % 2:
        raise ConfigurationError(
            f"Key size must be even and at least {MIN_KEY_BITS} bits, got {bit_length}"
        )

    rng = random.Random(seed)
    half = bit_length // 2
    p = _random_prime(half, rng)
    q = _random_prime(half, rng)
    while q == p:
        q = _random_prime(half, rng)

    n = p * q
    d = mod_inverse(PUBLIC_EXPONENT, (p - 1) * (q - 1))
    key = RsaKeyPair(n=n, bit_length=bit_length, d=d, p=p, q=q)
    key.self_test()

    logger.info(f"Generated {bit_length}-bit keypair (seeded: {seed is not None})")
    return key


def sign(message: bytes, key: RsaKeyPair, transform: TransformSpec) -> Signature:
    """Return sigma = T(m)^d mod n."""
    encoded = encode(message, transform, key.public_key)
    return Signature(value=mod_pow(encoded.value, key.d, key.n))


def check_signature_range(sig: Signature, pub: PublicKey) -> None:
    """Raise MalformedSignatureError unless 0 <= sig < n."""
    if sig.value >= pub.n:
        raise MalformedSignatureError(
            f"Signature is not below the modulus ({sig.value.bit_length()} bits vs {pub.bit_length})"
        )


def verify_correct(message: bytes, sig: Signature, pub: PublicKey, transform: TransformSpec) -> bool:
    """Accept iff T(m) equals sig^3 mod n in every bit."""
    check_signature_range(sig, pub)
    expected = encode(message, transform, pub)
    return expected.value == mod_pow(sig.value, PUBLIC_EXPONENT, pub.n)
