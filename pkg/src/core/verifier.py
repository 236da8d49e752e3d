"""
The flawed verifier: compares only the b low-order bits of T(m) and sig^3 mod n.

It accepts any b >= 1. Whether b leaves room for a forgery is the attacker's
concern, not the verifier's.
"""
from enum import Enum

from src.core.keys import check_signature_range, verify_correct
from src.core.mathcore import low_bits, mod_pow
from src.core.models import PUBLIC_EXPONENT, PublicKey, Signature, VerifierPolicy
from src.core.transform import encode


class VerifyMode(str, Enum):
    FLAWED = "flawed"
    CORRECT = "correct"


def verify_flawed(message: bytes, sig: Signature, pub: PublicKey, policy: VerifierPolicy) -> bool:
    """
    Partial-comparison verification.

    Args:
        message: message the signature claims to cover
        sig: signature to check
        pub: verification key
        policy: compared-bit count and transformation

    Returns:
        True iff the low policy.b bits of T(m) and sig^3 mod n agree

    Raises:
        MalformedSignatureError: sig is not below n
    """
    check_signature_range(sig, pub)
    expected = encode(message, policy.transform, pub)
    recovered = mod_pow(sig.value, PUBLIC_EXPONENT, pub.n)
    return low_bits(expected.value, policy.b) == low_bits(recovered, policy.b)


def verify(message: bytes, sig: Signature, pub: PublicKey, policy: VerifierPolicy, mode: VerifyMode) -> bool:
    """Run the flawed or the correct verifier."""
    if VerifyMode(mode) == VerifyMode.CORRECT:
        return verify_correct(message, sig, pub, policy.transform)
    return verify_flawed(message, sig, pub, policy)
