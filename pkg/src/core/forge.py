"""
Signature forgery against the low-bits verifier with public exponent 3.

A forged sigma only has to satisfy sigma^3 = M + 2^b*z (mod n) for some z
with 2^b*z < n; the verifier never sees z.

Odd M:  sigma = M^r mod 2^b where 3r = 1 mod 2^(b-1). sigma < 2^b, so
        sigma^3 < 2^(3b) < n and no modular reduction happens.
Even M: M is not a unit mod 2^b, so take tau = (M+n)^r mod 2^b (M+n is odd)
        and sigma = 2^b*c + tau with c the least integer such that
        (2^b*c)^3 > n. Then n < sigma^3 < (125/64)*n, so sigma^3 mod n is
        sigma^3 - n, whose low b bits are tau^3 - n = M mod 2^b.

Both constructions are guaranteed when b < bit_length/3 - 3.
"""
import logging
from typing import Dict, Optional, Tuple

from src.core.exceptions import BoundError, ForgeryAssertionError, WrongCaseError
from src.core.mathcore import integer_cuberoot, inverse_of_three_mod_pow2, low_bits, mod_pow
from src.core.models import (
    PUBLIC_EXPONENT,
    EncodedMessage,
    ForgeCase,
    ForgedSignature,
    PublicKey,
    TransformSpec,
    VerifierPolicy,
)
from src.core.transform import encode
from src.core.verifier import verify_flawed

logger = logging.getLogger(__name__)

# Below this the forgery is a brute-force job for the oracle module
MIN_FORGE_BITS = 8


def check_bound(b: int, bit_length: int) -> bool:
    """Return True iff b < bit_length/3 - 3, evaluated as 3*(b + 3) < bit_length."""
    return 3 * (b + 3) < bit_length


def policy_for_key(b: int, transform: TransformSpec, pub: PublicKey) -> VerifierPolicy:
    """Build a VerifierPolicy annotated with whether the bound holds for pub."""
    return VerifierPolicy(b=b, transform=transform, bound_satisfied=check_bound(b, pub.bit_length))


def cube_root_mod_pow2(value: int, b: int) -> Tuple[int, int]:
    """
    Cube root of an odd value modulo 2^b.

    Returns:
        Tuple (sigma, r) with sigma = value^r mod 2^b and r = 3^-1 mod 2^(b-1)
    """
    if value % 2 == 0:
        raise WrongCaseError("Only odd values have a cube root in the unit group mod 2^b")
    r = inverse_of_three_mod_pow2(b)
    return mod_pow(value, r, 1 << b), r


def least_c(n: int, b: int) -> int:
    """Least integer c with (2^b * c)^3 > n."""
    c = (integer_cuberoot(n) >> b) + 1
    while ((c << b) ** 3) <= n:
        c += 1
    return c


def _check_parameters(b: int, pub: PublicKey, allow_out_of_bound: bool) -> bool:
    if b < MIN_FORGE_BITS:
        raise BoundError(f"Forgery needs b >= {MIN_FORGE_BITS}, got {b}")
    within = check_bound(b, pub.bit_length)
    if not within:
        if not allow_out_of_bound:
            raise BoundError(
                f"b={b} violates the attack bound b < {pub.bit_length}/3 - 3 "
                f"for a {pub.bit_length}-bit modulus"
            )
        logger.warning(f"Forging outside the attack bound (b={b}, bit_length={pub.bit_length})")
    return within


def forge_odd(M: EncodedMessage, b: int, pub: PublicKey, allow_out_of_bound: bool = False) -> ForgedSignature:
    """
    Forge for an odd encoded message: sigma = M^r mod 2^b.

    Raises:
        WrongCaseError: M is even
        BoundError: b below the floor, or the bound fails without override
        ForgeryAssertionError: within the bound, sigma^3 is not below n
    """
    if not M.is_odd:
        raise WrongCaseError("forge_odd needs an odd encoded message")
    within = _check_parameters(b, pub, allow_out_of_bound)

    sigma, r = cube_root_mod_pow2(M.value, b)
    if within and sigma ** 3 >= pub.n:
        raise ForgeryAssertionError("Odd-case sigma^3 reached the modulus inside the bound")

    return ForgedSignature(sigma=sigma, case=ForgeCase.ODD, r=r, compare_bits=b, bound_satisfied=within)


def forge_even(M: EncodedMessage, b: int, pub: PublicKey, allow_out_of_bound: bool = False) -> ForgedSignature:
    """
    Forge for an even encoded message: sigma = 2^b*c + ((M+n)^r mod 2^b).

    Raises:
        WrongCaseError: M is odd
        BoundError: b below the floor, or the bound fails without override
        ForgeryAssertionError: within the bound, n < sigma^3 < (125/64)n fails
    """
    if M.is_odd:
        raise WrongCaseError("forge_even needs an even encoded message")
    within = _check_parameters(b, pub, allow_out_of_bound)

    tau, r = cube_root_mod_pow2(M.value + pub.n, b)
    c = least_c(pub.n, b)
    sigma = (c << b) + tau

    if within:
        cube = sigma ** 3
        if not (pub.n < cube and 64 * cube < 125 * pub.n):
            raise ForgeryAssertionError("Even-case sigma^3 left the interval (n, 125n/64)")

    return ForgedSignature(
        sigma=sigma, case=ForgeCase.EVEN, r=r, c=c, tau=tau, compare_bits=b, bound_satisfied=within
    )


def forge_encoded(M: EncodedMessage, b: int, pub: PublicKey, allow_out_of_bound: bool = False) -> ForgedSignature:
    """Dispatch on the parity of M (bit 0, which is also bit 0 of M mod 2^b)."""
    if M.is_odd:
        return forge_odd(M, b, pub, allow_out_of_bound)
    return forge_even(M, b, pub, allow_out_of_bound)


def candidate_accepted(message: bytes, forged: ForgedSignature, pub: PublicKey, policy: VerifierPolicy) -> bool:
    """verify_flawed on a forged candidate; a sigma that is not below n counts as rejected."""
    if forged.sigma >= pub.n:
        return False
    return verify_flawed(message, forged.signature, pub, policy)


def forge(
    message: bytes,
    pub: PublicKey,
    policy: VerifierPolicy,
    allow_out_of_bound: bool = False,
) -> ForgedSignature:
    """
    Forge a signature on an arbitrary message for the flawed verifier.

    Args:
        message: message to forge a signature on
        pub: target public key
        policy: the verifier's compared-bit count and transformation
        allow_out_of_bound: attempt the forgery even when b violates the bound

    Returns:
        ForgedSignature, already checked against verify_flawed when the
        bound holds. Out of bound the candidate may be rejected, or even
        not below n

    Raises:
        BoundError: bound violated and no override
        ForgeryAssertionError: the flawed verifier rejected a forgery that
            is guaranteed to pass
    """
    M = encode(message, policy.transform, pub)
    forged = forge_encoded(M, policy.b, pub, allow_out_of_bound)

    accepted = candidate_accepted(message, forged, pub, policy)
    if not accepted:
        if forged.bound_satisfied:
            raise ForgeryAssertionError(
                f"Flawed verifier rejected a {forged.case.value}-case forgery inside the bound (b={policy.b})"
            )
        logger.warning(f"Out-of-bound {forged.case.value}-case forgery rejected (b={policy.b})")
    else:
        logger.info(f"Forged {forged.case.value}-case signature (b={policy.b}, bits={pub.bit_length})")
    return forged


def report_slack(forged: ForgedSignature, M: EncodedMessage, pub: PublicKey, b: int) -> int:
    """
    Return z with sigma^3 mod n = (M mod 2^b) + 2^b*z.

    Raises:
        ForgeryAssertionError: the difference is not a multiple of 2^b, or
            2^b*z is not below n
    """
    recovered = mod_pow(forged.sigma, PUBLIC_EXPONENT, pub.n)
    diff = recovered - low_bits(M.value, b)
    if diff < 0 or low_bits(diff, b) != 0:
        raise ForgeryAssertionError("sigma^3 mod n does not agree with M in the low b bits")
    z = diff >> b
    if (z << b) >= pub.n:
        raise ForgeryAssertionError("Slack 2^b*z is not below n")
    return z


def explain(forged: ForgedSignature, M: EncodedMessage, pub: PublicKey, b: Optional[int] = None) -> Dict:
    """Provenance of a forgery: construction values plus the slack z."""
    b = forged.compare_bits if b is None else b
    cube = forged.sigma ** 3
    if cube < pub.n:
        relation = "below n"
    elif 64 * cube < 125 * pub.n:
        relation = "between n and 125n/64"
    else:
        relation = "above 125n/64"
    try:
        z = report_slack(forged, M, pub, b)
    except ForgeryAssertionError:
        if forged.bound_satisfied:
            raise
        # out-of-bound candidate whose low bits do not match; there is no slack
        z = None
    return {
        "case": forged.case.value,
        "b": b,
        "bit_length": pub.bit_length,
        "bound_satisfied": forged.bound_satisfied,
        "r": forged.r,
        "c": forged.c,
        "tau": forged.tau,
        "sigma": forged.sigma,
        "z": z,
        "sigma_cubed_vs_n": relation,
    }
