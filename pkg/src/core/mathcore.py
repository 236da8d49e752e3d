"""
Exact integer utilities shared by every other module.

All functions work on Python ints of any size and never touch floating point.
"""
from typing import Tuple

from src.core.exceptions import MathDomainError


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return base^exponent mod modulus."""
    if modulus < 2:
        raise MathDomainError(f"Modulus must be at least 2, got {modulus}")
    if exponent < 0:
        raise MathDomainError("Negative exponents are not supported")
    return pow(base, exponent, modulus)


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid.

    Args:
        a: non-negative integer
        b: non-negative integer

    Returns:
        Tuple (g, x, y) with g = gcd(a, b) and a*x + b*y = g

    Raises:
        MathDomainError: both inputs are zero or one is negative
    """
    if a < 0 or b < 0:
        raise MathDomainError("ext_gcd expects non-negative inputs")
    if a == 0 and b == 0:
        raise MathDomainError("gcd(0, 0) is undefined")

    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """Return the inverse of a modulo m, in [0, m)."""
    if m < 2:
        raise MathDomainError(f"Modulus must be at least 2, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise MathDomainError(f"No inverse of {a} modulo {m} (gcd = {g})")
    return x % m


def inverse_of_three_mod_pow2(b: int) -> int:
    """
    Return r in [1, 2^(b-1)) with 3*r = 1 mod 2^(b-1).

    2^(b-1) is the order of the unit group mod 2^b, so M -> M^r inverts
    cubing on odd residues.
    """
    if b < 2:
        raise MathDomainError(f"Bit count must be at least 2, got {b}")
    return mod_inverse(3, 1 << (b - 1))


def integer_cuberoot(n: int) -> int:
    """Return the unique t with t^3 <= n < (t+1)^3."""
    if n < 0:
        raise MathDomainError("Cube root of a negative integer")
    if n < 8:
        return 1 if n else 0

    # Newton from above: the iterate decreases until it passes the floor root
    t = 1 << (n.bit_length() // 3 + 1)
    while True:
        nxt = (2 * t + n // (t * t)) // 3
        if nxt >= t:
            break
        t = nxt

    while t ** 3 > n:
        t -= 1
    while (t + 1) ** 3 <= n:
        t += 1
    return t


def low_bits(x: int, b: int) -> int:
    """Return bits 0 .. b-1 of x, i.e. x mod 2^b."""
    if b < 1:
        raise MathDomainError(f"Bit window must be at least 1 bit, got {b}")
    if x < 0:
        raise MathDomainError("low_bits expects a non-negative integer")
    return x & ((1 << b) - 1)
