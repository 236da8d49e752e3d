"""
Brute-force ground truth for small parameters.

Cube roots modulo 2^b are found by cubing every residue in [0, 2^b), never by
inverting 3. The end-to-end check recomputes sigma^3 mod n and the low-bit
comparison with plain integer operations rather than the verifier module.
"""
import logging
import random
from functools import lru_cache
from typing import Optional

import numpy as np

from src.core.exceptions import MathDomainError, OracleCapacityError, OracleDivergenceError
from src.core.forge import cube_root_mod_pow2, forge, policy_for_key
from src.core.keys import generate_keypair
from src.core.models import CubeRootSet, OracleReport, TransformKind, TransformSpec

logger = logging.getLogger(__name__)

MAX_ORACLE_BITS = 24


def _check_bits(b: int) -> None:
    if b > MAX_ORACLE_BITS:
        raise OracleCapacityError(f"Oracle enumerates at most 2^{MAX_ORACLE_BITS} residues, got b={b}")
    if b < 2:
        raise MathDomainError(f"Oracle needs b >= 2, got {b}")


@lru_cache(maxsize=8)
def _cube_table(b: int) -> np.ndarray:
    """s^3 mod 2^b for every s in [0, 2^b), indexed by s."""
    mask = (1 << b) - 1
    s = np.arange(1 << b, dtype=np.int64)
    cubes = (((s * s) & mask) * s) & mask
    cubes.setflags(write=False)
    return cubes


def brute_cuberoots_mod_pow2(target: int, b: int) -> CubeRootSet:
    """
    All s in [0, 2^b) with s^3 = target (mod 2^b), by exhaustive enumeration.

    Raises:
        OracleCapacityError: b above the enumeration ceiling
    """
    _check_bits(b)
    residue = target & ((1 << b) - 1)
    roots = np.flatnonzero(_cube_table(b) == residue)
    return CubeRootSet(modulus_bits=b, target=residue, roots=frozenset(int(s) for s in roots))


def odd_cube_root_counts(b: int) -> np.ndarray:
    """Number of odd cube roots of each odd target mod 2^b; index i is target 2i+1."""
    _check_bits(b)
    cubes = _cube_table(b)
    counts = np.bincount(cubes[1::2], minlength=1 << b)
    return counts[1::2]


def validate_odd_roots_small(trials: int, b: int, seed: Optional[int] = None, target: Optional[int] = None) -> OracleReport:
    """
    Check the odd-case cube root against the brute-force root set.

    Args:
        trials: number of odd targets to test
        b: modulus bits, at most the oracle ceiling
        seed: seed for target sampling
        target: force every trial to use this odd value

    Returns:
        OracleReport with all trials counted as passes

    Raises:
        OracleDivergenceError: a cube root outside the brute-force set
    """
    _check_bits(b)
    rng = random.Random(seed)
    report = OracleReport(check="odd-roots", b=b, trials=trials, seed=seed)

    for _ in range(trials):
        value = target if target is not None else rng.randrange(1, 1 << (2 * b), 2)
        root, _ = cube_root_mod_pow2(value, b)
        roots = brute_cuberoots_mod_pow2(value, b)
        if root not in roots:
            raise OracleDivergenceError(b=b, target=roots.target, root=root, roots=roots.roots)
        report.passes += 1
        report.odd_cases += 1

    logger.info(f"Oracle odd-root check: {report.passes}/{trials} passed at b={b}")
    return report


def validate_forgery_small(trials: int, b: int, seed: Optional[int] = None, bit_length: int = 64) -> OracleReport:
    """
    End-to-end forgeries on a toy key, checked without the verifier module.

    Messages are random 16-byte strings under identity-mod-n, so both parity
    cases occur. Each forgery is accepted iff the low b bits of sigma^3 mod n
    and of the message integer mod n coincide.

    Raises:
        OracleDivergenceError: a forgery fails the independent check
    """
    rng = random.Random(seed)
    key = generate_keypair(bit_length, seed=seed)
    pub = key.public_key
    policy = policy_for_key(b, TransformSpec(kind=TransformKind.IDENTITY_MOD_N), pub)
    mask = (1 << b) - 1
    report = OracleReport(check="end-to-end", b=b, trials=trials, seed=seed, bit_length=bit_length)

    for _ in range(trials):
        message = rng.randbytes(16)
        encoded = int.from_bytes(message, "big") % pub.n
        forged = forge(message, pub, policy)
        recovered = pow(forged.sigma, 3, pub.n)
        if (recovered ^ encoded) & mask:
            raise OracleDivergenceError(b=b, target=encoded & mask, root=forged.sigma)
        report.passes += 1
        if encoded & 1:
            report.odd_cases += 1
        else:
            report.even_cases += 1

    return report
