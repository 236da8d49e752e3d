"""
Bound sweep: forge many messages for each compared-bit count around the
attack bound and count how often the flawed verifier accepts.

Rows inside the bound must show full acceptance; rows outside it are data.
"""
import logging
import random
from typing import Iterable, Optional

from src.core.exceptions import BoundError, ForgeryAssertionError
from src.core.forge import MIN_FORGE_BITS, candidate_accepted, forge, policy_for_key
from src.core.keys import generate_keypair
from src.core.models import ForgeCase, SweepReport, SweepRow, TransformSpec

logger = logging.getLogger(__name__)

MESSAGE_BYTES = 32


def default_b_range(bit_length: int) -> range:
    """b from floor(bit_length/3) - 6 through floor(bit_length/3) + 2."""
    third = bit_length // 3
    return range(max(MIN_FORGE_BITS, third - 6), third + 3)


def run_sweep(
    bit_length: int,
    b_values: Iterable[int],
    trials: int,
    transform: TransformSpec,
    seed: Optional[int] = None,
) -> SweepReport:
    """
    Forge `trials` random messages for every b in b_values on one seeded key.

    Args:
        bit_length: modulus length of the generated key
        b_values: compared-bit counts to test
        trials: forgeries per row; 0 gives a report without rows
        transform: transformation used by the verifier
        seed: seed for the key and the messages

    Returns:
        SweepReport with one row per b

    Raises:
        BoundError: some b is below the forge floor
        ForgeryAssertionError: a row inside the bound did not reach full acceptance
    """
    b_values = list(b_values)
    too_small = [b for b in b_values if b < MIN_FORGE_BITS]
    if too_small:
        raise BoundError(f"Sweep values below the forge floor {MIN_FORGE_BITS}: {too_small}")

    report = SweepReport(bit_length=bit_length, transform=transform.kind, seed=seed)
    if trials <= 0:
        return report

    pub = generate_keypair(bit_length, seed=seed).public_key
    rng = random.Random(None if seed is None else seed + 1)

    for b in b_values:
        policy = policy_for_key(b, transform, pub)
        accepts = odd = even = 0
        for _ in range(trials):
            message = rng.randbytes(MESSAGE_BYTES)
            forged = forge(message, pub, policy, allow_out_of_bound=True)
            if forged.case == ForgeCase.ODD:
                odd += 1
            else:
                even += 1
            if candidate_accepted(message, forged, pub, policy):
                accepts += 1

        row = SweepRow(
            b=b,
            trials=trials,
            flawed_accepts=accepts,
            odd_cases=odd,
            even_cases=even,
            bound_satisfied=bool(policy.bound_satisfied),
        )
        if row.bound_satisfied and accepts != trials:
            raise ForgeryAssertionError(f"Sweep row b={b} inside the bound accepted {accepts}/{trials}")
        logger.info(f"Sweep b={b}: {accepts}/{trials} accepted (bound satisfied: {row.bound_satisfied})")
        report.rows.append(row)

    return report
