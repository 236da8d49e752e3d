"""
End-to-end demonstration with the deployed parameters: a 1024-bit key with
e = 3, a verifier that compares the low 160 bits, and SHA-1 as T.

The "malicious" payload is a fixed harmless string that only plays that role.
"""
from typing import List, Optional

from src.core.forge import candidate_accepted, check_bound, explain, forge, policy_for_key
from src.core.keys import generate_keypair, sign, verify_correct
from src.core.models import TransformSpec
from src.core.reporting import generate_provenance_report
from src.core.transform import encode
from src.core.verifier import verify_flawed

BENIGN_PAYLOAD = b"Ballot definition v1.0, precinct 12 (signed by the vendor)"
MALICIOUS_PAYLOAD = b"MALICIOUS (harmless demo string): replacement ballot definition"


def _verdict(accepted: bool) -> str:
    return "ACCEPT" if accepted else "REJECT"


def _short_hex(value: int, digits: int = 32) -> str:
    text = f"{value:x}"
    return f"0x{text}" if len(text) <= digits else f"0x{text[:digits]}... ({value.bit_length()} bits)"


def run_demo(
    bit_length: int = 1024,
    compare_bits: int = 160,
    transform: Optional[TransformSpec] = None,
    seed: Optional[int] = None,
) -> List[str]:
    """
    Sign a benign payload, forge a signature on a different payload and show
    both verifiers' verdicts.

    Returns:
        Transcript lines; identical for identical arguments when seed is set
    """
    transform = transform or TransformSpec(kind="sha1-low")
    key = generate_keypair(bit_length, seed=seed)
    pub = key.public_key
    policy = policy_for_key(compare_bits, transform, pub)
    within = check_bound(compare_bits, bit_length)

    lines = [
        "== Low-bits RSA signature forgery demo ==",
        f"key: {bit_length}-bit modulus n = {_short_hex(pub.n)}, e = 3, "
        f"seed {seed if seed is not None else 'from OS entropy'}",
        f"verifier: compares the low {compare_bits} bits of T(m) and sig^3 mod n, T = {transform.kind.value}",
        f"attack bound: b < {bit_length}/3 - 3 = {bit_length / 3 - 3:.2f} -> "
        f"{'satisfied' if within else 'VIOLATED'}",
    ]
    if not within:
        lines.append(f"WARNING: b={compare_bits} is outside the attack bound; forging anyway")

    honest = sign(BENIGN_PAYLOAD, key, transform)
    lines += [
        "",
        f"benign payload: {BENIGN_PAYLOAD.decode()!r}",
        f"  honest signature: {_short_hex(honest.value)}",
        f"  flawed verifier: {_verdict(verify_flawed(BENIGN_PAYLOAD, honest, pub, policy))}"
        f" / correct verifier: {_verdict(verify_correct(BENIGN_PAYLOAD, honest, pub, transform))}",
    ]

    forged = forge(MALICIOUS_PAYLOAD, pub, policy, allow_out_of_bound=True)
    encoded = encode(MALICIOUS_PAYLOAD, transform, pub)
    in_range = forged.sigma < pub.n
    flawed = candidate_accepted(MALICIOUS_PAYLOAD, forged, pub, policy)
    correct = in_range and verify_correct(MALICIOUS_PAYLOAD, forged.signature, pub, transform)
    lines += [
        "",
        f"malicious payload: {MALICIOUS_PAYLOAD.decode()!r}",
        f"  forged signature ({forged.case.value} case, no private key used): {_short_hex(forged.sigma)}",
        generate_provenance_report(explain(forged, encoded, pub, compare_bits)),
        *([] if in_range else ["  forged value is not below n; both verifiers refuse it"]),
        "",
        f"flawed verifier: {_verdict(flawed)} / correct verifier: {_verdict(correct)}",
    ]
    return lines
