"""
Unit tests for the forgery constructions.
"""
import random

import pytest

from src.core.exceptions import BoundError, WrongCaseError
from src.core.forge import (
    candidate_accepted,
    check_bound,
    cube_root_mod_pow2,
    explain,
    forge,
    forge_encoded,
    forge_even,
    forge_odd,
    least_c,
    policy_for_key,
    report_slack,
)
from src.core.keys import verify_correct
from src.core.models import EncodedMessage, ForgeCase, TransformSpec
from src.core.transform import encode
from src.core.verifier import verify_flawed

pytestmark = pytest.mark.unit


class TestCheckBound:
    """Tests for the attack bound."""

    @pytest.mark.parametrize("b,bits,expected", [
        (160, 1024, True),
        (160, 489, False),
        (160, 490, True),
        (338, 1024, True),
        (339, 1024, False),
        (167, 512, True),
        (168, 512, False),
        (0, 9, False),
        (0, 10, True),
    ])
    def test_values(self, b, bits, expected):
        """Test 3(b+3) < bits at and around the edge."""
        assert check_bound(b, bits) is expected

    def test_policy_annotation(self, keypair_512, sha1_low):
        """Test policy_for_key records whether the bound holds."""
        pub = keypair_512.public_key
        assert policy_for_key(96, sha1_low, pub).bound_satisfied is True
        assert policy_for_key(170, sha1_low, pub).bound_satisfied is False


class TestCubeRootModPow2:
    """Tests for the shared odd-case cube root."""

    def test_b_eight_all_odd(self):
        """Test every odd residue mod 256 is recovered."""
        for m in range(1, 256, 2):
            sigma, r = cube_root_mod_pow2(m, 8)
            assert r == 43
            assert pow(sigma, 3, 256) == m

    def test_even_value_refused(self):
        """Test even values have no unit cube root."""
        with pytest.raises(WrongCaseError):
            cube_root_mod_pow2(10, 8)


class TestLeastC:
    """Tests for least_c."""

    def test_minimality(self, keypair_512):
        """Test (2^b c)^3 > n and (2^b (c-1))^3 <= n."""
        n = keypair_512.n
        for b in (8, 96, 160):
            c = least_c(n, b)
            assert ((c << b) ** 3) > n
            assert (((c - 1) << b) ** 3) <= n


class TestForgeOdd:
    """Tests for forge_odd."""

    def test_within_bound(self, keypair_1024):
        """Test sigma < 2^b and sigma^3 agrees with M in the low b bits without reduction."""
        pub = keypair_1024.public_key
        rng = random.Random(1)
        for _ in range(50):
            M = EncodedMessage.from_value(rng.getrandbits(160) | 1)
            forged = forge_odd(M, 160, pub)
            assert forged.case == ForgeCase.ODD
            assert forged.sigma < 1 << 160
            assert forged.sigma ** 3 < pub.n
            assert (forged.sigma ** 3 - M.value) % (1 << 160) == 0

    def test_message_one(self, keypair_512):
        """Test M = 1 forges to sigma = 1."""
        forged = forge_odd(EncodedMessage.from_value(1), 96, keypair_512.public_key)
        assert forged.sigma == 1

    def test_even_message_refused(self, keypair_1024):
        """Test parity mismatch raises."""
        with pytest.raises(WrongCaseError):
            forge_odd(EncodedMessage.from_value(4), 160, keypair_1024.public_key)

    def test_bound_enforced(self, keypair_512):
        """Test b outside the bound raises without override."""
        with pytest.raises(BoundError, match="bound"):
            forge_odd(EncodedMessage.from_value(3), 170, keypair_512.public_key)

    def test_floor_enforced(self, keypair_512):
        """Test b below 8 raises even with override."""
        with pytest.raises(BoundError):
            forge_odd(EncodedMessage.from_value(3), 7, keypair_512.public_key, allow_out_of_bound=True)

    def test_override_returns_candidate(self, keypair_512):
        """Test override yields a candidate flagged as out of bound."""
        forged = forge_odd(EncodedMessage.from_value(3), 170, keypair_512.public_key, allow_out_of_bound=True)
        assert forged.bound_satisfied is False


class TestForgeEven:
    """Tests for forge_even."""

    def test_within_bound(self, keypair_512):
        """Test n < sigma^3 < 125n/64 and (sigma^3 - n) matches M in the low b bits."""
        pub = keypair_512.public_key
        rng = random.Random(2)
        b = 96
        for _ in range(50):
            M = EncodedMessage.from_value(rng.randrange(0, pub.n) & ~1)
            forged = forge_even(M, b, pub)
            cube = forged.sigma ** 3
            assert pub.n < cube and 64 * cube < 125 * pub.n
            assert (cube - pub.n) % (1 << b) == M.residue(b)
            assert forged.sigma == (forged.c << b) + forged.tau

    def test_zero_message(self, keypair_512):
        """Test M = 0 is an even message like any other."""
        forged = forge_even(EncodedMessage.from_value(0), 96, keypair_512.public_key)
        assert pow(forged.sigma, 3, keypair_512.n) % (1 << 96) == 0

    def test_odd_message_refused(self, keypair_512):
        """Test parity mismatch raises."""
        with pytest.raises(WrongCaseError):
            forge_even(EncodedMessage.from_value(5), 96, keypair_512.public_key)


class TestForge:
    """Tests for the message-level forge."""

    def test_deployed_parameters(self, keypair_1024, deployed_policy):
        """Test a SHA-1 forgery at b = 160 passes the flawed verifier and fails the correct one."""
        pub = keypair_1024.public_key
        forged = forge(b"not signed by anyone", pub, deployed_policy)
        assert verify_flawed(b"not signed by anyone", forged.signature, pub, deployed_policy)
        assert not verify_correct(b"not signed by anyone", forged.signature, pub, deployed_policy.transform)

    def test_both_cases_sha1_block(self, keypair_512):
        """Test full-width encodings hit both parities and all verify."""
        pub = keypair_512.public_key
        policy = policy_for_key(96, TransformSpec(kind="sha1-block"), pub)
        cases = set()
        for i in range(40):
            message = f"message {i}".encode()
            forged = forge(message, pub, policy)
            cases.add(forged.case)
            assert verify_flawed(message, forged.signature, pub, policy)
        assert cases == {ForgeCase.ODD, ForgeCase.EVEN}

    def test_dispatch_on_parity(self, keypair_512):
        """Test forge_encoded picks the construction by bit 0."""
        pub = keypair_512.public_key
        assert forge_encoded(EncodedMessage.from_value(7), 96, pub).case == ForgeCase.ODD
        assert forge_encoded(EncodedMessage.from_value(8), 96, pub).case == ForgeCase.EVEN

    def test_candidate_not_below_n_is_rejected(self, toy_keypair):
        """Test out-of-bound candidates at or above n are rejected instead of raising."""
        pub = toy_keypair.public_key
        policy = policy_for_key(80, TransformSpec(kind="sha1-block"), pub)
        oversized = 0
        for i in range(20):
            message = bytes([i])
            forged = forge(message, pub, policy, allow_out_of_bound=True)
            oversized += forged.sigma >= pub.n
            assert candidate_accepted(message, forged, pub, policy) is False
        assert oversized > 0

    def test_out_of_bound_without_override(self, keypair_512, sha1_low):
        """Test forge refuses b beyond the bound."""
        policy = policy_for_key(200, sha1_low, keypair_512.public_key)
        with pytest.raises(BoundError):
            forge(b"x", keypair_512.public_key, policy)


class TestExplain:
    """Tests for slack and provenance."""

    def test_slack_odd(self, keypair_1024, deployed_policy):
        """Test sigma^3 mod n = M mod 2^b + 2^b z for the odd case."""
        pub = keypair_1024.public_key
        M = EncodedMessage.from_value(0xABCDEF1)
        forged = forge_odd(M, 160, pub)
        z = report_slack(forged, M, pub, 160)
        assert pow(forged.sigma, 3, pub.n) == M.residue(160) + (z << 160)

    def test_slack_message_one(self, keypair_512):
        """Test M = 1, sigma = 1 has no slack."""
        pub = keypair_512.public_key
        M = EncodedMessage.from_value(1)
        assert report_slack(forge_odd(M, 96, pub), M, pub, 96) == 0

    def test_slack_even(self, keypair_512):
        """Test z = (sigma^3 - n - (M mod 2^b)) / 2^b for even messages."""
        pub = keypair_512.public_key
        rng = random.Random(96)
        for _ in range(50):
            M = EncodedMessage.from_value(rng.randrange(0, pub.n) & ~1)
            forged = forge_even(M, 96, pub)
            diff = forged.sigma ** 3 - pub.n - M.residue(96)
            assert diff % (1 << 96) == 0
            assert report_slack(forged, M, pub, 96) == diff >> 96

    def test_provenance_fields(self, keypair_512):
        """Test explain reports the even-case construction values."""
        pub = keypair_512.public_key
        policy = policy_for_key(96, TransformSpec(kind="identity-mod-n"), pub)
        message = b"\x02"
        forged = forge(message, pub, policy)
        info = explain(forged, encode(message, policy.transform, pub), pub)
        assert info["case"] == "even"
        assert info["b"] == 96
        assert info["c"] == least_c(pub.n, 96)
        assert info["sigma_cubed_vs_n"] == "between n and 125n/64"
        assert info["z"] is not None

    def test_provenance_odd_below_n(self, keypair_512):
        """Test odd-case provenance has no c or tau and sigma^3 below n."""
        pub = keypair_512.public_key
        M = EncodedMessage.from_value(0x1234567)
        info = explain(forge_odd(M, 96, pub), M, pub)
        assert info["c"] is None and info["tau"] is None
        assert info["sigma_cubed_vs_n"] == "below n"
