"""
Unit tests for key generation, honest signing and the correct verifier.
"""
import random

import pytest

from src.core.exceptions import (
    ConfigurationError,
    ForgeryAssertionError,
    InvariantError,
    KeyInvariantError,
    MalformedSignatureError,
)
from src.core.keys import generate_keypair, sign, verify_correct
from src.core.models import RsaKeyPair, Signature

pytestmark = pytest.mark.unit


class TestGenerateKeypair:
    """Tests for generate_keypair."""

    @pytest.mark.parametrize("bits", [64, 128, 512])
    def test_exact_bit_length(self, bits):
        """Test n has exactly the requested number of bits."""
        key = generate_keypair(bits, seed=bits)
        assert key.n.bit_length() == bits
        assert key.bit_length == bits

    def test_exponent_invertible(self, keypair_512):
        """Test 3d = 1 mod phi(n)."""
        phi = (keypair_512.p - 1) * (keypair_512.q - 1)
        assert (3 * keypair_512.d) % phi == 1
        assert keypair_512.p % 3 == 2 and keypair_512.q % 3 == 2

    def test_seed_is_deterministic(self):
        """Test the same seed yields the same key."""
        assert generate_keypair(128, seed=7) == generate_keypair(128, seed=7)

    def test_different_seeds_differ(self):
        """Test different seeds yield different moduli."""
        assert generate_keypair(128, seed=1).n != generate_keypair(128, seed=2).n

    @pytest.mark.parametrize("bits", [63, 65, 32, 0])
    def test_invalid_sizes(self, bits):
        """Test odd or too small sizes are rejected."""
        with pytest.raises(ConfigurationError, match="even"):
            generate_keypair(bits)

    def test_private_factors_hidden_from_dump(self, keypair_512):
        """Test p and q are not part of the serialized key."""
        dumped = keypair_512.model_dump()
        assert "p" not in dumped and "q" not in dumped


class TestSelfTest:
    """Tests for RsaKeyPair.self_test."""

    def test_bad_d_detected(self, keypair_512):
        """Test a corrupted private exponent fails the self-test."""
        broken = RsaKeyPair(
            n=keypair_512.n, bit_length=512, d=keypair_512.d + 1,
            p=keypair_512.p, q=keypair_512.q,
        )
        with pytest.raises(KeyInvariantError):
            broken.self_test()

    def test_failure_is_a_key_error(self):
        """Test self-test failures are internal errors but not forgery assertions."""
        assert issubclass(KeyInvariantError, InvariantError)
        assert not issubclass(KeyInvariantError, ForgeryAssertionError)

    def test_loaded_key_checks_size_only(self, keypair_512):
        """Test a key without factors passes on size alone."""
        RsaKeyPair(n=keypair_512.n, bit_length=512, d=keypair_512.d).self_test()


class TestHonestSignatures:
    """Tests for sign and verify_correct."""

    def test_round_trip(self, keypair_512, sha1_low):
        """Test an honest signature verifies."""
        sig = sign(b"hello", keypair_512, sha1_low)
        assert verify_correct(b"hello", sig, keypair_512.public_key, sha1_low)

    def test_other_message_rejected(self, keypair_512, sha1_low):
        """Test a signature does not cover another message."""
        sig = sign(b"hello", keypair_512, sha1_low)
        assert not verify_correct(b"hellp", sig, keypair_512.public_key, sha1_low)

    def test_signature_out_of_range(self, keypair_512, sha1_low):
        """Test sig >= n is malformed, not rejected."""
        pub = keypair_512.public_key
        with pytest.raises(MalformedSignatureError):
            verify_correct(b"x", Signature(value=pub.n), pub, sha1_low)

    def test_neighbouring_signature_rejected(self, keypair_512, sha1_low):
        """Test (sigma + 1) mod n never verifies over 10,000 random messages."""
        pub = keypair_512.public_key
        rng = random.Random(10_000)
        accepted = 0
        for _ in range(10_000):
            message = rng.randbytes(16)
            sig = sign(message, keypair_512, sha1_low)
            accepted += verify_correct(message, Signature(value=(sig.value + 1) % pub.n), pub, sha1_low)
        assert accepted == 0

