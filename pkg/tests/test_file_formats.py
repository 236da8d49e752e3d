"""
Unit tests for key files and the signed container.
"""
import struct

import pytest

from src.core.exceptions import KeyFileError, MalformedContainerError
from src.core.file_formats import (
    decode_container,
    encode_container,
    read_container,
    read_private_key,
    read_public_key,
    write_container,
    write_private_key,
    write_public_key,
)
from src.core.models import SignedContainer

pytestmark = pytest.mark.unit


@pytest.fixture
def container():
    return SignedContainer(compare_bits=160, transform_id=1, payload=b"payload bytes", signature=0x01ABCDEF)


class TestKeyFiles:
    """Tests for the key text format."""

    def test_private_round_trip(self, keypair_512, tmp_path):
        """Test n, d and size survive a write/read cycle."""
        path = write_private_key(tmp_path / "k.key", keypair_512)
        loaded = read_private_key(path)
        assert (loaded.n, loaded.d, loaded.bit_length) == (keypair_512.n, keypair_512.d, 512)
        assert loaded.p is None and loaded.q is None

    def test_public_file_has_no_d(self, keypair_512, tmp_path):
        """Test the public file omits the private exponent."""
        path = write_public_key(tmp_path / "k.pub", keypair_512.public_key)
        text = path.read_text()
        assert "d=" not in text
        assert f"n={keypair_512.n:x}" in text
        assert read_public_key(path) == keypair_512.public_key

    def test_public_from_private_file(self, keypair_512, tmp_path):
        """Test a private key file also serves as a public key."""
        path = write_private_key(tmp_path / "k.key", keypair_512)
        assert read_public_key(path) == keypair_512.public_key

    def test_any_line_order(self, keypair_512, tmp_path):
        """Test fields may appear in any order."""
        path = tmp_path / "k.pub"
        path.write_text(f"bits=200\ne=3\nn={keypair_512.n:x}\n")
        assert read_public_key(path).n == keypair_512.n

    @pytest.mark.parametrize("text,match", [
        ("n=ff\ne=3\n", "lacks"),
        ("n=ff\ne=3\nbits=8\nx=1\n", "unknown"),
        ("n=ff\nn=ff\n", "duplicate"),
        ("n=zz\n", "hexadecimal"),
        ("garbage\n", "expected"),
    ])
    def test_malformed(self, tmp_path, text, match):
        """Test parse errors name the problem."""
        path = tmp_path / "bad.pub"
        path.write_text(text)
        with pytest.raises(KeyFileError, match=match):
            read_public_key(path)

    def test_size_mismatch(self, keypair_512, tmp_path):
        """Test a modulus that does not have the stated size is rejected."""
        path = tmp_path / "bad.pub"
        path.write_text(f"n={keypair_512.n:x}\ne=3\nbits=400\n")
        with pytest.raises(KeyFileError):
            read_public_key(path)

    def test_missing_file(self, tmp_path):
        """Test a missing file raises KeyFileError."""
        with pytest.raises(KeyFileError, match="not found"):
            read_private_key(tmp_path / "nope.key")


class TestContainer:
    """Tests for the LBF1 container."""

    def test_layout(self, container):
        """Test header fields, payload and the minimal signature encoding."""
        data = encode_container(container)
        assert data[:12] == struct.pack(">4sBHBI", b"LBF1", 1, 160, 1, 13)
        assert data[12:25] == b"payload bytes"
        assert data[25:27] == b"\x00\x04"
        assert data[27:] == b"\x01\xab\xcd\xef"

    def test_round_trip(self, container, tmp_path):
        """Test write then read returns the same fields and bytes."""
        path = write_container(tmp_path / "c.lbf", container)
        assert read_container(path) == container
        assert encode_container(read_container(path)) == path.read_bytes()

    def test_zero_signature(self):
        """Test signature 0 is encoded as a single zero byte."""
        zero = SignedContainer(compare_bits=8, transform_id=3, payload=b"", signature=0)
        assert decode_container(encode_container(zero)).signature == 0

    def test_bad_magic(self, container):
        """Test the magic must be LBF1."""
        data = b"XXXX" + encode_container(container)[4:]
        with pytest.raises(MalformedContainerError, match="magic"):
            decode_container(data)

    def test_bad_version(self, container):
        """Test only version 1 is understood."""
        data = bytearray(encode_container(container))
        data[4] = 2
        with pytest.raises(MalformedContainerError, match="version"):
            decode_container(bytes(data))

    def test_unknown_transform(self, container):
        """Test transform ids outside the table are refused."""
        data = bytearray(encode_container(container))
        data[7] = 9
        with pytest.raises(MalformedContainerError, match="transform"):
            decode_container(bytes(data))

    def test_truncated(self, container):
        """Test short containers are refused."""
        data = encode_container(container)
        for cut in (5, 20, len(data) - 1):
            with pytest.raises(MalformedContainerError):
                decode_container(data[:cut])

    def test_trailing_bytes(self, container):
        """Test extra bytes after the signature are refused."""
        with pytest.raises(MalformedContainerError):
            decode_container(encode_container(container) + b"\x00")

    def test_non_minimal_signature(self, container):
        """Test a leading zero byte in the signature is refused."""
        data = encode_container(container)
        patched = data[:25] + b"\x00\x05\x00" + data[27:]
        with pytest.raises(MalformedContainerError, match="leading zero"):
            decode_container(patched)

    def test_missing_file(self, tmp_path):
        """Test a missing container is malformed input."""
        with pytest.raises(MalformedContainerError):
            read_container(tmp_path / "missing.lbf")
