"""
Domain models shared by the core modules and the CLI.

Integers (moduli, exponents, signatures) are plain Python ints of any size.
Models are frozen: once built, a key or signature never changes.
"""
from enum import Enum
from math import gcd
from typing import Dict, FrozenSet, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.exceptions import KeyInvariantError

PUBLIC_EXPONENT = 3
SHA1_WIDTH = 160


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


class TransformKind(str, Enum):
    SHA1_LOW = "sha1-low"
    SHA1_BLOCK = "sha1-block"
    IDENTITY_MOD_N = "identity-mod-n"


# One-byte identifiers used in the signed container
TRANSFORM_IDS: Dict[TransformKind, int] = {
    TransformKind.SHA1_LOW: 1,
    TransformKind.SHA1_BLOCK: 2,
    TransformKind.IDENTITY_MOD_N: 3,
}


class TransformSpec(BaseModel):
    """Which transformation T turns a message into an encoded integer."""
    model_config = ConfigDict(frozen=True)

    kind: TransformKind = Field(..., description="Transformation family")
    output_width: Optional[int] = Field(None, description="Digest width in bits (sha1-low only)")

    @model_validator(mode="before")
    @classmethod
    def _default_width(cls, data):
        if isinstance(data, dict):
            kind = data.get("kind")
            if kind in (TransformKind.SHA1_LOW, TransformKind.SHA1_LOW.value) and data.get("output_width") is None:
                data = {**data, "output_width": SHA1_WIDTH}
        return data

    @model_validator(mode="after")
    def _check_width(self):
        if self.kind == TransformKind.SHA1_LOW and self.output_width != SHA1_WIDTH:
            raise ValueError(f"sha1-low has a fixed width of {SHA1_WIDTH} bits")
        return self

    @property
    def transform_id(self) -> int:
        return TRANSFORM_IDS[self.kind]

    @classmethod
    def from_id(cls, transform_id: int) -> "TransformSpec":
        for kind, tid in TRANSFORM_IDS.items():
            if tid == transform_id:
                return cls(kind=kind)
        raise ValueError(f"Unknown transform id {transform_id}")


class PublicKey(BaseModel):
    """Verification key: modulus n of exactly bit_length bits, exponent 3."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="RSA modulus")
    bit_length: int = Field(..., description="Modulus length in bits")
    e: Literal[3] = PUBLIC_EXPONENT

    @model_validator(mode="after")
    def _check_bounds(self):
        if not (1 << (self.bit_length - 1)) <= self.n < (1 << self.bit_length):
            raise ValueError(f"Modulus is not a {self.bit_length}-bit integer")
        if self.n % 2 == 0:
            raise ValueError("Modulus must be odd")
        return self


class RsaKeyPair(BaseModel):
    """
    Textbook RSA keypair with public exponent 3.

    p and q are kept for self-tests only; they are excluded from dumps and
    never written to key files.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    bit_length: int
    d: int
    e: Literal[3] = PUBLIC_EXPONENT
    p: Optional[int] = Field(None, exclude=True, repr=False)
    q: Optional[int] = Field(None, exclude=True, repr=False)

    @property
    def public_key(self) -> PublicKey:
        return PublicKey(n=self.n, bit_length=self.bit_length)

    def self_test(self) -> None:
        """Check every keypair invariant that can be checked with what we hold."""
        if not (1 << (self.bit_length - 1)) <= self.n < (1 << self.bit_length):
            raise KeyInvariantError(f"Modulus is not a {self.bit_length}-bit integer")
        if self.p is None or self.q is None:
            return
        p, q = self.p, self.q
        if p == q or p * q != self.n:
            raise KeyInvariantError("Modulus is not the product of two distinct primes")
        phi = (p - 1) * (q - 1)
        if gcd(3, phi) != 1:
            raise KeyInvariantError("Exponent 3 is not invertible modulo phi(n)")
        if (3 * self.d) % phi != 1:
            raise KeyInvariantError("3*d is not 1 modulo phi(n)")


class EncodedMessage(BaseModel):
    """M = T(m), an integer in [0, n)."""
    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0)
    parity: Parity

    @model_validator(mode="after")
    def _check_parity(self):
        expected = Parity.ODD if self.value & 1 else Parity.EVEN
        if self.parity != expected:
            raise ValueError(f"Parity {self.parity.value} does not match value")
        return self

    @classmethod
    def from_value(cls, value: int) -> "EncodedMessage":
        return cls(value=value, parity=Parity.ODD if value & 1 else Parity.EVEN)

    @property
    def is_odd(self) -> bool:
        return self.parity == Parity.ODD

    def residue(self, b: int) -> int:
        """Low-b-bit view, M mod 2^b."""
        return self.value & ((1 << b) - 1)


class Signature(BaseModel):
    """A signature integer. Whether it is below n is checked by the verifiers."""
    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0)


class VerifierPolicy(BaseModel):
    """
    What a verifier compares: the low b bits of T(m) and sig^3 mod n.

    bound_satisfied is an attacker-side annotation filled in for a given key
    (see forge.policy_for_key); the verifiers ignore it.
    """
    model_config = ConfigDict(frozen=True)

    b: int = Field(..., ge=1, description="Number of low-order bits compared")
    transform: TransformSpec
    bound_satisfied: Optional[bool] = Field(None, description="b < bit_length/3 - 3 for the key in use")


class ForgeCase(str, Enum):
    ODD = "odd"
    EVEN = "even"


class ForgedSignature(BaseModel):
    """A forged signature with the values that produced it."""
    model_config = ConfigDict(frozen=True)

    sigma: int = Field(..., ge=0)
    case: ForgeCase
    r: int = Field(..., description="Inverse of 3 modulo 2^(b-1)")
    compare_bits: int = Field(..., ge=1)
    c: Optional[int] = Field(None, description="Even case: least c with (2^b c)^3 > n")
    tau: Optional[int] = Field(None, description="Even case: (M+n)^r mod 2^b")
    bound_satisfied: bool = True

    @model_validator(mode="after")
    def _check_shape(self):
        window = 1 << self.compare_bits
        if self.case == ForgeCase.ODD:
            if self.sigma >= window or self.sigma % 2 == 0:
                raise ValueError("Odd-case sigma must be an odd residue below 2^b")
            if self.c is not None or self.tau is not None:
                raise ValueError("Odd-case forgeries carry no c or tau")
        else:
            if self.c is None or self.tau is None:
                raise ValueError("Even-case forgeries need c and tau")
            if self.tau >= window or self.sigma != (self.c << self.compare_bits) + self.tau:
                raise ValueError("Even-case sigma must equal 2^b*c + tau with tau < 2^b")
        return self

    @property
    def signature(self) -> Signature:
        return Signature(value=self.sigma)


class CubeRootSet(BaseModel):
    """Every s in [0, 2^b) with s^3 = target mod 2^b."""
    model_config = ConfigDict(frozen=True)

    modulus_bits: int = Field(..., ge=1)
    target: int = Field(..., ge=0)
    roots: FrozenSet[int]

    @model_validator(mode="after")
    def _check_roots(self):
        modulus = 1 << self.modulus_bits
        for s in self.roots:
            if not 0 <= s < modulus or pow(s, 3, modulus) != self.target:
                raise ValueError(f"{s} is not a cube root of {self.target} mod 2^{self.modulus_bits}")
        return self

    def __contains__(self, item: int) -> bool:
        return item in self.roots

    def __len__(self) -> int:
        return len(self.roots)


class OracleReport(BaseModel):
    """Pass/fail counts of an oracle validation run."""
    check: str
    b: int
    trials: int
    passes: int = 0
    failures: int = 0
    seed: Optional[int] = None
    odd_cases: int = 0
    even_cases: int = 0
    bit_length: Optional[int] = None


class SignedContainer(BaseModel):
    """Payload, verifier policy parameters and a signature, as stored on disk."""
    model_config = ConfigDict(frozen=True)

    version: int = Field(1, ge=0, le=0xFF)
    compare_bits: int = Field(..., ge=0, le=0xFFFF)
    transform_id: int = Field(..., ge=0, le=0xFF)
    payload: bytes
    signature: int = Field(..., ge=0)


class SweepRow(BaseModel):
    """Forgery outcomes for one compared-bit count."""
    b: int
    trials: int
    flawed_accepts: int
    odd_cases: int
    even_cases: int
    bound_satisfied: bool

    @property
    def acceptance_rate(self) -> float:
        return self.flawed_accepts / self.trials if self.trials else 0.0


SWEEP_COLUMNS = [
    "b", "trials", "flawed_accepts", "odd_cases", "even_cases",
    "bound_satisfied", "acceptance_rate",
]


class SweepReport(BaseModel):
    """Rows of a bound sweep for one modulus size."""
    bit_length: int
    transform: TransformKind
    seed: Optional[int] = None
    rows: List[SweepRow] = Field(default_factory=list)

    def to_dataframe(self) -> pd.DataFrame:
        records = [
            {**row.model_dump(), "acceptance_rate": row.acceptance_rate}
            for row in self.rows
        ]
        return pd.DataFrame.from_records(records, columns=SWEEP_COLUMNS)
