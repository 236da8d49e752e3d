"""
Pytest configuration and shared fixtures for all tests.
"""
import pytest
import sys
from pathlib import Path

# Add project root to sys.path
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from src.cli.logging import remove_handlers
from src.core.forge import policy_for_key
from src.core.keys import generate_keypair
from src.core.models import TransformKind, TransformSpec


@pytest.fixture(scope="session")
def keypair_512():
    """Seeded 512-bit keypair shared by the whole session."""
    return generate_keypair(512, seed=512)


@pytest.fixture(scope="session")
def keypair_1024():
    """Seeded 1024-bit keypair, the deployed key size."""
    return generate_keypair(1024, seed=1024)


@pytest.fixture(scope="session")
def toy_keypair():
    """64-bit keypair for brute-force scale checks."""
    return generate_keypair(64, seed=64)


@pytest.fixture
def sha1_low():
    return TransformSpec(kind=TransformKind.SHA1_LOW)


@pytest.fixture
def identity():
    return TransformSpec(kind=TransformKind.IDENTITY_MOD_N)


@pytest.fixture
def deployed_policy(keypair_1024, sha1_low):
    """Low 160 bits compared, T = SHA-1, 1024-bit key."""
    return policy_for_key(160, sha1_low, keypair_1024.public_key)


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path, monkeypatch):
    """Point log and report directories at tmp_path and drop CLI log handlers afterwards."""
    monkeypatch.setenv("LBF_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("LBF_REPORTS_DIR", str(tmp_path / "reports"))
    for name in ("LBF_KEY_BITS", "LBF_COMPARE_BITS", "LBF_TRANSFORM", "LBF_LOG_LEVEL", "LBF_SWEEP_TRIALS"):
        monkeypatch.delenv(name, raising=False)
    yield
    remove_handlers()
