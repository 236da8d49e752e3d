"""
Unit tests for the brute-force oracle.
"""
import pytest

from src.core.exceptions import MathDomainError, OracleCapacityError, OracleDivergenceError
from src.core.forge import cube_root_mod_pow2
from src.core.oracle import (
    brute_cuberoots_mod_pow2,
    odd_cube_root_counts,
    validate_odd_roots_small,
    validate_forgery_small,
)

pytestmark = pytest.mark.unit


class TestBruteCuberoots:
    """Tests for exhaustive enumeration."""

    def test_mod_eight(self):
        """Test the full table mod 8."""
        assert brute_cuberoots_mod_pow2(1, 3).roots == frozenset({1})
        assert brute_cuberoots_mod_pow2(3, 3).roots == frozenset({3})
        assert brute_cuberoots_mod_pow2(0, 3).roots == frozenset({0, 2, 4, 6})
        assert len(brute_cuberoots_mod_pow2(2, 3)) == 0

    def test_target_reduced(self):
        """Test targets are reduced mod 2^b first."""
        assert brute_cuberoots_mod_pow2(257, 8).target == 1

    def test_agrees_with_inverse_exponent(self):
        """Test the inverse-exponent root is the unique brute-force root for b = 10."""
        for m in range(1, 1 << 10, 2):
            sigma, _ = cube_root_mod_pow2(m, 10)
            assert brute_cuberoots_mod_pow2(m, 10).roots == frozenset({sigma})

    def test_capacity(self):
        """Test b above 24 is refused and b below 2 is a domain error."""
        with pytest.raises(OracleCapacityError):
            brute_cuberoots_mod_pow2(1, 25)
        with pytest.raises(MathDomainError):
            brute_cuberoots_mod_pow2(1, 1)


class TestOddCubeRootCounts:
    """Tests for the root-count scan."""

    @pytest.mark.parametrize("b", [3, 8, 12])
    def test_unique_roots(self, b):
        """Test cubing is a bijection on odd residues."""
        counts = odd_cube_root_counts(b)
        assert len(counts) == 1 << (b - 1)
        assert (counts == 1).all()


class TestValidation:
    """Tests for the randomized checks."""

    def test_odd_roots(self):
        """Test 100 random odd targets at b = 12 all pass."""
        report = validate_odd_roots_small(100, 12, seed=0)
        assert report.passes == 100
        assert report.failures == 0
        assert report.odd_cases == 100

    def test_odd_roots_fixed_target(self):
        """Test a forced target."""
        assert validate_odd_roots_small(3, 8, target=77).passes == 3

    def test_end_to_end(self):
        """Test toy-key forgeries pass the independent low-bit check in both cases."""
        report = validate_forgery_small(60, 16, seed=3, bit_length=64)
        assert report.passes == 60
        assert report.odd_cases + report.even_cases == 60
        assert report.odd_cases > 0 and report.even_cases > 0

    def test_divergence_error_carries_counterexample(self):
        """Test the error exposes b, target and root."""
        err = OracleDivergenceError(b=8, target=3, root=5, roots=frozenset({11}))
        assert (err.b, err.target, err.root) == (8, 3, 5)
        assert "b=8" in str(err)
