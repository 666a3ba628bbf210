"""Shared helpers for the suite: spec enumeration and small fixtures."""

import pytest

from quandlekit.cayley import AffineSpec
from quandlekit.modular import is_prime, units
from quandlekit.tables import bundled_order12


def connected_affine_specs(max_order, prime_only=False):
    """Every connected affine spec with modulus up to max_order; the
    multiplier 1 never qualifies, so all listed specs have n > 1."""
    specs = []
    for m in range(3, max_order + 1):
        if prime_only and not is_prime(m):
            continue
        for t in units(m):
            spec = AffineSpec(m, t)
            if spec.is_connected_admissible:
                specs.append(spec)
    return specs


@pytest.fixture(scope="session")
def order12():
    return bundled_order12()
