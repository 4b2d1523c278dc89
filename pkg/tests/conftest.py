"""Pytest configuration."""
import os
import sys

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Keep searches small and deterministic in tests
os.environ.setdefault("WILDCOVER_AMBIENT_BOUND", "12")
os.environ.setdefault("WILDCOVER_CLOSURE_BOUND", "20000")

import pytest  # noqa: E402

from wildcover.models.field import field  # noqa: E402


@pytest.fixture
def f5():
    return field(5)


@pytest.fixture
def f25():
    """F_5[t]/(t^2 + 2)."""
    return field(5, 2)
