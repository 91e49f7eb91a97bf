from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from nonassoc.trees import LEAF, BinaryTree

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

trees = st.recursive(st.just(LEAF), lambda sub: st.builds(BinaryTree, sub, sub), max_leaves=14)


@pytest.fixture
def fixtures():
    return FIXTURES
