"""测试公共夹具"""

import pytest
from hypothesis import settings

from src.runtime_config import get_runtime_config

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def fresh_runtime_config():
    """每个用例使用默认容差"""
    manager = get_runtime_config()
    manager.reset()
    yield manager
    manager.reset()
