from typing import List

import pytest
from loguru import logger

from config.settings import settings


@pytest.fixture
def log_messages() -> List[str]:
    """Records every loguru message at INFO and above for the duration of a test"""
    messages: List[str] = []
    handler_id = logger.add(lambda m: messages.append(m.record["message"]), level="INFO")
    yield messages
    logger.remove(handler_id)


@pytest.fixture
def threads(monkeypatch):
    """Run the test with a multi-worker pool"""
    monkeypatch.setattr(settings, "THREADS", 4)
    return 4
