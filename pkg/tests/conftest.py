from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
DEMO = FIXTURES / "demo"


@pytest.fixture
def demo_root() -> Path:
    return DEMO


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
