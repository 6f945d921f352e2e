import os
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture
def data_dir():
    return Path(os.environ.get("EXSIM_DATA_DIR", ROOT / "data"))


@pytest.fixture
def wltp_file():
    path = os.environ.get("EXSIM_WLTP_FILE")
    if not path or not Path(path).exists():
        pytest.skip("WLTP profile not available")
    return Path(path)
