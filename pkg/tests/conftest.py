from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / 'src'
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


@pytest.fixture
def store_root(tmp_path):
    """Хранилище процесса с корнем в tmp_path; после теста снова локальное по умолчанию."""
    from permbox.base.runtime import configure_filestore, get_providers

    configure_filestore(root=str(tmp_path))
    try:
        yield tmp_path
    finally:
        get_providers(force_reload=True)
