import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from streammatch import available_backends, load_backend  # noqa: E402


@pytest.fixture(params=available_backends())
def backend_name(request):
    return request.param


@pytest.fixture
def backend(backend_name):
    return load_backend(backend_name)
