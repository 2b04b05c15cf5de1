import pytest
from fastapi.testclient import TestClient

from ucgwalk.service.app import app


@pytest.fixture()
def client():
    return TestClient(app)
