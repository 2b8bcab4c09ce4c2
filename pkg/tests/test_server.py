import inspect

import pytest
from fastapi.testclient import TestClient

from src.server.server import app
from tests.conftest import INTRO_EXAMPLE, RUDIN_SHAPIRO

RS = {"ell": 2, "expression": RUDIN_SHAPIRO}


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "operational"
    assert "solve" in response.json()["operations"]


@pytest.mark.parametrize("path", ["/info", "/membership", "/epsilon", "/tau", "/rset", "/solve", "/verify", "/extend"])
def test_computations_run_in_threadpool(path):
    route = next(r for r in app.routes if getattr(r, "path", None) == path)
    assert not inspect.iscoroutinefunction(route.endpoint)


def test_file_form_with_zero_leading_coefficient_is_400(client):
    response = client.post("/info", json={"ell": 2, "coefficients": ["-1", "1", "0"]})
    assert response.status_code == 400


def test_info(client):
    response = client.post("/info", json={"ell": 2, "coefficients": ["-2", "z - 1", "z"]})
    assert response.status_code == 200
    assert response.json()["slopes"] == ["0", "1/2"]


def test_membership(client):
    response = client.post("/membership", json={**RS, "value": "1"})
    assert response.json() == {"v": "1", "in_V": True, "iota": 36}


def test_epsilon_and_tau(client):
    assert client.post("/epsilon", json={**RS, "value": "0"}).json()["value"] == "1/2"
    assert client.post("/tau", json=RS).json()["value"] == "1/8"


def test_solve(client):
    response = client.post("/solve", json={"ell": 2, "expression": "M - 1", "exponents": ["0", "1"]})
    assert response.status_code == 200
    body = response.json()
    assert body["dimension"] == 1
    assert body["R"] == ["0"]


def test_verify(client):
    response = client.post("/verify", json={"ell": 2, "expression": INTRO_EXAMPLE, "exponents": ["0"],
                                            "series": [{"exponent": "0", "coefficient": "1"}]})
    assert response.json() == {"ok": True, "residual_exponents": []}


def test_extend(client):
    response = client.post("/extend", json={"ell": 2, "expression": INTRO_EXAMPLE, "bound": "-1/8",
                                            "initial": [{"exponent": "-1/2", "coefficient": "1"}]})
    assert [t["exponent"] for t in response.json()["series"]] == ["-1/2", "-1/4", "-1/8"]


def test_solve_needs_exponents(client):
    assert client.post("/solve", json=RS).status_code == 400


def test_library_errors_are_bad_requests(client):
    assert client.post("/info", json={"ell": 2, "expression": "M^2 + M"}).status_code == 400
    assert client.post("/epsilon", json={**RS, "value": "1/7"}).status_code == 400
    assert client.post("/epsilon", json={**RS, "value": "x"}).status_code == 400


def test_budget_is_413(client):
    response = client.post("/membership", json={**RS, "value": "5", "budget": 5})
    assert response.status_code == 413


def test_request_validation(client):
    assert client.post("/info", json={"ell": 2}).status_code == 422
    assert client.post("/info", json={"ell": 1, "expression": "M - 1"}).status_code == 422
