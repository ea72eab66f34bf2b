from fastapi.testclient import TestClient

from levifusion.service.app import app

client = TestClient(app, raise_server_exceptions=False)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_fuse_endpoint_d16():
    resp = client.post("/fuse", json={
        "diagram": {"family": "D", "rank": 16,
                    "plus": [2, 3, 4, 5, 10, 11, 12, 13],
                    "minus": [1, 6, 7, 8, 9, 14, 15, 16]}})
    assert resp.status_code == 200
    body = resp.json()
    assert body["j"] == [2, 3, 4, 5, 7, 8, 10, 11, 12, 13, 15, 16]
    assert body["partition"] == [5, 5, 5, 5, 3, 3, 3, 1, 1, 1]


def test_fuse_endpoint_method_selection():
    resp = client.post("/fuse", json={
        "diagram": {"family": "E", "rank": 8, "plus": [1, 3, 5, 6],
                    "minus": [2, 4, 7, 8]},
        "method": "epattern"})
    assert resp.status_code == 200
    assert resp.json()["j"] == [1, 2, 3, 5, 6, 8]


def test_partition_endpoint():
    resp = client.post("/partition", json={
        "diagram": {"family": "A", "rank": 11, "plus": [1, 4, 5, 8],
                    "minus": [2, 3, 6, 7, 9, 10, 11]}})
    assert resp.status_code == 200
    assert resp.json()["partition"] == [4, 3, 3, 1, 1]
    assert resp.json()["digraph_size"] == 12


def test_conjugacy_endpoint():
    resp = client.post("/conjugacy", json={
        "family": "D", "rank": 4, "j": [1, 3], "j_prime": [3, 4]})
    assert resp.status_code == 200
    assert resp.json()["conjugate"] is False
    resp = client.post("/conjugacy", json={
        "family": "A", "rank": 2, "j": [1], "j_prime": [2],
        "orbit_oracle": True})
    assert resp.json()["conjugate"] is True
    assert resp.json()["orbit_oracle_used"] is True


def test_enumerate_endpoint():
    resp = client.post("/enumerate", json={"family": "G", "rank": 2})
    assert resp.status_code == 200
    assert len(resp.json()["records"]) == 9


def test_verify_endpoint():
    resp = client.post("/verify", json={"family": "A", "rank": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True and body["inputs_checked"] == 8


def test_input_errors_are_422():
    resp = client.post("/fuse", json={
        "diagram": {"family": "E", "rank": 9, "plus": [1]}})
    assert resp.status_code == 422
    assert resp.json()["error"] == "InputError"
    assert "rank must be 6, 7, or 8" in resp.json()["detail"]

    resp = client.post("/fuse", json={
        "diagram": {"family": "A", "rank": 2, "plus": [1], "minus": [1]}})
    assert resp.status_code == 422
    assert "overlap" in resp.json()["detail"]


def test_capability_errors_are_422():
    resp = client.post("/fuse", json={
        "diagram": {"family": "D", "rank": 4, "plus": [1, 2, 3], "minus": [4]},
        "method": "oracle"})
    assert resp.status_code == 422
    assert resp.json()["error"] == "CapabilityError"
