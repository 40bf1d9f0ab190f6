import pytest
from fastapi.testclient import TestClient

from qseed.service import app

client = TestClient(app)


def _spec(kind="dd", n=2, r=2):
    return {"kind": kind, "n": n, "r": r}


def test_healthz():
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_build_h():
    resp = client.post("/build/h", json={"spec": _spec()})
    assert resp.status_code == 200
    body = resp.json()["matrix"]
    assert body["rows"] == 4 and body["cols"] == 4
    assert body["entries"] == [
        "0", "0", "1", "0",
        "0", "0", "1", "1",
        "-1", "-1", "0", "0",
        "0", "-1", "0", "0",
    ]


def test_build_h_extended():
    resp = client.post("/build/h", json={"spec": _spec("ext", 1, 1)})
    assert resp.json()["matrix"]["entries"] == ["0", "1", "1", "-1", "0", "0", "-1", "0", "0"]


def test_build_lambda():
    resp = client.post("/build/lambda", json={"spec": _spec("dd", 4, 4)})
    assert resp.status_code == 200
    assert resp.json()["matrix"]["entries"][:8] == ["0", "0", "0", "0", "1", "0", "0", "0"]


def test_build_lambda_rejects_extended():
    resp = client.post("/build/lambda", json={"spec": _spec("ext", 2, 2)})
    assert resp.status_code == 400


def test_build_custom_spec():
    a = {"rows": 2, "cols": 2, "entries": ["0", "1", "-1", "0"]}
    m = {"rows": 2, "cols": 2, "entries": ["1", "0", "1", "1"]}
    resp = client.post(
        "/build/h", json={"spec": {"kind": "custom", "n": 2, "r": 2, "A": a, "M": m}}
    )
    assert resp.status_code == 200


def test_custom_spec_requires_blocks():
    resp = client.post("/build/h", json={"spec": _spec("custom")})
    assert resp.status_code == 400


def test_analyze_report_shape():
    resp = client.post("/analyze", json={"spec": _spec("frt", 3, 3), "m": [2, 3]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["corank"] == 3
    assert body["det"] == "0"
    assert body["blocks"] == {"1": 2, "2": 1, "4": 0}
    assert body["degree"] == {"2": "4", "3": "27"} or body["degree"] == {"2": 4, "3": 27}
    assert [g["label"] for g in body["centerGenerators"]] == [
        "xi[1,3]*xi[3,2]^-1",
        "xi[2,3]*xi[3,1]^-1",
        "xi[3,3]",
    ]


def test_analyze_center_null_when_not_stated():
    resp = client.post("/analyze", json={"spec": _spec("c1", 2, 2)})
    assert resp.json()["centerGenerators"] is None


@pytest.mark.parametrize(
    "check,spec",
    [
        ("inverse", _spec("dd", 4, 4)),
        ("lambda", _spec("frt", 2, 2)),
        ("minors", _spec("dd", 2, 2)),
        ("seeds", _spec("dd", 3, 3)),
        ("kernel", _spec("dd", 3, 3)),
        ("exchange", _spec("frt", 2, 2)),
    ],
)
def test_verify_endpoints_pass(check, spec):
    resp = client.post(f"/verify/{check}", json={"spec": spec})
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "pass", body


def test_verify_seeds_emits_seed_json():
    resp = client.post("/verify/seeds", json={"spec": _spec("dd", 3, 3)})
    seed = resp.json()["details"]["seed"]
    assert seed["c"] == 8
    assert seed["lambda"]["rows"] == 9
    assert seed["bTilde"]["cols"] == 8
    assert seed["family"] == {"kind": "dd", "n": 3, "r": 3}
    assert [3, 1] in seed["frozen"] and [2, 3] in seed["frozen"]


def test_verify_unknown_check():
    resp = client.post("/verify/everything", json={"spec": _spec()})
    assert resp.status_code == 400


def test_sweep_pass_and_rows():
    req = {"families": ["dd", "ext"], "n": [2, 3], "r": [2, 3], "m": [2]}
    resp = client.post("/sweep", json=req)
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "pass"
    assert len(body["rows"]) == 8
    first = body["rows"][0]
    assert first["family"] == "dd" and first["verdict"] == "pass"
    assert "degree" in first and "blocks" in first


def test_sweep_rejects_empty_range():
    resp = client.post("/sweep", json={"families": ["dd"], "n": [3, 2], "r": [2, 2]})
    assert resp.status_code == 400


def test_sweep_rejects_custom():
    resp = client.post("/sweep", json={"families": ["custom"], "n": [2, 2], "r": [2, 2]})
    assert resp.status_code in (400, 422)


def test_validation_error_on_bad_dims():
    resp = client.post("/build/h", json={"spec": {"kind": "dd", "n": 0, "r": 2}})
    assert resp.status_code == 422


def test_determinism_byte_identical():
    req = {"spec": _spec("frt", 3, 2), "m": [2]}
    a = client.post("/analyze", json=req).content
    b = client.post("/analyze", json=req).content
    assert a == b
