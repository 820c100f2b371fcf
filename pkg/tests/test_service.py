import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from motionforge.cli import main
from motionforge.documents import canonical_json
from motionforge.errors import ERROR_CODES
from motionforge.service import create_app

from conftest import rand_pose, rand_vector


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def points_task(points):
    kind = {5: "points5", 7: "points7"}[len(points)]
    return {"schema_version": "1",
            "task": {"kind": kind, "points": [list(p) for p in points]}}


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["schema_version"] == "1"


def test_interpolate_seven_points(client, rng):
    task = points_task([rand_vector(rng) for _ in range(7)])
    response = client.post("/api/interpolate", json=task)
    assert response.status_code == 200
    body = response.json()
    assert body["schema_version"] == "1"
    assert body["report"]["ok"] is True
    assert body["report"]["max_residual"] < 1e-9
    assert body["motion"]["degree"] == 3


def test_interpolate_bad_branch(client, rng):
    poses = [list(rand_pose(rng).coords()) for _ in range(4)]
    doc = {"schema_version": "1",
           "task": {"kind": "poses4", "poses": poses},
           "options": {"branch": "k3"}}
    response = client.post("/api/interpolate", json=doc)
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "BAD_OPTION"


def test_interpolate_math_failure_is_422(client):
    p = [0.1, 0.2, 0.3]
    task = points_task([p, p, [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    response = client.post("/api/interpolate", json=task)
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "SINGULAR_DIFFERENCE"


def test_malformed_json_is_400(client):
    response = client.post("/api/interpolate", content=b"{not json",
                           headers={"content-type": "application/json"})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "BAD_SCHEMA"


def test_factorize_endpoint(client, rng):
    task = points_task([rand_vector(rng) for _ in range(5)])
    motion = client.post("/api/interpolate", json=task).json()["motion"]
    response = client.post("/api/factorize", json={"motion": motion})
    assert response.status_code == 200
    body = response.json()
    assert len(body["factorizations"]) == 2
    assert len(body["mechanisms"]) == 1
    assert len(body["mechanisms"][0]["joints"]) == 4


def test_sample_reports_singular_parameters_as_gaps(client):
    # primal part vanishes at t = 0: the sweep keeps going and marks a gap
    motion = {"schema_version": "1", "degree": 1,
              "primal": [[0, 0, 0, 0], [1, 0, 0, 0]],
              "dual": [[0, 1, 0, 0], [0, 0, 0, 0]]}
    response = client.post("/api/sample", json={"motion": motion,
                                                "at": [0.0, 1.0]})
    assert response.status_code == 200
    rows = response.json()["samples"]
    assert rows[0] == {"t": 0.0, "singular": True}
    assert "rotation" in rows[1]


def test_sample_endpoint(client, rng):
    task = points_task([rand_vector(rng) for _ in range(5)])
    motion = client.post("/api/interpolate", json=task).json()["motion"]
    response = client.post("/api/sample", json={"motion": motion, "count": 5})
    assert response.status_code == 200
    samples = response.json()["samples"]
    assert len(samples) == 5
    assert samples[0]["t"] == 0.0 and samples[-1]["t"] == 1.0

    response = client.post("/api/sample", json={"motion": motion, "at": [0.25]})
    assert response.status_code == 200

    response = client.post("/api/sample", json={"motion": motion, "count": 1})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "BAD_OPTION"


def test_cli_and_service_byte_identical(client, tmp_path, rng):
    task = points_task([rand_vector(rng) for _ in range(7)])
    task_path = tmp_path / "task.json"
    motion_path = tmp_path / "motion.json"
    task_path.write_text(json.dumps(task))

    runner = CliRunner()
    result = runner.invoke(main, ["interpolate", str(task_path), str(motion_path)])
    assert result.exit_code == 0
    cli_bytes = motion_path.read_text()

    body = client.post("/api/interpolate", json=task).json()
    http_bytes = canonical_json(body["motion"])
    assert http_bytes == cli_bytes


def test_error_codes_in_enum(client):
    task = {"schema_version": "1", "task": {"kind": "mystery"}}
    response = client.post("/api/interpolate", json=task)
    assert response.status_code == 400
    assert response.json()["error"]["code"] in ERROR_CODES
