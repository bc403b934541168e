import json
import threading
import urllib.error
import urllib.request

import pytest

from clusterkit.presets import PRESET_NAMES, preset_seed
from clusterkit.seeds import seed_at
from clusterkit.service import make_server


@pytest.fixture(scope="module")
def server_port():
    server = make_server(port=0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield port
    server.shutdown()
    server.server_close()


def request(port, method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}",
        data=data,
        method=method,
        headers={"Content-Type": "application/json"},
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


def test_presets_listing(server_port):
    code, doc = request(server_port, "GET", "/presets")
    assert code == 200
    assert doc["presets"] == PRESET_NAMES


def test_create_get_and_state_shape(server_port):
    code, st = request(server_port, "POST", "/sessions", {"preset": "markov"})
    assert code == 200
    assert st["n"] == 3 and st["m"] == 3
    assert st["quiver"]["arrows"] == [[1, 2, 2], [2, 3, 2], [3, 1, 2]]
    code, st2 = request(server_port, "GET", f"/sessions/{st['id']}")
    assert code == 200 and st2["cluster"] == st["cluster"]


def test_mutate_involutive(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "somos4"})
    sid = st["id"]
    _, a = request(server_port, "POST", f"/sessions/{sid}/mutate", {"k": 2})
    _, b = request(server_port, "POST", f"/sessions/{sid}/mutate", {"k": 2})
    assert b["cluster"] == st["cluster"]
    assert b["word"] == []


def test_a11_periodicity_through_service(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "a11"})
    sid = st["id"]
    start = st["cluster"]
    for k in (1, 2, 1, 2, 1):
        _, st = request(server_port, "POST", f"/sessions/{sid}/mutate", {"k": k})
    assert sorted(st["cluster"]) == sorted(start)


def test_undo_redo_bit_exact(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "a12"})
    sid = st["id"]
    _, s1 = request(server_port, "POST", f"/sessions/{sid}/mutate", {"k": 1})
    _, s2 = request(server_port, "POST", f"/sessions/{sid}/mutate", {"k": 2})
    _, u1 = request(server_port, "POST", f"/sessions/{sid}/undo")
    assert u1["cluster"] == s1["cluster"] and u1["word"] == s1["word"]
    _, r1 = request(server_port, "POST", f"/sessions/{sid}/redo")
    assert r1["cluster"] == s2["cluster"] and r1["word"] == s2["word"]
    assert r1["undoDepth"] == 2 and r1["redoDepth"] == 0


def test_replay_matches_engine(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "a12"})
    sid = st["id"]
    for k in (1, 2, 1, 1, 2):
        _, st = request(server_port, "POST", f"/sessions/{sid}/mutate", {"k": k})
    replay = seed_at(preset_seed("a12").matrix, st["word"])
    assert list(replay.cluster_strings()) == st["cluster"]


def test_graph_neighborhood(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "a12"})
    code, g = request(
        server_port, "GET", f"/sessions/{st['id']}/graph?maxNodes=50&maxDepth=8"
    )
    assert code == 200
    assert len(g["nodes"]) == 6
    assert g["current"] == 0
    assert g["truncated"] is False


def test_truncated_graph_flagged_in_body(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "gr2-8"})
    code, g = request(
        server_port, "GET", f"/sessions/{st['id']}/graph?maxNodes=10&maxDepth=3"
    )
    assert code == 200
    assert g["truncated"] is True


def test_parameterized_presets(server_port):
    code, st = request(server_port, "POST", "/sessions", {"preset": "gr2-6"})
    assert code == 200 and st["n"] == 3 and st["m"] == 9
    code, st = request(server_port, "POST", "/sessions", {"preset": "grid-2-3"})
    assert code == 200 and st["n"] == 6


def test_sl3_preset_graph_has_fifty_seeds(server_port):
    _, st = request(server_port, "POST", "/sessions", {"preset": "sl3-double-wiring"})
    code, g = request(
        server_port, "GET", f"/sessions/{st['id']}/graph?maxNodes=200&maxDepth=40"
    )
    assert len(g["nodes"]) == 50 and g["truncated"] is False


def test_custom_seed_roundtrip(server_port):
    doc = {
        "m": 3,
        "n": 2,
        "matrix": [[0, 1], [-1, 0], [1, 0]],
        "cluster": ["1 * x1^1*x2^0*x3^0", "1 * x1^0*x2^1*x3^0"],
        "word": [],
    }
    code, st = request(server_port, "POST", "/sessions", {"seed": doc})
    assert code == 200
    assert st["coefficients"] == ["x3^1", "1"]


def test_errors(server_port):
    code, _ = request(server_port, "GET", "/sessions/doesnotexist")
    assert code == 404
    _, st = request(server_port, "POST", "/sessions", {"preset": "a11"})
    code, _ = request(server_port, "POST", f"/sessions/{st['id']}/mutate", {"k": 99})
    assert code == 422
    code, _ = request(server_port, "POST", "/sessions", {"preset": "unknown-preset"})
    assert code == 422
    code, _ = request(server_port, "POST", f"/sessions/{st['id']}/undo")
    assert code == 422  # nothing to undo


def test_malformed_seed_rejected(server_port):
    code, body = request(server_port, "POST", "/sessions", {"seed": {"m": 2}})
    assert code == 422
    code, body = request(
        server_port,
        "POST",
        "/sessions",
        {"seed": {"m": 2, "n": 2, "matrix": [[0, 1], [1, 0]], "cluster": [], "word": []}},
    )
    assert code == 422
