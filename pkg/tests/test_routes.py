import json

import pytest
from fastapi.testclient import TestClient

from app.main import create_application

PREFIX = "/api/v1"


@pytest.fixture(scope="module")
def client():
    with TestClient(create_application()) as test_client:
        yield test_client


def load(fixture_path, name):
    return json.loads(fixture_path(name).read_text())


def test_health(client):
    assert client.get("/health").json() == {"status": "healthy"}
    assert "report_schema_version" in client.get("/").json()


def test_eval_route(client):
    response = client.post(f"{PREFIX}/ltl/eval", json={"formula": "p & X !p", "word": "{p};{}"})
    assert response.status_code == 200
    body = response.json()
    assert body["value"] is True
    assert body["variables"] == ["p"]


def test_eval_route_reports_syntax_error(client):
    response = client.post(f"{PREFIX}/ltl/eval", json={"formula": "p U", "word": "{p}"})
    assert response.status_code == 400
    assert "detail" in response.json()


def test_eval_route_position_out_of_range(client):
    response = client.post(f"{PREFIX}/ltl/eval", json={"formula": "p", "word": "{p}", "position": 3})
    assert response.status_code == 400


def test_ltl_nfa_route(client):
    response = client.post(f"{PREFIX}/ltl/nfa", json={"formula": "X true"})
    assert response.status_code == 200
    document = response.json()
    assert document["kind"] == "nfa"
    assert document["alphabet"] == ["{}"]


def test_minimize_route(client, fixture_path):
    payload = {"automaton": load(fixture_path, "abab_plus.json")}
    response = client.post(f"{PREFIX}/automata/minimize", json=payload)
    assert response.status_code == 200
    document = response.json()
    assert document["kind"] == "dfa"
    assert document["states"] == 6


def test_product_route_rejects_mismatched_alphabets(client, fixture_path):
    left = load(fixture_path, "abab_plus.json")
    right = {"kind": "dfa", "alphabet": ["a"], "states": 1, "initial": [0], "transitions": [[0, "a", 0]]}
    response = client.post(f"{PREFIX}/automata/product", json={"left": left, "right": right})
    assert response.status_code == 400


def test_accepts_route(client, fixture_path):
    payload = {"automaton": load(fixture_path, "abab_plus.json"), "word": list("abab")}
    body = client.post(f"{PREFIX}/automata/accepts", json=payload).json()
    assert body["accepted"] is True
    assert body["shortest_word"] == list("abab")


def test_invalid_document_is_unprocessable(client):
    document = {"kind": "dfa", "alphabet": ["a"], "states": 1, "initial": [0, 0], "transitions": []}
    response = client.post(f"{PREFIX}/automata/determinize", json={"automaton": document})
    assert response.status_code == 422


def test_semigroup_route(client, fixture_path):
    payload = {"automaton": load(fixture_path, "abab_plus.json"), "syntactic": False, "include_table": True}
    body = client.post(f"{PREFIX}/semigroup", json=payload).json()
    assert body["size"] == 9
    assert body["omega"] == 2
    assert body["aperiodic"] is False
    assert body["cayley_csv"].startswith("·,δ_a,δ_b")


def test_semigroup_state_limit_is_too_large(client):
    payload = {"regex": "(abab)+", "alphabet": ["a", "b"], "max_states": 3}
    response = client.post(f"{PREFIX}/semigroup", json=payload)
    assert response.status_code == 413


def test_separable_route(client, fixture_path):
    payload = {
        "left": {"automaton": load(fixture_path, "two_block_plus.json")},
        "right": {"automaton": load(fixture_path, "two_block_tail.json")},
    }
    body = client.post(f"{PREFIX}/separation/separable", json=payload).json()
    assert body["separable"] is False
    assert body["witness"] is not None
    assert body["complete"] is False
    payload["exhaustive"] = True
    body = client.post(f"{PREFIX}/separation/separable", json=payload).json()
    assert body["complete"] is True
    assert body["maximal_members"]


def test_separable_route_with_regexes(client):
    payload = {
        "left": {"regex": "(abab)+", "alphabet": ["a", "b"]},
        "right": {"regex": "(baba)+", "alphabet": ["a", "b"]},
    }
    body = client.post(f"{PREFIX}/separation/separable", json=payload).json()
    assert body["separable"] is True


def test_language_input_needs_one_source(client):
    payload = {"regex": "(ab)+", "alphabet": ["a", "b"], "automaton": None}
    assert client.post(f"{PREFIX}/separation/definable", json=payload).status_code == 200
    assert client.post(f"{PREFIX}/separation/definable", json={"regex": "(ab)+"}).status_code == 422
    assert client.post(f"{PREFIX}/separation/definable", json={}).status_code == 422


def test_definable_route(client):
    body = client.post(f"{PREFIX}/separation/definable", json={"regex": "(abab)+", "alphabet": ["a", "b"]}).json()
    assert body["definable"] is False
    assert body["counter"]["cycle_length"] == 2
    assert body["separation"]["separable"] is False


def test_iep_route(client):
    payload = {
        "premise": "p & G((p & X true) <-> X !p) & F(!p & !X true)",
        "conclusion": "q & G((q & X true) <-> X !q) -> F(!q & !X true)",
    }
    body = client.post(f"{PREFIX}/iep", json=payload).json()
    assert body["exists"] is False
    assert body["entails"] is True
    assert body["shared_variables"] == []
    assert body["schema_version"]


def test_iep_route_countermodel(client):
    body = client.post(f"{PREFIX}/iep", json={"premise": "F p", "conclusion": "p"}).json()
    assert body["entails"] is False
    assert body["countermodel"] == "{};{p}"
