"""Record service responses as fixtures for the frontend parity tests.

Run from the repository root:  python3 scripts/record_ui_fixtures.py
The frontend tests compare rendered strings against these bytes, so they
must be regenerated whenever the bundled model or the JSON emitter changes.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fastapi.testclient import TestClient

from curriculum_bn.curriculum import build_default_model
from curriculum_bn.service import create_app

OUT = pathlib.Path(__file__).resolve().parents[1] / "frontend" / "tests" / "fixtures"

CASES = [
    ("model.json", "GET", "/api/model", None),
    ("infer_ag.json", "POST", "/api/infer", {"evidence": {}, "query": "AG"}),
    ("infer_recl.json", "POST", "/api/infer", {"evidence": {}, "query": "RecL"}),
    ("impact_recl.json", "POST", "/api/impact",
     {"target": {"variable": "RecL", "state": "approved"}, "evidence": {}}),
    ("impact_satisfaction.json", "POST", "/api/impact",
     {"target": {"variable": "Satisfaction", "state": "high"}, "evidence": {}}),
    ("plan_empty.json", "POST", "/api/plan", {"profile": {}}),
    ("plan_strong.json", "POST", "/api/plan",
     {"profile": {"AG": "A", "S": "active", "RBG": "yes"}}),
    ("plan_profile_b.json", "POST", "/api/plan",
     {"profile": {"AG": "B", "S": "active", "RBG": "yes"}}),
    ("whatif_courses.json", "POST", "/api/whatif",
     {"profile": {"AG": "B", "S": "active", "RBG": "yes"},
      "scenarios": [{"NumC": "few"}, {"NumC": "normal"}, {"NumC": "many"}, {}]}),
    ("whatif_empty_profile.json", "POST", "/api/whatif",
     {"profile": {}, "scenarios": [{}]}),
]

# ten representative profiles for the UI parity suite
PROFILES = [
    {},
    {"AG": "A"},
    {"AG": "B", "S": "active"},
    {"AG": "C", "S": "inactive", "A": "low"},
    {"AG": "A", "RBG": "yes", "Pub": "yes"},
    {"AG": "B", "RBG": "no", "NumC": "many"},
    {"S": "active", "A": "high", "NumC": "few"},
    {"AG": "C", "RBG": "yes", "Pub": "no", "A": "medium"},
    {"AG": "A", "S": "active", "A": "high", "NumC": "normal", "RBG": "yes", "Pub": "yes"},
    {"AG": "C", "S": "inactive", "A": "low", "NumC": "many", "RBG": "no", "Pub": "no"},
]

for i, profile in enumerate(PROFILES, start=1):
    CASES.append((f"profile_{i:02d}.json", "POST", "/api/whatif",
                  {"profile": profile,
                   "scenarios": [{}, {"NumC": "few"}, {"NumC": "many", "A": "high"}]}))


def main():
    client = TestClient(create_app(build_default_model()))
    OUT.mkdir(parents=True, exist_ok=True)
    for name, method, path, body in CASES:
        if method == "GET":
            response = client.get(path)
        else:
            response = client.post(path, content=json.dumps(body))
        assert response.status_code == 200, (name, response.status_code, response.text)
        (OUT / name).write_text(response.text)
        print(f"{name}: {len(response.text)} bytes")


if __name__ == "__main__":
    main()
