"""Build the editor's test fixtures from the real check service.

The editor tests drive the add-line / edit / check cycle against canned
responses. Those responses are generated here by the actual engine, and
the map is keyed by the exact request body the editor serializes, so any
drift between the two sides turns into a loud missing-fixture failure
instead of a silently wrong test.

Run from this directory or the repository root:

    python3 scripts/generate_fixtures.py
"""

import json
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from gentzen.prooftree import (
    AddPremise,
    SetFormula,
    SetRule,
    apply_edit,
    encode_tree,
    goal_only,
)
from gentzen.server import create_app

REPO_ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(REPO_ROOT))

from tests.sessions import canonical_session  # noqa: E402

from gentzen.eventlog import export_log, replay  # noqa: E402
from gentzen.exercises import bundled_catalog  # noqa: E402

GOAL = "(forall x . (A(x) /\\ B(x))) -> exists x . B(x)"

# The exact edit script the editor test performs, with a check after
# every group: first a wrong rule on the goal line, then the fix, then
# the rest of the canonical derivation.
EDIT_GROUPS = [
    [],
    [
        AddPremise(()),
        SetRule((), "\\/I"),
        SetFormula((0,), "exists x . B(x)"),
    ],
    [SetRule((), "->I a")],
    [
        AddPremise((0,)),
        SetRule((0,), "existsI"),
        SetFormula((0, 0), "B(c)"),
        AddPremise((0, 0)),
        SetRule((0, 0), "/\\E"),
        SetFormula((0, 0, 0), "A(c) /\\ B(c)"),
        AddPremise((0, 0, 0)),
        SetRule((0, 0, 0), "forallE"),
        SetFormula((0, 0, 0, 0), "forall x . (A(x) /\\ B(x))"),
        SetRule((0, 0, 0, 0), "a"),
    ],
]


def main() -> None:
    client = TestClient(create_app())
    checks = {}
    tree = goal_only(GOAL)
    for group in EDIT_GROUPS:
        for edit in group:
            tree = apply_edit(tree, edit)
        body = {"exercise_id": "6-d", "trees": [encode_tree(tree)]}
        key = json.dumps(body, separators=(",", ":"), ensure_ascii=False)
        response = client.post(
            "/api/check",
            content=key.encode("utf-8"),
            headers={"Content-Type": "application/json"},
        )
        assert response.status_code == 200, response.text
        checks[key] = response.json()

    session = canonical_session()
    replayed = replay(session, bundled_catalog())[("6-d", 0)]
    fixtures = {
        "catalog": client.get("/api/exercises").json(),
        "checks": checks,
        "canonicalSession": {
            "jsonl": export_log(session),
            "tree": encode_tree(replayed),
        },
    }
    out = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "api.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(fixtures, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    outcomes = [checks[k]["outcomes"] for k in checks]
    print(f"wrote {out} ({len(checks)} check fixtures, outcomes {outcomes})")


if __name__ == "__main__":
    main()
