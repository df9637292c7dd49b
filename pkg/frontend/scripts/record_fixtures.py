#!/usr/bin/env python3
"""Record REST responses from the fixture graph into tests/fixtures/.

Run from the repository root (needs the scholargraph package and its test
data importable):

    python3 frontend/scripts/record_fixtures.py

Each fixture file stores {"url", "status", "body"} exactly as the service
responded; the UI tests replay them through a stub fetch, so every value a
card shows is asserted against a real payload.
"""

import json
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(REPO_ROOT))

from fastapi.testclient import TestClient  # noqa: E402

from scholargraph.graph import build_from_files  # noqa: E402
from scholargraph.service import create_app  # noqa: E402
from tests.conftest import MINI_CORPUS, MINI_FIELDS, MINI_VENUES  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

REQUESTS = {
    "nlq_count_ann": "/api/nlq?q=How+many+papers+are+published+by+Ann+Smith",
    "nlq_list_bo": "/api/nlq?q=List+the+papers+published+by+Bo+Li",
    "nlq_unsupported_treebank": "/api/nlq?q=treebank",
    "nlq_unsupported_chris": "/api/nlq?q=Chris",
    "nlq_unsupported_naacl": "/api/nlq?q=NAACL",
    "search_treebank": "/api/search?q=treebank",
    "search_chris": "/api/search?q=Chris",
    "search_naacl": "/api/search?q=NAACL",
    "search_nothing": "/api/search?q=zxqv",
    "paper_P1": "/api/paper/P1",
    "paper_P4": "/api/paper/P4",
    "paper_P6": "/api/paper/P6",
    "paper_missing": "/api/paper/P99",
    "author_a1": "/api/author/a1",
    "author_a3": "/api/author/a3",
    "venue_ACL": "/api/venue/ACL",
    "venue_NAACL": "/api/venue/NAACL",
}


def main() -> None:
    g, skipped = build_from_files(MINI_CORPUS, MINI_VENUES, MINI_FIELDS)
    assert skipped == 0, "fixture corpus must ingest cleanly"
    FIXTURES.mkdir(parents=True, exist_ok=True)
    with TestClient(create_app(g)) as client:
        for name, url in REQUESTS.items():
            response = client.get(url)
            record = {"url": url, "status": response.status_code, "body": response.json()}
            path = FIXTURES / f"{name}.json"
            path.write_text(
                json.dumps(record, indent=2, ensure_ascii=False, sort_keys=True) + "\n",
                encoding="utf-8",
            )
            print(f"{name}: {response.status_code} {url}")


if __name__ == "__main__":
    main()
