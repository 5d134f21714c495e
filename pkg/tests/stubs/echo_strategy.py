#!/usr/bin/env python3
"""Test stub: answers every request with one fixed candidate."""
import json
import sys

for line in sys.stdin:
    req = json.loads(line)
    resp = {
        "id": req["id"],
        "candidates": [{"text": "stubCompletion", "scores": {"score": 4.5}}],
    }
    print(json.dumps(resp), flush=True)
