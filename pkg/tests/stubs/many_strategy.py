#!/usr/bin/env python3
"""Test stub: returns six candidates regardless of max_candidates."""
import json
import sys

for line in sys.stdin:
    req = json.loads(line)
    resp = {
        "id": req["id"],
        "candidates": [
            {"text": f"option{i}", "scores": {"score": float(10 - i)}} for i in range(6)
        ],
    }
    print(json.dumps(resp), flush=True)
