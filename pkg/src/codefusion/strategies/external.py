"""Plug-in strategies served by a child process.

Wire protocol: newline-delimited JSON over the child's stdin/stdout.
Request:  {"id": <int>, "context": <string>, "max_candidates": <int>}
Response: {"id": <int>, "candidates": [{"text": <string>,
           "scores": {<dim>: <float>}}]}
One response per request, matched by id, 2000 ms timeout.  Score
dimensions are namespaced with the strategy id on our side.
"""

from __future__ import annotations

import json
import logging
import queue
import subprocess
import threading
import time
from typing import List, Optional, Sequence

from .base import Candidate, QueryContext, Session, Strategy

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT_S = 2.0


class ExternalStrategy(Strategy):
    def __init__(
        self,
        strategy_id: str,
        command: Sequence[str],
        cap: int = 5,
        timeout_s: float = DEFAULT_TIMEOUT_S,
    ):
        self.strategy_id = strategy_id
        self.primary_dimension = f"{strategy_id}_score"
        self.dimensions = (f"{strategy_id}_score",)
        self.cap = cap
        self.timeout_s = timeout_s
        self._next_id = 0
        self._proc = subprocess.Popen(
            list(command),
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            text=True,
            bufsize=1,
        )
        self._lines: "queue.Queue[str]" = queue.Queue()
        self._reader = threading.Thread(target=self._pump, daemon=True)
        self._reader.start()

    def _pump(self) -> None:
        assert self._proc.stdout is not None
        for line in self._proc.stdout:
            self._lines.put(line)

    def query(self, ctx: QueryContext, session: Session) -> List[Candidate]:
        self._next_id += 1
        request_id = self._next_id
        payload = json.dumps(
            {"id": request_id, "context": ctx.prefix, "max_candidates": self.cap}
        )
        try:
            assert self._proc.stdin is not None
            self._proc.stdin.write(payload + "\n")
            self._proc.stdin.flush()
        except (OSError, ValueError) as exc:
            log.warning("external strategy %s: write failed: %s", self.strategy_id, exc)
            return []
        response = self._await_response(request_id)
        if response is None:
            return []
        return self._parse(response)

    def _await_response(self, request_id: int) -> Optional[dict]:
        deadline = time.monotonic() + self.timeout_s
        while True:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                log.warning("external strategy %s: timeout", self.strategy_id)
                return None
            try:
                line = self._lines.get(timeout=remaining)
            except queue.Empty:
                log.warning("external strategy %s: timeout", self.strategy_id)
                return None
            try:
                message = json.loads(line)
            except json.JSONDecodeError as exc:
                log.warning(
                    "external strategy %s: protocol error: %s", self.strategy_id, exc
                )
                return None
            if message.get("id") == request_id:
                return message
            # Stale response from an earlier timed-out request: skip it.

    def _parse(self, message: dict) -> List[Candidate]:
        out: List[Candidate] = []
        try:
            for item in message["candidates"][: self.cap]:
                text = item["text"]
                if not text:
                    continue
                scores = {
                    f"{self.strategy_id}_{dim}": float(value)
                    for dim, value in item.get("scores", {}).items()
                }
                out.append(
                    Candidate(text=text, scores=scores, strategies=(self.strategy_id,))
                )
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("external strategy %s: protocol error: %s", self.strategy_id, exc)
            return []
        return out

    def close(self) -> None:
        if self._proc.poll() is None:
            try:
                if self._proc.stdin is not None:
                    self._proc.stdin.close()
                self._proc.terminate()
                self._proc.wait(timeout=2)
            except (OSError, subprocess.TimeoutExpired):
                self._proc.kill()
