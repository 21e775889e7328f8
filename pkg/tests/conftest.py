"""Shared fixtures: paths into the fixture corpus and a replaying mock
provider that serves recorded completions over real HTTP."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
HELLO_DIR = FIXTURES / "hello_world"
GETMAX_DIR = FIXTURES / "provider" / "getmax"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

SAMPLE_HEADER = "X-Nway-Sample"


def hello_paths() -> list[str]:
    return [str(HELLO_DIR / f"solution_{k}.py") for k in range(1, 6)]


def getmax_fixture(sample: int) -> dict:
    with open(GETMAX_DIR / f"sample_{sample}.json", encoding="utf-8") as fh:
        return json.load(fh)


def getmax_expected_texts() -> list[str]:
    """The five recorded completions with edge blank lines removed, i.e.
    exactly what generate() is expected to hand back."""
    texts = []
    for k in range(5):
        content = getmax_fixture(k)["response"]["body"]["choices"][0][
            "message"
        ]["content"]
        lines = content.splitlines(keepends=True)
        while lines and not lines[0].strip():
            lines.pop(0)
        while lines and not lines[-1].strip():
            lines.pop()
        texts.append("".join(lines))
    return texts


class MockProvider:
    """Replays the recorded samples; can also misbehave on demand.

    behavior:
      "replay"      -- serve the recorded completion for the sample header
      "fail500"     -- always respond 500
      "reject401"   -- always respond 401
      "fail_sample" -- 500 for samples in fail_samples, replay otherwise
    """

    def __init__(self) -> None:
        self.behavior = "replay"
        self.fail_samples: set[int] = set()
        self.lock = threading.Lock()
        self.requests: list[dict] = []
        provider = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args) -> None:
                pass

            def do_POST(self) -> None:
                length = int(self.headers.get("Content-Length", "0"))
                body = json.loads(self.rfile.read(length) or b"{}")
                sample = int(self.headers.get(SAMPLE_HEADER, "0"))
                with provider.lock:
                    provider.requests.append(
                        {
                            "path": self.path,
                            "sample": sample,
                            "body": body,
                            "authorization": self.headers.get("Authorization"),
                        }
                    )
                    behavior = provider.behavior
                    failing = sample in provider.fail_samples
                if behavior == "fail500" or (
                    behavior == "fail_sample" and failing
                ):
                    self._reply(
                        500, {"error": {"message": "internal server error"}}
                    )
                    return
                if behavior == "reject401":
                    self._reply(401, {"error": {"message": "invalid key"}})
                    return
                payload = getmax_fixture(sample)["response"]
                reply = payload["body"]
                if self.path.endswith("/completions") and not self.path.endswith(
                    "/chat/completions"
                ):
                    content = reply["choices"][0]["message"]["content"]
                    reply = {
                        "id": reply["id"],
                        "object": "text_completion",
                        "model": reply["model"],
                        "choices": [
                            {"index": 0, "text": content, "finish_reason": "stop"}
                        ],
                    }
                self._reply(payload["status"], reply)

            def _reply(self, status: int, payload: dict) -> None:
                data = json.dumps(payload).encode("utf-8")
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(
            target=self.server.serve_forever, daemon=True
        )
        self.thread.start()

    @property
    def base_url(self) -> str:
        return f"http://127.0.0.1:{self.server.server_address[1]}/v1"

    def attempts(self, sample: int | None = None) -> int:
        with self.lock:
            if sample is None:
                return len(self.requests)
            return sum(1 for r in self.requests if r["sample"] == sample)

    def reset(self) -> None:
        with self.lock:
            self.requests.clear()
        self.behavior = "replay"
        self.fail_samples = set()

    def close(self) -> None:
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture(scope="session")
def mock_provider_server():
    provider = MockProvider()
    yield provider
    provider.close()


@pytest.fixture
def mock_provider(mock_provider_server):
    mock_provider_server.reset()
    return mock_provider_server
