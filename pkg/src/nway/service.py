"""HTTP API over the comparison engine, plus static hosting for the UI.

The compare endpoint accepts either raw solution texts (compared locally,
no network) or a prompt (solutions fetched from the configured provider
first). Request bodies are validated by hand so the status codes stay
exact: 400 for malformed requests, 422 for an empty solution list, 502 when
the provider fails.
"""

from __future__ import annotations

import dataclasses
import os
from typing import Any

from fastapi import FastAPI, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .errors import ProviderError
from .provider import ProviderConfig, generate
from .rendering import build_comparison
from .scoring import ColorScale, Hue
from .solutions import solution_set_from_texts
from .units import UnitMode

__all__ = ["create_app"]

MAX_SAMPLES = 32

# Request fields a caller may use to adjust generation. Connection secrets
# (base URL, API key) stay server-side on purpose.
_OVERRIDE_FIELDS = ("samples", "model", "temperature", "max_tokens")


class _BadRequest(Exception):
    def __init__(self, detail: str, status: int = 400):
        self.detail = detail
        self.status = status
        super().__init__(detail)


def create_app(
    provider: ProviderConfig | None = None,
    static_dir: str | None = None,
    dev_cors: bool = False,
) -> FastAPI:
    """Build the application; pass a provider config to enable prompts."""
    app = FastAPI(title="solution comparison service", version=__version__)

    if dev_cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.get("/api/health")
    async def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.post("/api/compare")
    async def compare(request: Request) -> JSONResponse:
        try:
            payload = await _parse_json_object(request)
            document = await _compare(payload, provider)
        except _BadRequest as exc:
            return JSONResponse({"detail": exc.detail}, status_code=exc.status)
        except ProviderError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=502)
        return JSONResponse(document)

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


async def _parse_json_object(request: Request) -> dict[str, Any]:
    try:
        payload = await request.json()
    except Exception as exc:
        raise _BadRequest("request body is not valid JSON") from exc
    if not isinstance(payload, dict):
        raise _BadRequest("request body must be a JSON object")
    return payload


async def _compare(
    payload: dict[str, Any], provider: ProviderConfig | None
) -> dict[str, Any]:
    prompt = payload.get("prompt")
    raw_solutions = payload.get("solutions")
    if (prompt is None) == (raw_solutions is None):
        raise _BadRequest(
            "provide exactly one of 'prompt' or 'solutions'"
        )

    mode = _parse_choice(payload, "unit", UnitMode, UnitMode.CHAR)
    hue = _parse_choice(payload, "hue", Hue, Hue.BLUE)
    scale = ColorScale(hue=hue)

    if raw_solutions is not None:
        if not isinstance(raw_solutions, list) or not all(
            isinstance(item, str) for item in raw_solutions
        ):
            raise _BadRequest("'solutions' must be a list of strings")
        if not raw_solutions:
            raise _BadRequest("'solutions' must not be empty", status=422)
        solution_set = solution_set_from_texts(raw_solutions)
    else:
        if not isinstance(prompt, str) or not prompt.strip():
            raise _BadRequest("'prompt' must be a non-empty string")
        config = _request_config(payload, provider)
        solution_set = await run_in_threadpool(generate, prompt, config)

    document = build_comparison(solution_set, mode=mode, scale=scale)
    return document.to_dict()


def _parse_choice(payload, key, enum_type, default):
    value = payload.get(key)
    if value is None:
        return default
    try:
        return enum_type(value)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_type)
        raise _BadRequest(f"'{key}' must be one of: {allowed}") from None


def _request_config(
    payload: dict[str, Any], provider: ProviderConfig | None
) -> ProviderConfig:
    if provider is None:
        raise ProviderError(
            "no completion provider is configured on this server; "
            "submit raw solutions instead or restart with provider settings"
        )
    overrides: dict[str, Any] = {}
    for key in _OVERRIDE_FIELDS:
        if payload.get(key) is not None:
            overrides[key] = payload[key]
    if "samples" in overrides:
        samples = overrides["samples"]
        if not isinstance(samples, int) or isinstance(samples, bool):
            raise _BadRequest("'samples' must be an integer")
        if not 1 <= samples <= MAX_SAMPLES:
            raise _BadRequest(f"'samples' must be between 1 and {MAX_SAMPLES}")
    if "model" in overrides and not isinstance(overrides["model"], str):
        raise _BadRequest("'model' must be a string")
    if "temperature" in overrides:
        temperature = overrides["temperature"]
        if isinstance(temperature, bool) or not isinstance(
            temperature, (int, float)
        ):
            raise _BadRequest("'temperature' must be a number")
        overrides["temperature"] = float(temperature)
    if "max_tokens" in overrides:
        max_tokens = overrides["max_tokens"]
        if not isinstance(max_tokens, int) or isinstance(max_tokens, bool):
            raise _BadRequest("'max_tokens' must be an integer")
    try:
        return dataclasses.replace(provider, **overrides)
    except ValueError as exc:
        raise _BadRequest(str(exc)) from None
