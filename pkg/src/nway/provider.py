"""HTTP client that gathers N independent completions for one prompt.

Works against any OpenAI-compatible endpoint: the base URL is the API root
(``https://host/v1``) and the chat-completions route is appended, unless the
base URL already names a completions route, in which case it is used as-is
and the response shape is inferred from the path. Each sample is requested
independently so providers without server-side multi-sampling work too.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

import requests

from .errors import (
    PartialResultError,
    ProviderError,
    ProviderUnreachableError,
)
from .solutions import Solution, SolutionSet

__all__ = ["ProviderConfig", "generate", "resolve_endpoint"]

# Identifies which of the N samples a request belongs to; harmless to real
# providers, and lets a replaying mock serve concurrent requests that have
# byte-identical bodies.
SAMPLE_HEADER = "X-Nway-Sample"

_EXCERPT_LIMIT = 200


@dataclass(frozen=True)
class ProviderConfig:
    """Connection and sampling settings for one generate call."""

    base_url: str
    model: str
    api_key: str = field(default="", repr=False)
    temperature: float = 0.7
    max_tokens: int = 512
    samples: int = 5
    timeout: float = 30.0
    retries: int = 2
    max_parallel: int = 4

    def __post_init__(self) -> None:
        if not self.base_url:
            raise ValueError("base_url is required")
        if not self.model:
            raise ValueError("model is required")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.temperature < 0:
            raise ValueError("temperature must not be negative")
        if self.samples > 1 and self.temperature == 0:
            raise ValueError(
                "temperature must be positive when sampling more than once; "
                "deterministic decoding would return one solution N times"
            )
        if self.max_tokens < 1:
            raise ValueError("max_tokens must be at least 1")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.retries < 0:
            raise ValueError("retries must not be negative")
        if self.max_parallel < 1:
            raise ValueError("max_parallel must be at least 1")


def resolve_endpoint(base_url: str) -> tuple[str, str]:
    """Completion URL and response flavor ("chat" or "legacy") for a base URL."""
    trimmed = base_url.rstrip("/")
    if trimmed.endswith("/chat/completions"):
        return trimmed, "chat"
    if trimmed.endswith("/completions"):
        return trimmed, "legacy"
    return f"{trimmed}/chat/completions", "chat"


def generate(prompt: str, config: ProviderConfig) -> SolutionSet:
    """Fetch config.samples completions and return them in sample order.

    Transport failures and 5xx responses are retried up to config.retries
    extra attempts per sample; 4xx responses fail that sample immediately.
    If only part of the samples succeed, the shortfall is reported rather
    than a shrunken set.
    """
    url, flavor = resolve_endpoint(config.base_url)
    indices = range(config.samples)
    workers = min(config.samples, config.max_parallel)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_fetch_sample, prompt, config, url, flavor, i)
            for i in indices
        ]
        outcomes: list[str | None] = []
        errors: list[ProviderError | None] = []
        for future in futures:
            try:
                outcomes.append(future.result())
                errors.append(None)
            except ProviderError as exc:
                outcomes.append(None)
                errors.append(exc)

    missing = [i for i in indices if outcomes[i] is None]
    if missing:
        if len(missing) == config.samples:
            raise errors[missing[0]]
        raise PartialResultError(expected=config.samples, missing=missing)

    solutions = tuple(
        Solution(
            index=i,
            text=outcomes[i],
            params={
                "model": config.model,
                "temperature": config.temperature,
                "max_tokens": config.max_tokens,
                "sample": i,
            },
        )
        for i in indices
    )
    return SolutionSet(
        solutions=solutions,
        prompt=prompt,
        provider={
            "base_url": config.base_url,
            "model": config.model,
            "endpoint": flavor,
        },
    )


def _fetch_sample(
    prompt: str, config: ProviderConfig, url: str, flavor: str, index: int
) -> str:
    if flavor == "chat":
        body: dict[str, object] = {
            "model": config.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": config.temperature,
            "max_tokens": config.max_tokens,
        }
    else:
        body = {
            "model": config.model,
            "prompt": prompt,
            "temperature": config.temperature,
            "max_tokens": config.max_tokens,
        }
    headers = {SAMPLE_HEADER: str(index)}
    if config.api_key:
        headers["Authorization"] = f"Bearer {config.api_key}"

    attempts = config.retries + 1
    last_error: ProviderError | None = None
    for _ in range(attempts):
        try:
            response = requests.post(
                url, json=body, headers=headers, timeout=config.timeout
            )
        except requests.RequestException as exc:
            last_error = ProviderUnreachableError(
                f"could not reach provider at {url}: {_redact(str(exc), config)}"
            )
            continue
        if response.status_code >= 500:
            last_error = ProviderError(
                "provider request failed",
                status=response.status_code,
                body_excerpt=_excerpt(response.text, config),
            )
            continue
        if response.status_code >= 300:
            raise ProviderError(
                "provider rejected the request",
                status=response.status_code,
                body_excerpt=_excerpt(response.text, config),
            )
        return _extract_text(response, flavor, config)
    assert last_error is not None
    raise last_error


def _extract_text(
    response: requests.Response, flavor: str, config: ProviderConfig
) -> str:
    try:
        data = response.json()
    except (json.JSONDecodeError, ValueError) as exc:
        raise ProviderError(
            "provider returned a non-JSON body",
            status=response.status_code,
            body_excerpt=_excerpt(response.text, config),
        ) from exc
    try:
        choice = data["choices"][0]
        text = choice["message"]["content"] if flavor == "chat" else choice["text"]
    except (KeyError, IndexError, TypeError) as exc:
        raise ProviderError(
            "provider response is missing the completion text",
            status=response.status_code,
            body_excerpt=_excerpt(response.text, config),
        ) from exc
    if not isinstance(text, str):
        raise ProviderError(
            "provider completion text is not a string",
            status=response.status_code,
        )
    return _strip_blank_edges(text)


def _strip_blank_edges(text: str) -> str:
    """Drop whitespace-only lines from both ends, keeping inner bytes as-is."""
    lines = text.splitlines(keepends=True)
    start = 0
    end = len(lines)
    while start < end and not lines[start].strip():
        start += 1
    while end > start and not lines[end - 1].strip():
        end -= 1
    return "".join(lines[start:end])


def _excerpt(body: str, config: ProviderConfig) -> str:
    return _redact(body[:_EXCERPT_LIMIT], config)


def _redact(text: str, config: ProviderConfig) -> str:
    if config.api_key:
        return text.replace(config.api_key, "[redacted]")
    return text
