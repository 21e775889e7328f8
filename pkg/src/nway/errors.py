"""Exception types shared across the package."""

from __future__ import annotations


class NwayError(Exception):
    """Base class for all errors raised by this package."""


class EncodingError(NwayError, ValueError):
    """Input text is not valid UTF-8."""

    def __init__(self, byte_offset: int, detail: str = "invalid UTF-8 input"):
        self.byte_offset = byte_offset
        super().__init__(f"{detail} at byte offset {byte_offset}")


class SolutionInputError(NwayError):
    """A solution file could not be read or decoded."""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")


class ProviderError(NwayError):
    """The completion provider returned an error response."""

    def __init__(self, message: str, status: int | None = None, body_excerpt: str = ""):
        self.status = status
        self.body_excerpt = body_excerpt
        detail = message
        if status is not None:
            detail = f"{message} (HTTP {status})"
        if body_excerpt:
            detail = f"{detail}: {body_excerpt}"
        super().__init__(detail)


class ProviderUnreachableError(ProviderError):
    """No response could be obtained from the provider after all retries."""

    def __init__(self, message: str):
        super().__init__(message, status=None)


class PartialResultError(ProviderError):
    """The provider answered, but fewer usable completions than requested."""

    def __init__(self, expected: int, missing: list[int]):
        self.expected = expected
        self.missing = list(missing)
        got = expected - len(self.missing)
        super().__init__(
            f"only {got} of {expected} completions were usable "
            f"(missing sample indices: {', '.join(map(str, self.missing))})"
        )
