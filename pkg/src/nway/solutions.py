"""Candidate solutions and the sets they are compared in."""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import SolutionInputError

__all__ = ["Solution", "SolutionSet", "load_solutions", "solution_set_from_texts"]


@dataclass(frozen=True)
class Solution:
    """One candidate answer: its text plus where it came from.

    Exactly one origin is meaningful per solution: ``path`` for texts read
    from disk, ``params`` for generated completions. Both stay None for
    texts passed in directly.
    """

    index: int
    text: str
    path: str | None = None
    params: Mapping[str, object] | None = None


@dataclass(frozen=True)
class SolutionSet:
    """An ordered, non-empty group of solutions to one prompt."""

    solutions: tuple[Solution, ...]
    prompt: str | None = None
    created_at: _dt.datetime = field(
        default_factory=lambda: _dt.datetime.now(_dt.timezone.utc)
    )
    provider: Mapping[str, object] | None = None

    def __post_init__(self) -> None:
        if not self.solutions:
            raise ValueError("a solution set needs at least one solution")
        for position, solution in enumerate(self.solutions):
            if solution.index != position:
                raise ValueError(
                    f"solution indices must run 0..{len(self.solutions) - 1} "
                    f"in order; found index {solution.index} at position {position}"
                )

    def __len__(self) -> int:
        return len(self.solutions)

    def texts(self) -> list[str]:
        return [solution.text for solution in self.solutions]


def solution_set_from_texts(
    texts: Sequence[str], prompt: str | None = None
) -> SolutionSet:
    """Wrap raw texts in a SolutionSet, indexing them in argument order."""
    return SolutionSet(
        solutions=tuple(
            Solution(index=i, text=text) for i, text in enumerate(texts)
        ),
        prompt=prompt,
    )


def load_solutions(
    paths: Sequence[str], prompt: str | None = None
) -> SolutionSet:
    """Read one solution per file, in argument order.

    Files must decode as UTF-8; a failure to read or decode names the
    offending path.
    """
    if not paths:
        raise ValueError("at least one solution file is required")
    solutions = []
    for i, path in enumerate(paths):
        try:
            with open(path, "rb") as handle:
                raw = handle.read()
        except OSError as exc:
            raise SolutionInputError(path, exc.strerror or str(exc)) from exc
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SolutionInputError(
                path, f"invalid UTF-8 at byte offset {exc.start}"
            ) from exc
        solutions.append(Solution(index=i, text=text, path=path))
    return SolutionSet(solutions=tuple(solutions), prompt=prompt)
