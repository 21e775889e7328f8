"""Per-unit uniqueness scores and their color mapping.

Each unit of each solution is scored by how many counterpart solutions fail
to match it: 0 means the unit is common to every counterpart, N-1 means no
counterpart matches it anywhere. Scores map to a single-hue color ramp that
starts at half scale and tops out at full scale, so brighter means more
unique; score 0 text keeps the default foreground color.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diffing import diff, matched_in_b
from .solutions import SolutionSet
from .units import Unit, UnitMode, segment

__all__ = [
    "Hue",
    "ColorScale",
    "UniquenessMap",
    "HighlightSpan",
    "HighlightedDocument",
    "color",
    "score",
    "highlight",
    "DEFAULT_SCALE",
]

RGB = tuple[int, int, int]


class Hue(str, Enum):
    BLUE = "blue"
    RED = "red"
    GREEN = "green"


@dataclass(frozen=True)
class ColorScale:
    """Single-hue ramp: colored levels live in [floor, ceiling]."""

    floor: int = 127
    span: int = 128
    ceiling: int = 255
    hue: Hue = Hue.BLUE
    common_color: RGB = (0, 0, 0)

    def __post_init__(self) -> None:
        if self.floor + self.span != self.ceiling:
            raise ValueError("floor + span must equal ceiling")
        if not 0 <= self.ceiling <= 255:
            raise ValueError("ceiling must fit an 8-bit channel")


DEFAULT_SCALE = ColorScale()


@dataclass(frozen=True)
class UniquenessMap:
    """One integer vector per solution, one entry per unit, values 0..N-1."""

    per_solution: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HighlightSpan:
    """A maximal run of adjacent units sharing one score."""

    text: str
    score: int
    color: RGB


@dataclass(frozen=True)
class HighlightedDocument:
    """One solution's text as colored spans; spans concatenate to the text."""

    index: int
    spans: tuple[HighlightSpan, ...]

    def text(self) -> str:
        return "".join(span.text for span in self.spans)


def color(score_value: int, n: int, scale: ColorScale = DEFAULT_SCALE) -> RGB:
    """Map a uniqueness score to an RGB triple.

    Score 0 is the common color. Positive scores interpolate the hue channel
    from just above half scale to full scale; with five solutions the levels
    are exactly 127 + 32 * score. Halfway values round up.
    """
    if n < 1:
        raise ValueError(f"solution count must be at least 1, got {n}")
    if not 0 <= score_value <= n - 1:
        raise ValueError(
            f"score {score_value} out of range for {n} solution(s)"
        )
    if score_value == 0:
        return scale.common_color
    steps = n - 1
    level = scale.floor + (2 * scale.span * score_value + steps) // (2 * steps)
    level = min(level, scale.ceiling)
    if scale.hue is Hue.RED:
        return (level, 0, 0)
    if scale.hue is Hue.GREEN:
        return (0, level, 0)
    return (0, 0, level)


def score(solutions: SolutionSet, mode: UnitMode = UnitMode.CHAR) -> UniquenessMap:
    """Count, per unit, the counterparts that do not match it."""
    unit_lists = [segment(s.text, mode) for s in solutions.solutions]
    return UniquenessMap(
        per_solution=tuple(tuple(v) for v in _score_units(unit_lists))
    )


def highlight(
    solutions: SolutionSet,
    mode: UnitMode = UnitMode.CHAR,
    scale: ColorScale = DEFAULT_SCALE,
) -> list[HighlightedDocument]:
    """Score a solution set and fold each solution into colored spans.

    Adjacent units with the same score merge into one span, so the span
    list is the minimal representation of the coloring.
    """
    n = len(solutions)
    unit_lists = [segment(s.text, mode) for s in solutions.solutions]
    vectors = _score_units(unit_lists)
    documents = []
    for i, (units, vector) in enumerate(zip(unit_lists, vectors)):
        spans = []
        pos = 0
        while pos < len(units):
            run_score = vector[pos]
            end = pos + 1
            while end < len(units) and vector[end] == run_score:
                end += 1
            spans.append(
                HighlightSpan(
                    text="".join(u.text for u in units[pos:end]),
                    score=run_score,
                    color=color(run_score, n, scale),
                )
            )
            pos = end
        documents.append(HighlightedDocument(index=i, spans=tuple(spans)))
    return documents


def _score_units(unit_lists: list[list[Unit]]) -> list[list[int]]:
    """Uniqueness vectors for pre-segmented solutions.

    For every ordered pair the counterpart is diffed against the scored
    solution, and each unit outside the equal runs picks up one point.
    """
    vectors = [[0] * len(units) for units in unit_lists]
    n = len(unit_lists)
    for i in range(n):
        vector = vectors[i]
        for j in range(n):
            if j == i:
                continue
            mask = matched_in_b(diff(unit_lists[j], unit_lists[i]))
            for k, matched in enumerate(mask):
                if not matched:
                    vector[k] += 1
    return vectors
