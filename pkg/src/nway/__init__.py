"""Compare N candidate solutions to one prompt.

Every solution is diffed against every other; each unit of text (character,
token, or line) is scored by how many counterparts fail to match it, and
the score drives a single-hue color ramp: common text stays plain, unique
text glows brightest. Renderers cover terminals (ANSI), standalone HTML,
and a JSON wire format consumed by the bundled web UI.
"""

from .diffing import DiffOp, DiffScript, diff, equal_mass, matched_in_b
from .errors import (
    EncodingError,
    NwayError,
    PartialResultError,
    ProviderError,
    ProviderUnreachableError,
    SolutionInputError,
)
from .provider import ProviderConfig, generate
from .rendering import (
    JSON_SCHEMA,
    ComparisonDocument,
    build_comparison,
    render_ansi,
    render_html,
)
from .scoring import (
    DEFAULT_SCALE,
    ColorScale,
    HighlightedDocument,
    HighlightSpan,
    Hue,
    UniquenessMap,
    color,
    highlight,
    score,
)
from .solutions import Solution, SolutionSet, load_solutions, solution_set_from_texts
from .units import Unit, UnitKind, UnitMode, segment

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "segment",
    "Unit",
    "UnitKind",
    "UnitMode",
    "diff",
    "DiffOp",
    "DiffScript",
    "matched_in_b",
    "equal_mass",
    "score",
    "color",
    "highlight",
    "Hue",
    "ColorScale",
    "DEFAULT_SCALE",
    "UniquenessMap",
    "HighlightSpan",
    "HighlightedDocument",
    "Solution",
    "SolutionSet",
    "load_solutions",
    "solution_set_from_texts",
    "ProviderConfig",
    "generate",
    "ComparisonDocument",
    "build_comparison",
    "render_ansi",
    "render_html",
    "JSON_SCHEMA",
    "NwayError",
    "EncodingError",
    "SolutionInputError",
    "ProviderError",
    "ProviderUnreachableError",
    "PartialResultError",
]
