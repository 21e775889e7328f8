"""Output formats for a scored comparison.

A ComparisonDocument is the single source for every renderer: it carries
the spans exactly as the scorer produced them, including their colors, so
ANSI, HTML, and JSON output can never disagree about a level. Stripping
markup from any rendering returns each solution text unchanged.
"""

from __future__ import annotations

import html
import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .scoring import (
    DEFAULT_SCALE,
    ColorScale,
    HighlightedDocument,
    HighlightSpan,
    Hue,
    highlight,
)
from .solutions import SolutionSet
from .units import UnitMode

__all__ = [
    "ComparisonDocument",
    "build_comparison",
    "render_ansi",
    "render_html",
    "color_to_hex",
    "hex_to_color",
    "JSON_SCHEMA",
]

SCHEMA_VERSION = 1

RESET = "\x1b[0m"


def color_to_hex(rgb: tuple[int, int, int]) -> str:
    r, g, b = rgb
    return f"#{r:02x}{g:02x}{b:02x}"


def hex_to_color(value: str) -> tuple[int, int, int]:
    if len(value) != 7 or value[0] != "#":
        raise ValueError(f"expected #rrggbb, got {value!r}")
    return (int(value[1:3], 16), int(value[3:5], 16), int(value[5:7], 16))


@dataclass(frozen=True)
class ComparisonDocument:
    """A complete comparison, ready to serialize or render."""

    n: int
    mode: UnitMode
    hue: Hue
    solutions: tuple[HighlightedDocument, ...]
    prompt: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "prompt": self.prompt,
            "n": self.n,
            "mode": self.mode.value,
            "hue": self.hue.value,
            "solutions": [
                {
                    "index": doc.index,
                    "spans": [
                        {
                            "text": span.text,
                            "score": span.score,
                            "color": color_to_hex(span.color),
                        }
                        for span in doc.spans
                    ],
                }
                for doc in self.solutions
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        if indent is None:
            return json.dumps(self.to_dict(), ensure_ascii=False,
                              separators=(",", ":"))
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ComparisonDocument":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(
                f"unsupported document schema: {data.get('schema')!r}"
            )
        solutions = tuple(
            HighlightedDocument(
                index=entry["index"],
                spans=tuple(
                    HighlightSpan(
                        text=span["text"],
                        score=span["score"],
                        color=hex_to_color(span["color"]),
                    )
                    for span in entry["spans"]
                ),
            )
            for entry in data["solutions"]
        )
        return cls(
            n=data["n"],
            mode=UnitMode(data["mode"]),
            hue=Hue(data["hue"]),
            solutions=solutions,
            prompt=data.get("prompt"),
        )

    @classmethod
    def from_json(cls, text: str) -> "ComparisonDocument":
        return cls.from_dict(json.loads(text))


def build_comparison(
    solutions: SolutionSet,
    mode: UnitMode = UnitMode.CHAR,
    scale: ColorScale = DEFAULT_SCALE,
) -> ComparisonDocument:
    """Score a solution set and package the result for rendering."""
    return ComparisonDocument(
        n=len(solutions),
        mode=mode,
        hue=scale.hue,
        solutions=tuple(highlight(solutions, mode, scale)),
        prompt=solutions.prompt,
    )


def render_ansi(document: ComparisonDocument, colored: bool = True) -> str:
    """Terminal output: one block per solution under a rule line.

    Spans with positive scores use 24-bit foreground escapes; score-0 spans
    stay in the default color. ``colored=False`` drops all escapes.
    """
    blocks = []
    for doc in document.solutions:
        parts = [f"── solution {doc.index + 1} ──\n"]
        for span in doc.spans:
            if colored and span.score > 0:
                r, g, b = span.color
                parts.append(f"\x1b[38;2;{r};{g};{b}m{span.text}{RESET}")
            else:
                parts.append(span.text)
        blocks.append("".join(parts))
    return "\n".join(blocks)


_HTML_STYLE = """\
body { font-family: sans-serif; margin: 1.5rem; background: #ffffff; color: #000000; }
h1 { font-size: 1.2rem; }
p.prompt { color: #444444; }
main.panels { display: flex; gap: 1rem; align-items: flex-start; overflow-x: auto; }
section.panel { flex: 1 0 18rem; min-width: 0; }
section.panel h2 { font-size: 0.9rem; font-weight: normal; color: #666666; }
pre.solution { font-family: monospace; border: 1px solid #dddddd; padding: 0.75rem; overflow-x: auto; margin: 0; }
"""


def render_html(document: ComparisonDocument) -> str:
    """Standalone HTML: side-by-side panels, inline styles, no assets.

    Output bytes are a pure function of the document, so golden-file tests
    stay stable.
    """
    lines = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        "<title>solution comparison</title>",
        "<style>",
        _HTML_STYLE + "</style>",
        "</head>",
        "<body>",
        "<h1>solution comparison</h1>",
    ]
    if document.prompt is not None:
        lines.append(f'<p class="prompt">{html.escape(document.prompt)}</p>')
    lines.append(
        f'<p class="meta">{document.n} solutions · unit: '
        f"{html.escape(document.mode.value)} · hue: "
        f"{html.escape(document.hue.value)}</p>"
    )
    lines.append('<main class="panels">')
    for doc in document.solutions:
        lines.append('<section class="panel">')
        lines.append(f"<h2>solution {doc.index + 1}</h2>")
        pieces = []
        for span in doc.spans:
            escaped = html.escape(span.text, quote=False)
            if span.score > 0:
                pieces.append(
                    f'<span style="color:{color_to_hex(span.color)}">'
                    f"{escaped}</span>"
                )
            else:
                pieces.append(escaped)
        lines.append(f'<pre class="solution">{"".join(pieces)}</pre>')
        lines.append("</section>")
    lines.append("</main>")
    lines.append("</body>")
    lines.append("</html>")
    return "\n".join(lines) + "\n"


JSON_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Solution comparison document",
    "type": "object",
    "required": ["schema", "prompt", "n", "mode", "hue", "solutions"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "prompt": {"type": ["string", "null"]},
        "n": {"type": "integer", "minimum": 1},
        "mode": {"enum": [m.value for m in UnitMode]},
        "hue": {"enum": [h.value for h in Hue]},
        "solutions": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["index", "spans"],
                "additionalProperties": False,
                "properties": {
                    "index": {"type": "integer", "minimum": 0},
                    "spans": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["text", "score", "color"],
                            "additionalProperties": False,
                            "properties": {
                                "text": {"type": "string", "minLength": 1},
                                "score": {"type": "integer", "minimum": 0},
                                "color": {
                                    "type": "string",
                                    "pattern": "^#[0-9a-f]{6}$",
                                },
                            },
                        },
                    },
                },
            },
        },
    },
}
